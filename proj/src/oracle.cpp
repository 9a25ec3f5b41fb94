#include "maxmin/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "maxmin/errors.hpp"

namespace maxmin::oracle {

namespace {

Value t_apply(TNorm::Kind kind, const Value& a, const Value& b) {
  switch (kind) {
    case TNorm::Kind::Min: return b < a ? b : a;
    case TNorm::Kind::Product: return a * b;
    case TNorm::Kind::Lukasiewicz: {
      const Value s = a + b - Value(1);
      return s < Value(0) ? Value(0) : s;
    }
  }
  return a;
}

void guard(bool ok, const std::string& what) {
  if (!ok) throw SizeGuardExceeded("oracle size guard: " + what);
}

void guard_points(const std::vector<Point>& x) {
  guard(!x.empty(), "no generators");
  guard(x.size() <= kMaxGenerators, std::to_string(x.size()) + " generators > " + std::to_string(kMaxGenerators));
  guard(x.front().dim() <= kMaxDimension,
        "dimension " + std::to_string(x.front().dim()) + " > " + std::to_string(kMaxDimension));
  for (const auto& p : x) {
    if (p.dim() != x.front().dim()) throw DimensionMismatch("oracle: generators of different dimensions");
  }
}

void guard_tuples(std::size_t base, std::size_t len) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    total *= base;
    guard(total <= kMaxTuples, "more than " + std::to_string(kMaxTuples) + " coefficient tuples");
  }
}

// Calls f on every tuple of grid indices of the given length whose maximum
// is the last grid value (hi); stops when f returns true.
template <class F>
bool for_each_normalized(std::size_t grid_size, std::size_t len, F&& f) {
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    if (std::find(idx.begin(), idx.end(), grid_size - 1) != idx.end() && f(idx)) return true;
    std::size_t k = len;
    while (k > 0) {
      --k;
      if (++idx[k] < grid_size) break;
      idx[k] = 0;
      if (k == 0) return false;
    }
    if (len == 0) return false;
  }
}

Point combine(const std::vector<Point>& x, const std::vector<Value>& g, const std::vector<std::size_t>& idx,
              TNorm::Kind kind, const Value& lo) {
  const std::size_t d = x.front().dim();
  std::vector<Value> z(d, lo);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Value term = t_apply(kind, g[idx[i]], x[i][k]);
      if (z[k] < term) z[k] = term;
    }
  }
  return Point(std::move(z));
}

}  // namespace

std::vector<Value> GridSpec::values() const {
  std::vector<Value> out(base.begin(), base.end());
  out.push_back(bounds.lo);
  out.push_back(bounds.hi);
  if (Value(0) < step) {
    for (Value v = bounds.lo; v < bounds.hi; v += step) {
      out.push_back(v);
      guard(out.size() <= 4 * kMaxGridValues, "grid step too fine");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  guard(out.size() <= kMaxGridValues,
        std::to_string(out.size()) + " grid values > " + std::to_string(kMaxGridValues));
  for (const auto& v : out) {
    if (v < bounds.lo || bounds.hi < v) throw DomainError("oracle grid value " + v.str() + " outside the bounds");
  }
  return out;
}

GridSpec GridSpec::from_points(const std::vector<Point>& points, const SemiringBounds& bounds) {
  GridSpec g;
  g.bounds = bounds;
  for (const auto& p : points) g.base.insert(g.base.end(), p.begin(), p.end());
  return g;
}

GridSpec GridSpec::uniform(const Value& step, const SemiringBounds& bounds) {
  GridSpec g;
  g.step = step;
  g.bounds = bounds;
  return g;
}

bool brute_hull_member(const Point& p, const std::vector<Point>& x, const TNorm& t, const GridSpec& grid) {
  guard_points(x);
  if (p.dim() != x.front().dim()) throw DimensionMismatch("brute_hull_member: dimension mismatch");
  const auto g = grid.values();
  guard_tuples(g.size(), x.size());
  return for_each_normalized(g.size(), x.size(), [&](const std::vector<std::size_t>& idx) {
    return combine(x, g, idx, t.kind(), grid.bounds.lo) == p;
  });
}

std::vector<Point> brute_hull_points(const std::vector<Point>& x, const TNorm& t, const GridSpec& grid) {
  guard_points(x);
  const auto g = grid.values();
  guard_tuples(g.size(), x.size());
  std::vector<Point> out;
  for_each_normalized(g.size(), x.size(), [&](const std::vector<std::size_t>& idx) {
    out.push_back(combine(x, g, idx, t.kind(), grid.bounds.lo));
    return false;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point> brute_segment(const Point& x, const Point& y, const GridSpec& grid) {
  return brute_hull_points({x, y}, TNorm::min(grid.bounds), grid);
}

Value brute_bottleneck(const std::vector<std::vector<Value>>& rows) {
  guard(!rows.empty(), "empty matrix");
  const std::size_t d = rows.front().size();
  guard(d >= 1 && d <= kMaxDimension, "matrix width " + std::to_string(d));
  if (rows.size() != d + 1) throw PreconditionError("brute_bottleneck needs d+1 rows of length d");
  std::optional<Value> best;
  for (std::size_t dropped = 0; dropped <= d; ++dropped) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i <= d; ++i) {
      if (i != dropped) kept.push_back(i);
    }
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      Value weight = rows[kept[0]][perm[0]];
      for (std::size_t k = 1; k < d; ++k) {
        const Value& e = rows[kept[k]][perm[k]];
        if (e < weight) weight = e;
      }
      if (!best || *best < weight) best = weight;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return *best;
}

}  // namespace maxmin::oracle
