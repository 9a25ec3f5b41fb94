#include "maxmin/maxt.hpp"

#include <algorithm>
#include <functional>

#include "maxmin/errors.hpp"
#include "maxmin/grid.hpp"

namespace maxmin {

namespace {

void check_points(const std::vector<Point>& pts, const TNorm& t, const char* what) {
  if (pts.empty()) throw PreconditionError(std::string(what) + ": no points");
  for (const auto& p : pts) {
    require_same_dimension(pts.front().dim(), p.dim(), what);
    if (!p.within(t.bounds())) throw DomainError(std::string(what) + ": point " + p.str() + " outside the bounds");
  }
}

Polytope subset(const std::vector<Point>& x, const std::vector<std::size_t>& idx) {
  std::vector<Point> pts;
  for (auto i : idx) pts.push_back(x[i]);
  return Polytope(std::move(pts));
}

// Every k-subset of {0..n-1} in lexicographic order; stops when f returns true.
bool for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  if (k > n) return false;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (f(c)) return true;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Vertices of one leg {max(a, T(mu, b)) : mu in bounds} of a two-point hull.
std::vector<Point> leg_vertices(const Point& a, const Point& b, const TNorm& t) {
  const auto& bd = t.bounds();
  std::vector<Value> mus{bd.lo, bd.hi};
  for (std::size_t k = 0; k < a.dim(); ++k) {
    mus.push_back(t.residual(b[k], a[k]));
    for (const auto& kink : t.kinks(b[k])) {
      if (bd.contains(kink)) mus.push_back(kink);
    }
  }
  std::sort(mus.begin(), mus.end());
  mus.erase(std::unique(mus.begin(), mus.end()), mus.end());
  std::vector<Point> out;
  for (const auto& mu : mus) {
    std::vector<Value> z(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) z[k] = max(a[k], t.apply(mu, b[k]));
    Point p(std::move(z));
    if (out.empty() || out.back() != p) out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<Point>> pair_curves(const Point& a, const Point& b, const TNorm& t) {
  return {leg_vertices(a, b, t), leg_vertices(b, a, t)};
}

// Exact intersection of segments [p0,p1] and [q0,q1] when they cross at a single point.
std::optional<Point> crossing(const Point& p0, const Point& p1, const Point& q0, const Point& q1) {
  const std::size_t d = p0.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Value dpi = p1[i] - p0[i], dpj = p1[j] - p0[j];
      const Value dqi = q1[i] - q0[i], dqj = q1[j] - q0[j];
      const Value wi = q0[i] - p0[i], wj = q0[j] - p0[j];
      const Value det = dqi * dpj - dpi * dqj;
      if (det == Value(0)) continue;
      const Value s = (dqi * wj - wi * dqj) / det;
      const Value u = (dpi * wj - wi * dpj) / det;
      if (s < Value(0) || Value(1) < s || u < Value(0) || Value(1) < u) return std::nullopt;
      std::vector<Value> z(d);
      for (std::size_t k = 0; k < d; ++k) {
        z[k] = p0[k] + s * (p1[k] - p0[k]);
        if (z[k] != q0[k] + u * (q1[k] - q0[k])) return std::nullopt;
      }
      return Point(std::move(z));
    }
  }
  return std::nullopt;
}

// Generators, vertices of two-point hull curves, and crossings between the
// curves of the two parts. For d <= 2 a common point of the two hulls, if
// any, is among these.
std::vector<Point> radon_candidates(const std::vector<Point>& x, const std::vector<std::size_t>& first,
                                    const std::vector<std::size_t>& second, const TNorm& t) {
  std::vector<Point> out(x.begin(), x.end());
  auto curves_of = [&](const std::vector<std::size_t>& part) {
    std::vector<std::vector<Point>> cs;
    if (part.size() == 2) cs = pair_curves(x[part[0]], x[part[1]], t);
    return cs;
  };
  const auto ca = curves_of(first);
  const auto cb = curves_of(second);
  for (const auto* cs : {&ca, &cb}) {
    for (const auto& poly : *cs) out.insert(out.end(), poly.begin(), poly.end());
  }
  for (const auto& pa : ca) {
    for (const auto& pb : cb) {
      for (std::size_t i = 0; i + 1 < pa.size(); ++i) {
        for (std::size_t j = 0; j + 1 < pb.size(); ++j) {
          if (auto z = crossing(pa[i], pa[i + 1], pb[j], pb[j + 1])) out.push_back(std::move(*z));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

MaxTMembership hull_member_maxt(const Point& p, const Polytope& x, const TNorm& t) {
  if (x.empty()) throw PreconditionError("hull_member_maxt: empty polytope");
  require_same_dimension(p.dim(), x.dim(), "hull_member_maxt");
  MaxTMembership out;
  std::vector<Value> combo(p.dim(), t.bounds().lo);
  Value top = t.bounds().lo;
  for (const auto& g : x) {
    require_same_dimension(p.dim(), g.dim(), "hull_member_maxt");
    Value lambda = t.bounds().hi;
    for (std::size_t j = 0; j < p.dim(); ++j) lambda = min(lambda, t.residual(g[j], p[j]));
    for (std::size_t j = 0; j < p.dim(); ++j) combo[j] = max(combo[j], t.apply(lambda, g[j]));
    top = max(top, lambda);
    out.lambda.push_back(lambda);
  }
  out.member = top == t.bounds().hi && Point(std::move(combo)) == p;
  return out;
}

std::vector<Value> witness_values(const std::vector<Point>& points, const TNorm& t, const SearchOptions& opt) {
  auto values = coordinate_values(std::span<const Point>(points), t.bounds());
  if (t.is_min()) return values;
  return with_uniform_step(values, opt.step, t.bounds());
}

RadonPartition radon_partition(const std::vector<Point>& x, const TNorm& t, const SearchOptions& opt) {
  check_points(x, t, "radon_partition");
  const std::size_t n = x.size();
  const std::size_t d = x.front().dim();
  if (n != d + 2) {
    throw PreconditionError("radon_partition needs d+2 = " + std::to_string(d + 2) + " points, got " +
                            std::to_string(n));
  }
  auto rest_of = [&](std::size_t a) {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != a) r.push_back(i);
    }
    return r;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (x[a] == x[b]) return {{a}, rest_of(a), x[a], true};
    }
  }

  // Partitions as masks over the first n-1 points; the last point always goes second.
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> parts;
  for (std::size_t mask = 1; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<std::size_t> first, second;
    for (std::size_t i = 0; i < n; ++i) {
      ((i + 1 < n && (mask >> i) & 1) ? first : second).push_back(i);
    }
    parts.emplace_back(std::move(first), std::move(second));
  }
  auto common = [&](const Point& q, const Polytope& pa, const Polytope& pb) {
    return hull_member_maxt(q, pa, t).member && hull_member_maxt(q, pb, t).member;
  };

  for (const auto& [first, second] : parts) {
    const Polytope pa = subset(x, first), pb = subset(x, second);
    for (const auto& q : radon_candidates(x, first, second, t)) {
      if (common(q, pa, pb)) return {first, second, q, true};
    }
  }
  const CandidateGrid grid(d, witness_values(x, t, opt));
  for (const auto& [first, second] : parts) {
    const Polytope pa = subset(x, first), pb = subset(x, second);
    if (auto q = grid.find_first([&](const Point& y) { return common(y, pa, pb); }, opt.execution)) {
      return {first, second, *q, t.is_min()};
    }
  }
  if (t.is_min()) throw SoundnessViolation("no Radon partition on the exact Min grid");
  throw ResolutionExhausted("radon_partition: no witness for the " + t.name() + " T-norm at grid step " +
                            opt.step.str());
}

HellyResult helly_check(const std::vector<Polytope>& family, const TNorm& t, const SearchOptions& opt) {
  if (family.empty()) throw PreconditionError("helly_check: empty family");
  std::vector<Point> all;
  for (const auto& poly : family) {
    if (poly.empty()) throw PreconditionError("helly_check: empty member");
    all.insert(all.end(), poly.begin(), poly.end());
  }
  check_points(all, t, "helly_check");
  const std::size_t d = all.front().dim();
  const CandidateGrid grid(d, witness_values(all, t, opt));
  auto common_of = [&](const std::vector<std::size_t>& members) {
    return grid.find_first(
        [&](const Point& y) {
          return std::all_of(members.begin(), members.end(),
                             [&](std::size_t m) { return hull_member_maxt(y, family[m], t).member; });
        },
        opt.execution);
  };

  HellyResult out;
  const std::size_t n = family.size();
  if (n > d + 1) {
    std::vector<std::size_t> bad;
    const bool found = for_each_combination(n, d + 1, [&](const std::vector<std::size_t>& c) {
      if (common_of(c)) return false;
      bad = c;
      return true;
    });
    if (found) {
      out.counterexample = bad;
      return out;
    }
  }
  std::vector<std::size_t> everyone(n);
  for (std::size_t i = 0; i < n; ++i) everyone[i] = i;
  out.common = common_of(everyone);
  if (out.common) return out;
  if (n <= d + 1) {
    out.counterexample = everyone;
    return out;
  }
  if (t.is_min()) throw SoundnessViolation("Helly hypothesis holds on the exact grid but no common point was found");
  throw ResolutionExhausted("helly_check: no common point for the " + t.name() + " T-norm at grid step " +
                            opt.step.str());
}

std::size_t centerpoint_subset_size(std::size_t n, std::size_t d) { return d * n / (d + 1) + 1; }

bool verifies_centerpoint(const Point& c, const std::vector<Point>& p, const TNorm& t) {
  const std::size_t m0 = centerpoint_subset_size(p.size(), c.dim());
  return !for_each_combination(p.size(), m0, [&](const std::vector<std::size_t>& s) {
    return !hull_member_maxt(c, subset(p, s), t).member;
  });
}

Point centerpoint(const std::vector<Point>& p, const TNorm& t, const SearchOptions& opt) {
  check_points(p, t, "centerpoint");
  const std::size_t d = p.front().dim();
  const std::size_t m0 = centerpoint_subset_size(p.size(), d);
  std::vector<Polytope> subsets;
  for_each_combination(p.size(), m0, [&](const std::vector<std::size_t>& s) {
    subsets.push_back(subset(p, s));
    return false;
  });
  const CandidateGrid grid(d, witness_values(p, t, opt));
  auto hit = grid.find_first(
      [&](const Point& y) {
        return std::all_of(subsets.begin(), subsets.end(),
                           [&](const Polytope& s) { return hull_member_maxt(y, s, t).member; });
      },
      opt.execution);
  if (hit) return *hit;
  if (t.is_min()) throw SoundnessViolation("no centerpoint on the exact Min grid");
  throw ResolutionExhausted("centerpoint: nothing found for the " + t.name() + " T-norm at grid step " +
                            opt.step.str());
}

bool is_prime_power(std::size_t r) {
  if (r < 2) return false;
  for (std::size_t q = 2; q * q <= r; ++q) {
    if (r % q != 0) continue;
    while (r % q == 0) r /= q;
    return r == 1;
  }
  return true;
}

TverbergResult tverberg_search(const std::vector<Point>& x, std::size_t r, const TNorm& t,
                               const SearchOptions& opt) {
  check_points(x, t, "tverberg_search");
  const std::size_t d = x.front().dim();
  if (r < 2) throw PreconditionError("tverberg_search needs r >= 2");
  if (x.size() != (d + 1) * (r - 1) + 1) {
    throw PreconditionError("tverberg_search needs (d+1)(r-1)+1 = " + std::to_string((d + 1) * (r - 1) + 1) +
                            " points, got " + std::to_string(x.size()));
  }
  TverbergResult out;
  if (r == 2) {
    try {
      auto rp = radon_partition(x, t, opt);
      out.found = true;
      out.blocks = {rp.first, rp.second};
      out.witness = rp.witness;
    } catch (const ResolutionExhausted&) {
    }
    return out;
  }

  const CandidateGrid grid(d, witness_values(x, t, opt));
  const std::size_t n = x.size();
  std::vector<std::size_t> label(n, 0);
  // Restricted growth strings: label[i] <= 1 + max(label[0..i-1]).
  std::function<bool(std::size_t, std::size_t)> visit = [&](std::size_t i, std::size_t used) -> bool {
    if (i == n) {
      if (used != r) return false;
      std::vector<std::vector<std::size_t>> blocks(r);
      for (std::size_t k = 0; k < n; ++k) blocks[label[k]].push_back(k);
      std::vector<Polytope> hulls;
      for (const auto& b : blocks) hulls.push_back(subset(x, b));
      auto in_all = [&](const Point& y) {
        return std::all_of(hulls.begin(), hulls.end(),
                           [&](const Polytope& h) { return hull_member_maxt(y, h, t).member; });
      };
      std::optional<Point> w;
      for (const auto& g : x) {
        if (in_all(g)) {
          w = g;
          break;
        }
      }
      if (!w) w = grid.find_first(in_all, opt.execution);
      if (!w) return false;
      out.found = true;
      out.blocks = std::move(blocks);
      out.witness = std::move(w);
      return true;
    }
    // Remaining points must be able to open the missing blocks.
    if (r - used > n - i) return false;
    for (std::size_t b = 0; b <= used && b < r; ++b) {
      label[i] = b;
      if (visit(i + 1, std::max(used, b + 1))) return true;
    }
    return false;
  };
  visit(0, 0);
  out.soundness_alarm = !out.found && t.is_min() && is_prime_power(r);
  return out;
}

}  // namespace maxmin
