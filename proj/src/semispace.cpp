#include "maxmin/semispace.hpp"

#include <algorithm>
#include <numeric>

#include "maxmin/errors.hpp"

namespace maxmin {

std::vector<std::size_t> sort_permutation(const Point& p) {
  std::vector<std::size_t> perm(p.dim());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return p[b] < p[a]; });
  return perm;
}

BlockStructure block_structure(const Point& p, const std::vector<std::size_t>& sort_perm) {
  BlockStructure out;
  std::size_t pos = 0;
  while (pos < sort_perm.size()) {
    std::size_t run = 1;
    while (pos + run < sort_perm.size() && p[sort_perm[pos + run]] == p[sort_perm[pos]]) ++run;
    if (run >= 2) {
      out.k.push_back(run);
      out.l.push_back(0);
    } else if (out.k.empty()) {
      out.k.push_back(0);
      out.l.push_back(1);
    } else {
      ++out.l.back();
    }
    pos += run;
  }
  std::size_t prev_L = 0;
  for (std::size_t j = 0; j < out.k.size(); ++j) {
    out.K.push_back(prev_L + out.k[j]);
    out.L.push_back(out.K.back() + out.l[j]);
    prev_L = out.L.back();
  }
  return out;
}

std::vector<std::size_t> index_set(const Point& p, const SemiringBounds& bounds) {
  std::vector<std::size_t> out;
  const bool has_unity = std::any_of(p.begin(), p.end(), [&](const Value& v) { return v == bounds.hi; });
  if (!has_unity) out.push_back(0);
  for (std::size_t m = 0; m < p.dim(); ++m) {
    if (bounds.lo < p[m]) out.push_back(m + 1);
  }
  return out;
}

namespace {

SemispaceId build(const Point& p, const std::vector<std::size_t>& perm, std::size_t index) {
  SemispaceId s{p, perm, index, {}};
  if (index > 0) {
    const Value& pm = p[index - 1];
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (p[k] < pm) s.below.push_back(k);
    }
  }
  return s;
}

void check_anchor(const Point& p, const SemiringBounds& bounds) {
  if (p.dim() == 0) throw PreconditionError("semispace anchor needs at least one coordinate");
  if (!p.within(bounds)) throw DomainError("semispace anchor " + p.str() + " outside the bounds");
}

}  // namespace

const SemispaceId* SemispaceFamily::find(std::size_t index) const {
  for (const auto& s : members) {
    if (s.index == index) return &s;
  }
  return nullptr;
}

SemispaceFamily semispace_family(const Point& p, const SemiringBounds& bounds) {
  check_anchor(p, bounds);
  SemispaceFamily f;
  f.anchor = p;
  f.bounds = bounds;
  f.sort_perm = sort_permutation(p);
  f.blocks = block_structure(p, f.sort_perm);
  for (auto i : index_set(p, bounds)) f.members.push_back(build(p, f.sort_perm, i));
  return f;
}

SemispaceId make_semispace(const Point& p, std::size_t index, const SemiringBounds& bounds) {
  check_anchor(p, bounds);
  const auto idx = index_set(p, bounds);
  if (std::find(idx.begin(), idx.end(), index) == idx.end()) {
    throw PreconditionError("index " + std::to_string(index) + " is not in I(p) for p = " + p.str());
  }
  return build(p, sort_permutation(p), index);
}

bool semispace_contains(const SemispaceId& s, const Point& q) {
  require_same_dimension(s.dim(), q.dim(), "semispace_contains");
  const Point& p = s.anchor;
  if (s.index == 0) {
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (p[k] < q[k]) return true;
    }
    return false;
  }
  const std::size_t m = s.index - 1;
  if (q[m] < p[m]) return true;
  return std::any_of(s.below.begin(), s.below.end(), [&](std::size_t k) { return p[k] < q[k]; });
}

bool sector_contains(const SemispaceId& s, const Point& q) { return !semispace_contains(s, q); }

bool sector_contains(const SemispaceId& s, const Box& b) {
  require_same_dimension(s.dim(), b.dim(), "sector_contains");
  const Point& p = s.anchor;
  if (s.index == 0) return leq(b.upper, p);
  const std::size_t m = s.index - 1;
  if (b.lower[m] < p[m]) return false;
  return std::all_of(s.below.begin(), s.below.end(), [&](std::size_t k) { return b.upper[k] <= p[k]; });
}

bool semispace_closure_contains(const SemispaceId& s, const Point& q) {
  require_same_dimension(s.dim(), q.dim(), "semispace_closure_contains");
  const Point& p = s.anchor;
  if (s.index == 0) {
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (p[k] <= q[k]) return true;
    }
    return false;
  }
  const std::size_t m = s.index - 1;
  if (q[m] <= p[m]) return true;
  return std::any_of(s.below.begin(), s.below.end(), [&](std::size_t k) { return p[k] <= q[k]; });
}

Box sector_box(const SemispaceId& s, const SemiringBounds& bounds) {
  const Point& p = s.anchor;
  std::vector<Value> lower(p.dim(), bounds.lo);
  std::vector<Value> upper(p.dim(), bounds.hi);
  if (s.index == 0) return Box(Point(std::move(lower)), p);
  lower[s.index - 1] = p[s.index - 1];
  for (auto k : s.below) upper[k] = p[k];
  return Box(Point(std::move(lower)), Point(std::move(upper)));
}

HyperplaneSides hyperplane_eval(const Hyperplane& h, const Point& x) {
  if (h.a.size() != h.b.size()) throw DimensionMismatch("hyperplane sides have different lengths");
  require_same_dimension(h.dim(), x.dim(), "hyperplane_eval");
  const std::size_t d = x.dim();
  Value lhs = h.a[d];
  Value rhs = h.b[d];
  for (std::size_t i = 0; i < d; ++i) {
    lhs = max(lhs, min(h.a[i], x[i]));
    rhs = max(rhs, min(h.b[i], x[i]));
  }
  return {lhs, rhs};
}

bool hyperplane_contains(const Hyperplane& h, const Point& x) {
  const auto [lhs, rhs] = hyperplane_eval(h, x);
  return lhs == rhs;
}

Hyperplane diagonal_closure_hyperplane(const Point& p, std::size_t index, const SemiringBounds& bounds) {
  check_anchor(p, bounds);
  if (!p.on_diagonal()) throw NotOnDiagonal("no hyperplane equals a semispace closure at off-diagonal " + p.str());
  make_semispace(p, index, bounds);
  const std::size_t d = p.dim();
  const Value& c = p[0];
  Hyperplane h;
  if (index == 0) {
    // max(x_1..x_d, c) = max(x_1..x_d)  <=>  max_k x_k >= c
    h.a.assign(d + 1, bounds.hi);
    h.b.assign(d + 1, bounds.hi);
    h.a[d] = c;
    h.b[d] = bounds.lo;
    return h;
  }
  // x_m = min(c, x_m)  <=>  x_m <= c
  h.a.assign(d + 1, bounds.lo);
  h.b.assign(d + 1, bounds.lo);
  h.a[index - 1] = bounds.hi;
  h.b[index - 1] = c;
  return h;
}

}  // namespace maxmin
