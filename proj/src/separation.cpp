#include "maxmin/separation.hpp"

#include <algorithm>

#include "maxmin/errors.hpp"
#include "maxmin/grid.hpp"
#include "maxmin/hull.hpp"

namespace maxmin {

namespace {

std::vector<Value> box_grid_values(const Box& b, const Polytope& c, const SemiringBounds& bounds) {
  std::vector<Point> pts(c.begin(), c.end());
  pts.push_back(b.lower);
  pts.push_back(b.upper);
  return coordinate_values(std::span<const Point>(pts), bounds);
}

void check_inputs(const Box& b, const Polytope& c, const SemiringBounds& bounds, const char* what) {
  if (c.empty()) throw PreconditionError(std::string(what) + ": empty polytope");
  require_same_dimension(b.dim(), c.dim(), what);
  if (!b.within(bounds)) throw DomainError(std::string(what) + ": box outside the bounds");
  for (const auto& g : c) {
    require_same_dimension(b.dim(), g.dim(), what);
    if (!g.within(bounds)) throw DomainError(std::string(what) + ": generator " + g.str() + " outside the bounds");
  }
}

}  // namespace

PointSeparation separate_point(const Point& p, const Polytope& c, const SemiringBounds& bounds) {
  const auto family = semispace_family(p, bounds);
  const auto m = hull_member(p, c, bounds);
  PointSeparation out;
  if (m.member) {
    out.in_hull = true;
    return out;
  }
  const SemispaceId* s = family.find(*m.separating_index);
  for (const auto& g : c) {
    if (!semispace_contains(*s, g)) throw SoundnessViolation("separating semispace misses a generator");
  }
  out.semispace = *s;
  return out;
}

std::optional<Point> box_hull_intersection(const Box& b, const Polytope& c, const SemiringBounds& bounds,
                                           Execution ex) {
  check_inputs(b, c, bounds, "box_hull_intersection");
  const auto values = box_grid_values(b, c, bounds);
  std::vector<std::vector<Value>> axes(b.dim());
  for (std::size_t k = 0; k < b.dim(); ++k) {
    for (const auto& v : values) {
      if (b.lower[k] <= v && v <= b.upper[k]) axes[k].push_back(v);
    }
  }
  const CandidateGrid grid(std::move(axes));
  return grid.find_first([&](const Point& y) { return in_hull(y, c, bounds); }, ex);
}

SepConditionReport sep_condition(const Box& b, const Polytope& c, const SemiringBounds& bounds, Execution ex) {
  check_inputs(b, c, bounds, "sep_condition");
  if (auto y = box_hull_intersection(b, c, bounds, ex)) {
    throw PreconditionError("box meets the hull at " + y->str());
  }
  SepConditionReport out;
  out.order = sort_permutation(b.upper);
  const std::size_t d = b.dim();
  for (std::size_t t = 1; t <= d; ++t) {
    const Value& top = b.upper[out.order[t - 1]];
    bool ok = true;
    for (std::size_t i = 0; i < t && ok; ++i) ok = b.lower[out.order[i]] <= top;
    if (ok) out.t_b = t;
  }
  if (b.upper[out.order[0]] != bounds.hi) return out;

  // Midpoints make the grid exact for the strict comparison y_l > upper_l.
  const auto values = with_midpoints(box_grid_values(b, c, bounds));
  std::vector<std::vector<Value>> axes(d);
  for (std::size_t k = 0; k < d; ++k) {
    for (const auto& v : values) {
      if (b.lower[k] <= v) axes[k].push_back(v);
    }
  }
  std::vector<std::size_t> leading(out.order.begin(), out.order.begin() + static_cast<std::ptrdiff_t>(out.t_b));
  const CandidateGrid grid(std::move(axes));
  out.violation = grid.find_first(
      [&](const Point& y) {
        const bool exceeds =
            std::any_of(leading.begin(), leading.end(), [&](std::size_t l) { return b.upper[l] < y[l]; });
        return exceeds && in_hull(y, c, bounds);
      },
      ex);
  out.holds = !out.violation;
  return out;
}

bool sep_condition_holds(const Box& b, const Polytope& c, const SemiringBounds& bounds) {
  return sep_condition(b, c, bounds).holds;
}

bool verifies_box_separation(const SemispaceId& s, const Box& b, const Polytope& c) {
  for (const auto& g : c) {
    if (!semispace_contains(s, g)) return false;
  }
  const auto corners = b.corners();
  return std::all_of(corners.begin(), corners.end(), [&](const Point& q) { return sector_contains(s, q); });
}

BoxSeparation separate_box(const Box& b, const Polytope& c, const SemiringBounds& bounds, Execution ex) {
  BoxSeparation out;
  out.condition = sep_condition(b, c, bounds, ex);
  const std::size_t d = b.dim();

  // Every sector containing B contains one of these d+1 minimal sectors:
  // S_0 anchored at the upper corner, and S_m anchored where coordinate m
  // takes the lower bound and every other coordinate its upper bound.
  for (std::size_t i = 0; i <= d; ++i) {
    Point anchor = b.upper;
    if (i > 0) anchor[i - 1] = b.lower[i - 1];
    const auto idx = index_set(anchor, bounds);
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) continue;
    const SemispaceId s = make_semispace(anchor, i, bounds);
    if (verifies_box_separation(s, b, c)) {
      out.separable = true;
      out.semispace = s;
      return out;
    }
  }
  if (out.condition.holds) {
    throw SoundnessViolation("separation condition holds but no separating semispace was found");
  }
  return out;
}

HyperplaneSeparation separate_by_hyperplane(const Point& p, const Polytope& c, const SemiringBounds& bounds) {
  HyperplaneSeparation out;
  if (p.dim() == 0 || !p.on_diagonal()) {
    out.status = HyperplaneSeparation::Status::NotOnDiagonal;
    return out;
  }
  const auto sep = separate_point(p, c, bounds);
  if (sep.in_hull) {
    out.status = HyperplaneSeparation::Status::InHull;
    return out;
  }
  // p lies on the closure of its own semispace, so the anchor moves halfway
  // towards the generators along the diagonal.
  const std::size_t i = sep.semispace->index;
  const Value& level = p[0];
  Value nearest;
  if (i == 0) {
    nearest = bounds.hi;
    for (const auto& g : c) nearest = min(nearest, *std::max_element(g.begin(), g.end()));
  } else {
    nearest = bounds.lo;
    for (const auto& g : c) nearest = max(nearest, g[i - 1]);
  }
  const Point y = Point::diagonal(p.dim(), (level + nearest) / Value(2));
  Hyperplane h = diagonal_closure_hyperplane(y, i, bounds);
  for (const auto& g : c) {
    if (!hyperplane_contains(h, g)) throw SoundnessViolation("hyperplane misses generator " + g.str());
  }
  if (hyperplane_contains(h, p)) throw SoundnessViolation("hyperplane passes through the separated point");
  out.status = HyperplaneSeparation::Status::Separated;
  out.hyperplane = std::move(h);
  out.anchor = y;
  out.index = i;
  return out;
}

}  // namespace maxmin
