#include "maxmin/hull.hpp"

#include <algorithm>

#include "maxmin/errors.hpp"
#include "maxmin/grid.hpp"

namespace maxmin {

namespace {

void check_polytope(const Polytope& x, std::size_t d, const SemiringBounds& bounds, const char* what) {
  if (x.empty()) throw PreconditionError(std::string(what) + ": empty polytope");
  for (const auto& g : x) {
    require_same_dimension(d, g.dim(), what);
    if (!g.within(bounds)) throw DomainError(std::string(what) + ": generator " + g.str() + " outside the bounds");
  }
}

}  // namespace

HullMembership hull_member(const SemispaceFamily& family, const Polytope& x) {
  HullMembership out;
  for (const auto& s : family.members) {
    std::optional<std::size_t> hit;
    for (std::size_t g = 0; g < x.size(); ++g) {
      if (sector_contains(s, x[g])) {
        hit = g;
        break;
      }
    }
    if (!hit) {
      out.witnesses.clear();
      out.separating_index = s.index;
      return out;
    }
    out.witnesses.push_back({s.index, *hit});
  }
  out.member = true;
  return out;
}

HullMembership hull_member(const Point& p, const Polytope& x, const SemiringBounds& bounds) {
  check_polytope(x, p.dim(), bounds, "hull_member");
  return hull_member(semispace_family(p, bounds), x);
}

bool in_hull(const Point& p, const Polytope& x, const SemiringBounds& bounds) {
  return hull_member(p, x, bounds).member;
}

Polytope caratheodory_reduce(const Point& p, const Polytope& x, const SemiringBounds& bounds) {
  const auto m = hull_member(p, x, bounds);
  if (!m.member) throw PreconditionError("caratheodory_reduce: " + p.str() + " is not in the hull");
  std::vector<std::size_t> picked;
  for (const auto& w : m.witnesses) {
    if (std::find(picked.begin(), picked.end(), w.generator) == picked.end()) picked.push_back(w.generator);
  }
  std::sort(picked.begin(), picked.end());
  Polytope out = x.select(picked);
  if (!in_hull(p, out, bounds)) throw SoundnessViolation("Caratheodory subset lost the point");
  return out;
}

Polytope ColorfulWeak::transversal() const {
  std::vector<Point> pts;
  for (const auto& c : picks) pts.push_back(c.point);
  return Polytope(std::move(pts));
}

Polytope ColorfulStrong::transversal() const {
  std::vector<Point> pts;
  for (const auto& c : picks) pts.push_back(c.point);
  return Polytope(std::move(pts));
}

ColorfulWeak colorful_weak(const Point& p, const std::vector<Polytope>& colors, const SemiringBounds& bounds) {
  const auto family = semispace_family(p, bounds);
  if (colors.size() < family.size()) {
    throw PreconditionError("colorful_weak needs at least " + std::to_string(family.size()) + " colors, got " +
                            std::to_string(colors.size()));
  }
  for (std::size_t c = 0; c < colors.size(); ++c) {
    check_polytope(colors[c], p.dim(), bounds, "colorful_weak");
    if (!hull_member(family, colors[c]).member) {
      throw PreconditionError("colorful_weak: color " + std::to_string(c) + " does not contain " + p.str());
    }
  }
  ColorfulWeak out;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const auto& s = family.members[k];
    const auto& poly = colors[k];
    for (std::size_t g = 0; g < poly.size(); ++g) {
      if (sector_contains(s, poly[g])) {
        out.picks.push_back({k, s.index, g, poly[g]});
        break;
      }
    }
    if (out.picks.size() != k + 1) throw SoundnessViolation("colorful_weak: a containing color missed a sector");
  }
  if (!in_hull(p, out.transversal(), bounds)) throw SoundnessViolation("colorful_weak transversal misses the point");
  return out;
}

std::optional<Point> find_common_point(const Polytope& a, const Polytope& b, const SemiringBounds& bounds,
                                       Execution ex) {
  check_polytope(a, a.dim(), bounds, "find_common_point");
  check_polytope(b, a.dim(), bounds, "find_common_point");
  const std::vector<Polytope> both{a, b};
  const CandidateGrid grid(a.dim(), coordinate_values(std::span<const Polytope>(both), bounds));
  return grid.find_first(
      [&](const Point& q) {
        const auto family = semispace_family(q, bounds);
        return hull_member(family, a).member && hull_member(family, b).member;
      },
      ex);
}

SemiringBounds widened(const SemiringBounds& bounds) {
  if (bounds == SemiringBounds::unit()) return SemiringBounds::extended();
  const Value span = bounds.hi - bounds.lo;
  return {bounds.lo - span, bounds.hi + span};
}

ColorfulStrong colorful_strong(const Polytope& c, const std::vector<Polytope>& colors,
                               const std::vector<Point>& meeting_points, const SemiringBounds& bounds,
                               Execution ex) {
  if (c.empty()) throw PreconditionError("colorful_strong: empty convex set");
  const std::size_t d = c.dim();
  check_polytope(c, d, bounds, "colorful_strong");
  if (colors.size() != d + 1) {
    throw PreconditionError("colorful_strong needs d+1 = " + std::to_string(d + 1) + " colors, got " +
                            std::to_string(colors.size()));
  }
  for (const auto& col : colors) check_polytope(col, d, bounds, "colorful_strong");
  if (!meeting_points.empty() && meeting_points.size() != colors.size()) {
    throw PreconditionError("colorful_strong: supply one meeting point per color or none");
  }

  ColorfulStrong out;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (!meeting_points.empty()) {
      const Point& p = meeting_points[i];
      require_same_dimension(d, p.dim(), "colorful_strong");
      if (!in_hull(p, c, bounds) || !in_hull(p, colors[i], bounds)) {
        throw PreconditionError("colorful_strong: supplied point " + p.str() + " is not in C and color " +
                                std::to_string(i));
      }
      out.meeting_points.push_back(p);
      continue;
    }
    auto p = find_common_point(c, colors[i], bounds, ex);
    if (!p) throw PreconditionError("colorful_strong: color " + std::to_string(i) + " does not meet C");
    out.meeting_points.push_back(std::move(*p));
  }

  const bool finite = std::all_of(out.meeting_points.begin(), out.meeting_points.end(), [&](const Point& p) {
    return std::all_of(p.begin(), p.end(), [&](const Value& v) { return bounds.finite(v); });
  });
  out.working_bounds = finite ? bounds : widened(bounds);
  const SemiringBounds& wb = out.working_bounds;

  out.separation = internal_separation(out.meeting_points, wb);
  out.q = out.separation.point;
  const auto q_family = semispace_family(out.q, wb);

  for (std::size_t i = 0; i < colors.size(); ++i) {
    const SemispaceId* target = q_family.find(out.separation.sector[i]);
    if (target == nullptr) throw SoundnessViolation("internal separation used a sector outside I(q)");
    const Box target_box = sector_box(*target, wb);
    const auto p_family = semispace_family(out.meeting_points[i], wb);
    std::optional<ColorPick> pick;
    for (const auto& s : p_family.members) {
      if (!target_box.contains(sector_box(s, wb))) continue;
      const auto& poly = colors[i];
      for (std::size_t g = 0; g < poly.size() && !pick; ++g) {
        if (sector_contains(s, poly[g])) pick = ColorPick{i, target->index, g, poly[g]};
      }
      if (pick) break;
    }
    if (!pick) throw SoundnessViolation("colorful_strong: no refining sector for color " + std::to_string(i));
    out.picks.push_back(std::move(*pick));
  }

  if (!out.q.within(bounds) || !in_hull(out.q, c, bounds) || !in_hull(out.q, out.transversal(), bounds)) {
    throw SoundnessViolation("colorful_strong witness failed verification in the original bounds");
  }
  return out;
}

}  // namespace maxmin
