#pragma once

// Max-min hull membership by the multiorder principle: p lies in conv(X) iff
// every sector at p holds a generator of X.

#include <cstddef>
#include <optional>
#include <vector>

#include "maxmin/koenig.hpp"
#include "maxmin/parallel.hpp"
#include "maxmin/point.hpp"
#include "maxmin/semispace.hpp"

namespace maxmin {

struct SectorWitness {
  std::size_t sector;     // semispace index at p
  std::size_t generator;  // index into the polytope
};

struct HullMembership {
  bool member = false;
  /// One witness per sector (smallest generator index) when member.
  std::vector<SectorWitness> witnesses;
  /// First sector without a generator when not a member; conv(X) lies in S_i(p).
  std::optional<std::size_t> separating_index;
};

HullMembership hull_member(const Point& p, const Polytope& x, const SemiringBounds& bounds = {});
/// Same, with the semispace family at p already built.
HullMembership hull_member(const SemispaceFamily& family, const Polytope& x);
bool in_hull(const Point& p, const Polytope& x, const SemiringBounds& bounds = {});

/// At most |I(p)| <= d+1 generators whose hull still holds p.
Polytope caratheodory_reduce(const Point& p, const Polytope& x, const SemiringBounds& bounds = {});

struct ColorPick {
  std::size_t color;
  std::size_t sector;     // sector at the reference point holding the pick
  std::size_t generator;  // index into that color's polytope
  Point point;
};

struct ColorfulWeak {
  std::vector<ColorPick> picks;
  Polytope transversal() const;
};

/// One point per used color with p in the hull of the picks.
/// Sector i of I(p) (in increasing order) is served by color i.
ColorfulWeak colorful_weak(const Point& p, const std::vector<Polytope>& colors, const SemiringBounds& bounds = {});

struct ColorfulStrong {
  std::vector<ColorPick> picks;  // sectors refer to q
  Point q;                       // in C and in the hull of the picks
  std::vector<Point> meeting_points;  // p^i in C and in conv(X^i)
  InternalSeparation separation;      // of the meeting points, at q
  SemiringBounds working_bounds;      // bounds used for the separation step
  Polytope transversal() const;
};

/// Lexicographically first point of the candidate grid lying in both hulls.
std::optional<Point> find_common_point(const Polytope& a, const Polytope& b, const SemiringBounds& bounds = {},
                                       Execution ex = Execution::Parallel);

/// Colorful Caratheodory with a convex set C = conv(c). Needs d+1 colors.
/// When meeting points are not supplied they are found by grid search.
ColorfulStrong colorful_strong(const Polytope& c, const std::vector<Polytope>& colors,
                               const std::vector<Point>& meeting_points = {}, const SemiringBounds& bounds = {},
                               Execution ex = Execution::Parallel);

/// Bounds strictly containing the given ones, so that their points become finite.
SemiringBounds widened(const SemiringBounds& bounds);

}  // namespace maxmin
