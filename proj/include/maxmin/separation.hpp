#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxmin/parallel.hpp"
#include "maxmin/point.hpp"
#include "maxmin/semispace.hpp"

namespace maxmin {

/// A semispace at p holding conv(C), or nothing when p is in conv(C).
struct PointSeparation {
  bool in_hull = false;
  std::optional<SemispaceId> semispace;
};

PointSeparation separate_point(const Point& p, const Polytope& c, const SemiringBounds& bounds = {});

/// Lexicographically first grid point of the box lying in conv(C), if any.
/// Exact: rounding down to the grid keeps hull points inside both sets.
std::optional<Point> box_hull_intersection(const Box& b, const Polytope& c, const SemiringBounds& bounds = {},
                                           Execution ex = Execution::Parallel);

struct SepConditionReport {
  bool holds = true;
  /// Coordinates in stable non-increasing order of the upper corner.
  std::vector<std::size_t> order;
  /// t(B), 1-based position in that order.
  std::size_t t_b = 0;
  /// A hull point y >= lower exceeding the upper corner at a position <= t(B).
  std::optional<Point> violation;
};

/// The box separation condition. Throws PreconditionError when B meets conv(C).
SepConditionReport sep_condition(const Box& b, const Polytope& c, const SemiringBounds& bounds = {},
                                 Execution ex = Execution::Parallel);
bool sep_condition_holds(const Box& b, const Polytope& c, const SemiringBounds& bounds = {});

struct BoxSeparation {
  bool separable = false;
  std::optional<SemispaceId> semispace;
  SepConditionReport condition;
};

/// A semispace containing conv(C) whose sector contains B, or NonSeparable
/// (separable == false) when the separation condition fails.
BoxSeparation separate_box(const Box& b, const Polytope& c, const SemiringBounds& bounds = {},
                           Execution ex = Execution::Parallel);

/// True iff every generator lies in S and every box corner in the sector.
bool verifies_box_separation(const SemispaceId& s, const Box& b, const Polytope& c);

struct HyperplaneSeparation {
  enum class Status { Separated, NotOnDiagonal, InHull };
  Status status = Status::InHull;
  std::optional<Hyperplane> hyperplane;
  /// Diagonal anchor y and index i with H equal to the closure of S_i(y).
  std::optional<Point> anchor;
  std::optional<std::size_t> index;
};

/// Generators of C on H and p off H, for p on the diagonal.
HyperplaneSeparation separate_by_hyperplane(const Point& p, const Polytope& c, const SemiringBounds& bounds = {});

}  // namespace maxmin
