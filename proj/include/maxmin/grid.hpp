#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "maxmin/parallel.hpp"
#include "maxmin/point.hpp"

namespace maxmin {

/// Sorted distinct coordinates of the given points together with lo and hi.
///
/// For the Min T-norm this set is exact for witness searches: rounding every
/// coordinate down to the set commutes with max and with min against set
/// members, so any max-min hull point rounds to a hull point on the grid.
std::vector<Value> coordinate_values(std::span<const Point> points, const SemiringBounds& bounds);
std::vector<Value> coordinate_values(std::span<const Polytope> polytopes, const SemiringBounds& bounds);

/// Adds the midpoint of every gap. The refined set additionally decides
/// strict comparisons against members of the original set.
std::vector<Value> with_midpoints(std::span<const Value> sorted_values);

/// Adds lo + k*step for every k with the result inside the bounds.
std::vector<Value> with_uniform_step(std::span<const Value> sorted_values, const Value& step,
                                     const SemiringBounds& bounds);

/// Cartesian product of per-axis value lists, enumerated lexicographically
/// with axis 0 slowest.
class CandidateGrid {
 public:
  CandidateGrid() = default;
  explicit CandidateGrid(std::vector<std::vector<Value>> axes);
  /// The same value list on every one of d axes.
  CandidateGrid(std::size_t d, std::vector<Value> values);

  std::size_t dim() const noexcept { return axes_.size(); }
  std::size_t size() const noexcept { return size_; }
  Point at(std::size_t index) const;
  const std::vector<Value>& axis(std::size_t i) const { return axes_[i]; }

  /// The lexicographically first candidate satisfying pred.
  template <class Pred>
  std::optional<Point> find_first(Pred&& pred, Execution ex = Execution::Parallel) const {
    auto hit = maxmin::find_first(size_, [&](std::size_t i) { return pred(at(i)); }, ex);
    if (!hit) return std::nullopt;
    return at(*hit);
  }

 private:
  std::vector<std::vector<Value>> axes_;
  std::size_t size_ = 0;
};

}  // namespace maxmin
