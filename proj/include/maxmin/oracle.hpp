#pragma once

// Brute-force reference implementations. Each enumerates the defining
// combinations directly and shares no code with the modules it certifies.

#include <cstddef>
#include <vector>

#include "maxmin/point.hpp"
#include "maxmin/tnorm.hpp"

namespace maxmin::oracle {

inline constexpr std::size_t kMaxGenerators = 5;
inline constexpr std::size_t kMaxDimension = 5;
inline constexpr std::size_t kMaxGridValues = 101;
inline constexpr std::size_t kMaxTuples = 50'000'000;

/// Coefficient grid: base values plus lo, hi and, with a positive step, lo + k*step.
struct GridSpec {
  std::vector<Value> base;
  Value step{0};
  SemiringBounds bounds;

  /// Sorted distinct values. Throws SizeGuardExceeded beyond kMaxGridValues.
  std::vector<Value> values() const;

  /// All coordinates of the points.
  static GridSpec from_points(const std::vector<Point>& points, const SemiringBounds& bounds = {});
  /// lo, lo + step, ..., hi.
  static GridSpec uniform(const Value& step, const SemiringBounds& bounds = {});
};

/// Some lambda on the grid with max lambda = hi gives max_i T(lambda_i, x^i) = p.
bool brute_hull_member(const Point& p, const std::vector<Point>& x, const TNorm& t, const GridSpec& grid);

/// Every combination max_i T(lambda_i, x^i) with lambda on the grid and max lambda = hi,
/// sorted and distinct.
std::vector<Point> brute_hull_points(const std::vector<Point>& x, const TNorm& t, const GridSpec& grid);

/// Every max(min(a, x), min(b, y)) with a, b on the grid and max(a, b) = hi, sorted and distinct.
std::vector<Point> brute_segment(const Point& x, const Point& y, const GridSpec& grid);

/// Max over all d-row subsets and all row-to-column bijections of the smallest matched entry.
/// rows holds d+1 rows of length d.
Value brute_bottleneck(const std::vector<std::vector<Value>>& rows);

}  // namespace maxmin::oracle
