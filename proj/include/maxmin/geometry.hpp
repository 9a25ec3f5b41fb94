#pragma once

// Max-min segments [x, y] = { a (x) x (+) b (x) y : max(a, b) = 1 }.
//
// With comparable endpoints x <= y every segment point is z(b) = x (+) (b (x) y),
// and sweeping b across the sorted coordinates t_1 <= ... <= t_2d of x and y
// traces a chain of at most 2d-1 ordinary line segments. Incomparable
// endpoints are handled by concatenating [x, x (+) y] and [x (+) y, y].

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxmin/point.hpp"

namespace maxmin {

/// Index classification for a parameter value b:
/// middle = {i : x_i <= b <= y_i}, low = {i : b <= x_i}, high = {i : b >= y_i}.
struct IndexClasses {
  std::vector<std::size_t> middle;
  std::vector<std::size_t> low;
  std::vector<std::size_t> high;

  friend bool operator==(const IndexClasses&, const IndexClasses&) = default;
};

IndexClasses classify(const Point& x, const Point& y, const Value& beta);

/// One interval sigma_l = [t_l, t_{l+1}] of the parameter sweep.
struct ParameterInterval {
  Value from;
  Value to;
  /// t_l == t_{l+1}. Kept so interval numbering lines up with the breakpoints.
  bool degenerate = false;
  /// Classification on the interior (at the single point when degenerate).
  IndexClasses classes;
};

/// A conventional line segment on which the moving coordinates change together.
struct ElementaryPiece {
  Point from;
  Point to;
  std::vector<std::size_t> moving;

  bool degenerate() const noexcept { return moving.empty(); }
  bool contains(const Point& z) const;
  /// Common change of the moving coordinates (0 for a degenerate piece).
  Value rise() const;
};

/// Decomposition of [lower, upper] for lower <= upper, pieces ordered by b.
struct ComparableChain {
  Point lower;
  Point upper;
  std::vector<Value> breakpoints;
  std::vector<ParameterInterval> intervals;
  std::vector<ElementaryPiece> pieces;
};

enum class SegmentMode { Comparable, Concatenated };

struct SegmentDecomposition {
  Point x;
  Point y;
  SegmentMode mode = SegmentMode::Comparable;
  /// x (+) y, set for incomparable endpoints.
  std::optional<Point> junction;
  /// Comparable: one chain on [min, max]. Concatenated: [x, x(+)y] then [y, x(+)y].
  std::vector<ComparableChain> legs;
  /// Pieces in traversal order from x to y; a single degenerate piece when x == y.
  std::vector<ElementaryPiece> pieces;
  SemiringBounds bounds;

  /// Polyline vertices from x to y.
  std::vector<Point> corners() const;

  /// Continuous traversal from x (tau = 0) through x (+) y to y (tau = 1).
  Point point_at(const Value& tau) const;
};

/// z(b) = x (+) (b (x) y) for x <= y.
Point segment_point(const Point& x, const Point& y, const Value& beta, const SemiringBounds& bounds = {});

SegmentDecomposition segment_decompose(const Point& x, const Point& y, const SemiringBounds& bounds = {});

bool segment_contains(const Point& x, const Point& y, const Point& z, const SemiringBounds& bounds = {});

/// Sum of c_k * sqrt(m_k) with rational c_k and squarefree integer m_k.
class SurdSum {
 public:
  SurdSum() = default;

  /// Adds coefficient * sqrt(radicand); the radicand is reduced to squarefree form.
  void add(const Value& coefficient, std::int64_t radicand);

  const std::map<std::int64_t, Value>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  long double to_long_double() const noexcept;
  /// Rational enclosure [lower, upper] with each sqrt bounded to 1/scale.
  std::pair<Value, Value> enclosure(std::int64_t scale = 1'000'000) const;
  std::string str() const;

  friend bool operator==(const SurdSum&, const SurdSum&) = default;

 private:
  std::map<std::int64_t, Value> terms_;
};

/// Euclidean length of the max-min segment joining x and y.
SurdSum geodesic_distance(const Point& x, const Point& y, const SemiringBounds& bounds = {});

}  // namespace maxmin
