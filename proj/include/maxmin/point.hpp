#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "maxmin/value.hpp"

namespace maxmin {

/// A point of the d-dimensional semimodule: a vector of d Values.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Value> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Value> coords) : coords_(coords) {}
  /// The diagonal point (c, ..., c).
  static Point diagonal(std::size_t d, const Value& c) { return Point(std::vector<Value>(d, c)); }
  /// Convenience for tests and examples: each entry parsed by Value::parse.
  static Point parse(std::initializer_list<std::string_view> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Value& operator[](std::size_t i) const { return coords_[i]; }
  Value& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  std::span<const Value> coords() const noexcept { return coords_; }

  bool on_diagonal() const noexcept;
  bool within(const SemiringBounds& b) const noexcept;

  std::string str() const;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<Value> coords_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

/// Componentwise x <= y.
bool leq(const Point& x, const Point& y);
bool comparable(const Point& x, const Point& y);
/// x (+) y, the componentwise maximum.
Point join(const Point& x, const Point& y);
/// lambda (x) x with the Min T-norm: componentwise min(lambda, x_i).
Point scale_min(const Value& lambda, const Point& x);

/// Cartesian product of closed intervals [lower_i, upper_i].
struct Box {
  Point lower;
  Point upper;

  Box() = default;
  Box(Point lower_, Point upper_);
  static Box point(const Point& p) { return Box(p, p); }

  std::size_t dim() const noexcept { return lower.dim(); }
  bool contains(const Point& q) const;
  bool contains(const Box& inner) const;
  bool within(const SemiringBounds& b) const noexcept { return lower.within(b) && upper.within(b); }
  /// All 2^d corners, lexicographic in (lower, upper) choice with coordinate 0 slowest.
  std::vector<Point> corners() const;

  friend bool operator==(const Box&, const Box&) = default;
};

/// A finite generator list whose max-min (or max-T) hull is implicit.
/// Duplicate generators are dropped on construction, keeping first occurrences
/// in order.
class Polytope {
 public:
  Polytope() = default;
  explicit Polytope(std::vector<Point> generators);
  Polytope(std::initializer_list<Point> generators) : Polytope(std::vector<Point>(generators)) {}

  std::size_t size() const noexcept { return generators_.size(); }
  bool empty() const noexcept { return generators_.empty(); }
  std::size_t dim() const noexcept { return generators_.empty() ? 0 : generators_.front().dim(); }
  const Point& operator[](std::size_t i) const { return generators_[i]; }
  auto begin() const noexcept { return generators_.begin(); }
  auto end() const noexcept { return generators_.end(); }
  const std::vector<Point>& generators() const noexcept { return generators_; }

  /// Sub-polytope on the given generator indices (in the given order).
  Polytope select(std::span<const std::size_t> indices) const;

  friend bool operator==(const Polytope&, const Polytope&) = default;

 private:
  std::vector<Point> generators_;
};

}  // namespace maxmin
