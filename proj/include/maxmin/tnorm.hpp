#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maxmin/value.hpp"

namespace maxmin {

/// A continuous triangular norm playing the role of semiring multiplication.
///
/// Min is defined over arbitrary SemiringBounds (its neutral element is the
/// bounds' unity). Product and Lukasiewicz are only defined on [0,1].
class TNorm {
 public:
  enum class Kind { Min, Product, Lukasiewicz };

  explicit TNorm(Kind kind = Kind::Min, SemiringBounds bounds = {});

  static TNorm min(SemiringBounds bounds = {}) { return TNorm(Kind::Min, bounds); }
  static TNorm product() { return TNorm(Kind::Product); }
  static TNorm lukasiewicz() { return TNorm(Kind::Lukasiewicz); }
  /// "min", "product" or "lukasiewicz".
  static TNorm parse(std::string_view name, SemiringBounds bounds = {});

  Kind kind() const noexcept { return kind_; }
  const SemiringBounds& bounds() const noexcept { return bounds_; }
  bool is_min() const noexcept { return kind_ == Kind::Min; }
  std::string name() const;

  /// T(a, b). Throws DomainError if either argument is outside the bounds.
  Value apply(const Value& a, const Value& b) const;

  /// The largest lambda in the bounds with T(lambda, a) <= c.
  Value residual(const Value& a, const Value& c) const;

  /// Parameters lambda at which lambda -> T(lambda, b) changes slope.
  std::vector<Value> kinks(const Value& b) const;

  friend bool operator==(const TNorm&, const TNorm&) = default;

 private:
  void check(const Value& v) const;

  Kind kind_;
  SemiringBounds bounds_;
};

}  // namespace maxmin
