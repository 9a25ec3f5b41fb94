#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace maxmin {

/// Exact rational scalar with 64-bit numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator. Arithmetic is
/// carried out in 128 bits and reduced; a result that does not fit back into
/// 64 bits throws std::overflow_error instead of wrapping. Comparisons never
/// overflow.
class Value {
 public:
  constexpr Value() noexcept = default;
  constexpr Value(std::int64_t integer) noexcept : num_(integer) {}  // NOLINT: implicit from integers
  Value(std::int64_t num, std::int64_t den);

  /// Accepts "3", "-2", "0.55", ".5", "7/20". Exponents are rejected.
  static Value parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  /// Serialized as "p/q" (denominator always written).
  std::string str() const;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  friend Value operator/(const Value& a, const Value& b);
  Value operator-() const;

  Value& operator+=(const Value& o) { return *this = *this + o; }
  Value& operator-=(const Value& o) { return *this = *this - o; }
  Value& operator*=(const Value& o) { return *this = *this * o; }
  Value& operator/=(const Value& o) { return *this = *this / o; }

  friend bool operator==(const Value& a, const Value& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) noexcept {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static Value from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline const Value& max(const Value& a, const Value& b) noexcept { return a < b ? b : a; }
inline const Value& min(const Value& a, const Value& b) noexcept { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Value& v);

struct ValueHash {
  std::size_t operator()(const Value& v) const noexcept {
    return std::hash<std::int64_t>{}(v.num()) * 1000003u ^ std::hash<std::int64_t>{}(v.den());
  }
};

/// The closed interval [lo, hi] carrying the max-min semiring: lo is the zero,
/// hi the unity. Defaults to the unit interval.
struct SemiringBounds {
  Value lo{0};
  Value hi{1};

  SemiringBounds() = default;
  SemiringBounds(Value lo_, Value hi_);

  bool contains(const Value& v) const noexcept { return lo <= v && v <= hi; }
  /// Strictly inside: neither the zero nor the unity.
  bool finite(const Value& v) const noexcept { return lo < v && v < hi; }

  static SemiringBounds unit() { return {}; }
  /// The fixed strict superset of [0,1] used to make boundary points finite.
  static SemiringBounds extended() { return {Value(-1), Value(2)}; }

  friend bool operator==(const SemiringBounds&, const SemiringBounds&) = default;
};

}  // namespace maxmin
