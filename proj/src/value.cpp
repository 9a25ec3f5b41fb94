#include "maxmin/value.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "maxmin/errors.hpp"

namespace maxmin {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool fits64(__int128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  std::int64_t out = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("not a rational numeral: '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

void require_same_dimension(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

Value::Value(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Value Value::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw std::overflow_error("rational overflow");
  Value v;
  v.num_ = static_cast<std::int64_t>(num);
  v.den_ = static_cast<std::int64_t>(den);
  return v;
}

Value Value::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty numeral");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto n = parse_int(text.substr(0, slash), whole);
    const auto d = parse_int(text.substr(slash + 1), whole);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    return Value(n, d);
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    throw std::invalid_argument("not a rational numeral: '" + std::string(whole) + "'");
  }
  if (frac_part.size() > 18) {
    throw std::invalid_argument("too many decimal digits in '" + std::string(whole) + "'");
  }
  for (char c : int_part) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a rational numeral: '" + std::string(whole) + "'");
  }
  for (char c : frac_part) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a rational numeral: '" + std::string(whole) + "'");
  }
  __int128 scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  const __int128 ip = int_part.empty() ? 0 : parse_int(int_part, whole);
  const __int128 fp = frac_part.empty() ? 0 : parse_int(frac_part, whole);
  __int128 num = ip * scale + fp;
  if (negative) num = -num;
  return from_wide(num, scale);
}

std::string Value::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Value operator+(const Value& a, const Value& b) {
  if (a.den_ == b.den_) return Value::from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
  return Value::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Value operator-(const Value& a, const Value& b) {
  if (a.den_ == b.den_) return Value::from_wide(static_cast<__int128>(a.num_) - b.num_, a.den_);
  return Value::from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                          static_cast<__int128>(a.den_) * b.den_);
}

Value operator*(const Value& a, const Value& b) {
  return Value::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Value operator/(const Value& a, const Value& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return Value::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

Value Value::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

SemiringBounds::SemiringBounds(Value lo_, Value hi_) : lo(lo_), hi(hi_) {
  if (!(lo < hi)) throw DomainError("semiring bounds require lo < hi, got [" + lo.str() + ", " + hi.str() + "]");
}

}  // namespace maxmin
