#include "maxmin/tnorm.hpp"

#include "maxmin/errors.hpp"

namespace maxmin {

TNorm::TNorm(Kind kind, SemiringBounds bounds) : kind_(kind), bounds_(bounds) {
  if (kind_ != Kind::Min && bounds_ != SemiringBounds::unit()) {
    throw DomainError(name() + " T-norm is only defined on [0,1]");
  }
}

TNorm TNorm::parse(std::string_view name, SemiringBounds bounds) {
  if (name == "min") return TNorm(Kind::Min, bounds);
  if (name == "product") return TNorm(Kind::Product, bounds);
  if (name == "lukasiewicz") return TNorm(Kind::Lukasiewicz, bounds);
  throw std::invalid_argument("unknown T-norm '" + std::string(name) + "' (expected min|product|lukasiewicz)");
}

std::string TNorm::name() const {
  switch (kind_) {
    case Kind::Min: return "min";
    case Kind::Product: return "product";
    case Kind::Lukasiewicz: return "lukasiewicz";
  }
  return "?";
}

void TNorm::check(const Value& v) const {
  if (!bounds_.contains(v)) {
    throw DomainError(name() + " T-norm argument " + v.str() + " outside [" + bounds_.lo.str() + ", " +
                      bounds_.hi.str() + "]");
  }
}

Value TNorm::apply(const Value& a, const Value& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case Kind::Min: return maxmin::min(a, b);
    case Kind::Product: return a * b;
    case Kind::Lukasiewicz: return maxmin::max(Value(0), a + b - Value(1));
  }
  return a;
}

Value TNorm::residual(const Value& a, const Value& c) const {
  check(a);
  check(c);
  switch (kind_) {
    case Kind::Min:
      // min(l, a) <= c holds for every l once a <= c; otherwise exactly for l <= c.
      return a <= c ? bounds_.hi : c;
    case Kind::Product:
      if (a == Value(0)) return bounds_.hi;
      return maxmin::min(bounds_.hi, c / a);
    case Kind::Lukasiewicz:
      // max(0, l + a - 1) <= c  <=>  l <= 1 - a + c, since c >= 0.
      return maxmin::min(bounds_.hi, Value(1) - a + c);
  }
  return c;
}

std::vector<Value> TNorm::kinks(const Value& b) const {
  check(b);
  switch (kind_) {
    case Kind::Min: return {b};
    case Kind::Product: return {};
    case Kind::Lukasiewicz: return {Value(1) - b};
  }
  return {};
}

}  // namespace maxmin
