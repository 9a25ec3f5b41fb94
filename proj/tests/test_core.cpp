#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "maxmin/errors.hpp"
#include "maxmin/tnorm.hpp"
#include "maxmin/value.hpp"

using namespace maxmin;

namespace {

Value v(const char* s) { return Value::parse(s); }

// sup { lambda on the 1/100 grid : T(lambda, a) <= c }, T written out by hand.
Value grid_residual(TNorm::Kind kind, const Value& a, const Value& c) {
  Value best(0);
  for (int k = 0; k <= 100; ++k) {
    const Value l(k, 100);
    Value t;
    switch (kind) {
      case TNorm::Kind::Min: t = l < a ? l : a; break;
      case TNorm::Kind::Product: t = l * a; break;
      case TNorm::Kind::Lukasiewicz: t = l + a - Value(1) < Value(0) ? Value(0) : l + a - Value(1); break;
    }
    if (t <= c) best = l;
  }
  return best;
}

}  // namespace

TEST(Value, ParsesDecimalsAndFractionsExactly) {
  EXPECT_EQ(v("0.55"), Value(11, 20));
  EXPECT_EQ(v(".5"), Value(1, 2));
  EXPECT_EQ(v("7/20"), Value(7, 20));
  EXPECT_EQ(v("-2"), Value(-2));
  EXPECT_EQ(v("3/1"), Value(3));
  EXPECT_EQ(Value(2, 4).str(), "1/2");
  EXPECT_EQ(Value(3).str(), "3/1");
  EXPECT_EQ(Value(1, -3), Value(-1, 3));
  EXPECT_THROW(v("1e3"), std::invalid_argument);
  EXPECT_THROW(v("abc"), std::invalid_argument);
}

TEST(Value, StrRoundTrips) {
  for (const auto& x : {Value(7, 13), Value(-5, 2), Value(0), Value(1)}) EXPECT_EQ(Value::parse(x.str()), x);
}

TEST(Value, ArithmeticIsExactAndOrdered) {
  EXPECT_EQ(v("0.1") + v("0.2"), v("0.3"));
  EXPECT_EQ(v("1/3") * Value(3), Value(1));
  EXPECT_EQ(v("1/2") / v("1/4"), Value(2));
  EXPECT_LT(v("1/3"), v("0.34"));
  EXPECT_EQ(max(v("0.3"), v("0.7")), v("0.7"));
  EXPECT_EQ(min(v("0.3"), v("0.7")), v("0.3"));
}

TEST(Value, OverflowThrowsInsteadOfWrapping) {
  const Value big(INT64_MAX / 2 + 1);
  EXPECT_THROW(big * big, std::overflow_error);
  EXPECT_THROW(Value(1) / Value(0), std::domain_error);
}

TEST(SemiringBounds, UnitAndExtended) {
  const auto u = SemiringBounds::unit();
  EXPECT_TRUE(u.contains(Value(0)));
  EXPECT_FALSE(u.finite(Value(1)));
  EXPECT_TRUE(u.finite(v("0.5")));
  const auto e = SemiringBounds::extended();
  EXPECT_EQ(e.lo, Value(-1));
  EXPECT_EQ(e.hi, Value(2));
  EXPECT_THROW(SemiringBounds(Value(1), Value(0)), DomainError);
}

TEST(TNorm, ApplyExamples) {
  EXPECT_EQ(TNorm::min().apply(v("0.3"), v("0.7")), v("0.3"));
  EXPECT_EQ(TNorm::lukasiewicz().apply(v("0.6"), v("0.7")), v("0.3"));
  EXPECT_EQ(TNorm::product().apply(v("0.5"), v("0.4")), v("0.2"));
  for (const auto& t : {TNorm::min(), TNorm::product(), TNorm::lukasiewicz()}) {
    EXPECT_EQ(t.apply(v("0.37"), Value(1)), v("0.37")) << t.name();
  }
}

TEST(TNorm, ApplyRejectsValuesOutsideBounds) {
  EXPECT_THROW(TNorm::min().apply(v("1.5"), v("0.2")), DomainError);
  EXPECT_THROW(TNorm::product().apply(v("-0.1"), v("0.2")), DomainError);
}

TEST(TNorm, ResidualExamplesMatchGridOracle) {
  struct Case {
    TNorm t;
    const char* a;
    const char* c;
    const char* expected;
  };
  const std::vector<Case> cases = {
      {TNorm::min(), "0.7", "0.5", "0.5"},
      {TNorm::min(), "0.3", "0.5", "1"},
      {TNorm::lukasiewicz(), "0.9", "0.3", "0.4"},
  };
  for (const auto& k : cases) {
    const Value oracle = grid_residual(k.t.kind(), v(k.a), v(k.c));
    ASSERT_EQ(oracle, v(k.expected));
    EXPECT_EQ(k.t.residual(v(k.a), v(k.c)), oracle);
  }
}

TEST(TNorm, ParseAndName) {
  EXPECT_EQ(TNorm::parse("lukasiewicz").kind(), TNorm::Kind::Lukasiewicz);
  EXPECT_EQ(TNorm::parse("product").name(), "product");
  EXPECT_THROW(TNorm::parse("max"), std::invalid_argument);
  EXPECT_THROW(TNorm::parse("product", SemiringBounds::extended()), DomainError);
}

TEST(TNorm, MinOverExtendedBoundsUsesItsUnity) {
  const auto t = TNorm::min(SemiringBounds::extended());
  EXPECT_EQ(t.apply(v("0.4"), Value(2)), v("0.4"));
  EXPECT_EQ(t.residual(v("0.3"), v("0.5")), Value(2));
}
