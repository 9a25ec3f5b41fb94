#include <gtest/gtest.h>

#include <algorithm>

#include "maxmin/errors.hpp"
#include "maxmin/oracle.hpp"

using namespace maxmin;
using namespace maxmin::oracle;

namespace {

Point P(std::initializer_list<std::string_view> c) { return Point::parse(c); }

}  // namespace

TEST(Oracle, GridContainsBoundsAndCoordinates) {
  const auto g = GridSpec::from_points({P({"0.3", "0.7"})}).values();
  EXPECT_EQ(g, (std::vector<Value>{Value(0), Value(3, 10), Value(7, 10), Value(1)}));
  EXPECT_EQ(GridSpec::uniform(Value(1, 4)).values().size(), 5u);
}

TEST(Oracle, HullMemberExamples) {
  const std::vector<Point> x = {P({"0.2", "0.8"}), P({"0.8", "0.2"})};
  const auto grid = GridSpec::from_points({x[0], x[1], P({"0.5", "0.5"})});
  EXPECT_TRUE(brute_hull_member(x[0], x, TNorm::min(), grid));
  EXPECT_FALSE(brute_hull_member(P({"0.5", "0.5"}), x, TNorm::min(), grid));
  EXPECT_TRUE(brute_hull_member(P({"0.8", "0.8"}), x, TNorm::min(), grid));
}

TEST(Oracle, SegmentExamples) {
  const Point x = P({"0.2", "0.5"});
  EXPECT_EQ(brute_segment(x, x, GridSpec::from_points({x})), std::vector<Point>{x});
  const Point y = P({"0.6", "0.9"});
  const auto pts = brute_segment(x, y, GridSpec::from_points({x, y}));
  for (const auto& q : {x, y, P({"0.5", "0.5"}), P({"0.6", "0.6"})}) {
    EXPECT_NE(std::find(pts.begin(), pts.end(), q), pts.end()) << q;
  }
  const auto inc = brute_segment(P({"0.7", "0.2"}), P({"0.3", "0.6"}), GridSpec::from_points({P({"0.7", "0.2"}), P({"0.3", "0.6"})}));
  EXPECT_NE(std::find(inc.begin(), inc.end(), P({"0.7", "0.6"})), inc.end());
}

TEST(Oracle, BottleneckExamples) {
  const auto v = [](const char* s) { return Value::parse(s); };
  EXPECT_EQ(brute_bottleneck({{v("0.9"), v("0.1")}, {v("0.8"), v("0.3")}, {v("0.5"), v("0.4")}}), v("0.4"));
  EXPECT_EQ(brute_bottleneck({{v("0.3")}, {v("0.7")}}), v("0.7"));
  EXPECT_EQ(brute_bottleneck({{v("0.2"), v("0.2")}, {v("0.2"), v("0.2")}, {v("0.2"), v("0.2")}}), v("0.2"));
}

TEST(Oracle, SizeGuards) {
  std::vector<Point> six(6, P({"0.1"}));
  EXPECT_THROW(brute_hull_member(P({"0.1"}), six, TNorm::min(), GridSpec{}), SizeGuardExceeded);
  const Point d6 = Point::diagonal(6, Value(0));
  EXPECT_THROW(brute_hull_member(d6, {d6}, TNorm::min(), GridSpec{}), SizeGuardExceeded);
  EXPECT_THROW(GridSpec::uniform(Value(1, 200)).values(), SizeGuardExceeded);
}
