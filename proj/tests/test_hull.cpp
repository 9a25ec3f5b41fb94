#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "maxmin/errors.hpp"
#include "maxmin/hull.hpp"
#include "maxmin/maxt.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/random.hpp"

using namespace maxmin;

namespace {

Point P(std::initializer_list<std::string_view> c) { return Point::parse(c); }

bool brute(const Point& p, const Polytope& x) {
  std::vector<Point> pts = x.generators();
  pts.push_back(p);
  return oracle::brute_hull_member(p, x.generators(), TNorm::min(), oracle::GridSpec::from_points(pts));
}

}  // namespace

TEST(HullMember, JoinOfGeneratorsIsMember) {
  const Polytope x{P({"0.2", "0.8"}), P({"0.8", "0.2"})};
  const Point p = join(x[0], x[1]);
  ASSERT_TRUE(brute(p, x));
  const auto m = hull_member(p, x);
  EXPECT_TRUE(m.member);
  EXPECT_EQ(m.witnesses.size(), index_set(p).size());
  EXPECT_EQ(p, P({"0.8", "0.8"}));
}

TEST(HullMember, CenterOfAntidiagonalPairIsNotMember) {
  const Polytope x{P({"0.2", "0.8"}), P({"0.8", "0.2"})};
  const Point p = P({"0.5", "0.5"});
  ASSERT_FALSE(brute(p, x));
  const auto m = hull_member(p, x);
  EXPECT_FALSE(m.member);
  ASSERT_TRUE(m.separating_index);
  EXPECT_EQ(*m.separating_index, 0u);
}

TEST(HullMember, GeneratorIsMember) {
  const Polytope x{P({"0.1", "0.7", "0.3"}), P({"0.6", "0.2", "0.9"})};
  EXPECT_TRUE(in_hull(x[1], x));
}

TEST(HullMember, DimensionMismatchThrows) {
  const Polytope x{P({"0.1", "0.7"})};
  EXPECT_THROW(hull_member(P({"0.1"}), x), DimensionMismatch);
}

TEST(HullMember, AgreesWithOracleAndMaxTOnRandomInstances) {
  Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const Polytope x(random_points(rng, 1 + trial % 4, d, 5));
    const Point p = trial % 2 ? random_hull_point(rng, x, TNorm::min(), 5) : random_point(rng, d, 5);
    const bool fast = in_hull(p, x);
    EXPECT_EQ(fast, brute(p, x)) << p;
    EXPECT_EQ(fast, hull_member_maxt(p, x, TNorm::min()).member) << p;
  }
}

TEST(Caratheodory, ReducesToAtMostDPlusOne) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Polytope x(random_points(rng, 5, 2, 10));
    const Point p = random_hull_point(rng, x, TNorm::min(), 10);
    const auto r = caratheodory_reduce(p, x);
    EXPECT_LE(r.size(), 3u);
    EXPECT_TRUE(hull_member_maxt(p, r, TNorm::min()).member);
    for (const auto& g : r) EXPECT_NE(std::find(x.begin(), x.end(), g), x.end());
  }
}

TEST(Caratheodory, SingletonAndGeneratorCases) {
  const Point p = P({"0.3", "0.6"});
  EXPECT_EQ(caratheodory_reduce(p, Polytope{p}), Polytope{p});
  const Polytope x{P({"0.9", "0.1"}), p, P({"0.2", "0.2"})};
  // Smallest-index witness per sector: (0.9, 0.1) serves x_1 >= 0.3, p serves x <= p.
  EXPECT_EQ(caratheodory_reduce(p, x), (Polytope{P({"0.9", "0.1"}), p}));
  EXPECT_THROW(caratheodory_reduce(P({"0.5", "0.5"}), Polytope{P({"0.2", "0.8"}), P({"0.8", "0.2"})}),
               PreconditionError);
}

TEST(ColorfulWeak, OneDimensionalExample) {
  const Point p = P({"0.5"});
  const std::vector<Polytope> colors = {Polytope{P({"0.3"}), P({"0.8"})}, Polytope{P({"0.1"}), P({"0.6"})}};
  const auto r = colorful_weak(p, colors);
  const auto t = r.transversal();
  ASSERT_EQ(t.size(), 2u);
  const bool expected = (t == Polytope{P({"0.8"}), P({"0.1"})}) || (t == Polytope{P({"0.1"}), P({"0.8"})}) ||
                        (t == Polytope{P({"0.3"}), P({"0.6"})}) || (t == Polytope{P({"0.6"}), P({"0.3"})});
  EXPECT_TRUE(expected);
  EXPECT_TRUE(in_hull(p, t));
}

TEST(ColorfulWeak, EqualColorsReduceToCaratheodory) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Polytope x(random_points(rng, 4, 2, 10));
    const Point p = random_hull_point(rng, x, TNorm::min(), 10);
    const auto r = colorful_weak(p, {x, x, x});
    EXPECT_TRUE(in_hull(p, r.transversal()));
    std::set<std::size_t> used;
    for (const auto& pk : r.picks) EXPECT_TRUE(used.insert(pk.color).second);
  }
}

TEST(ColorfulWeak, BoundaryPointsStillWork) {
  const Point p = P({"1", "0"});
  // Both sectors at (1, 0) shrink to the point itself, so every color must hold it.
  const std::vector<Polytope> colors = {Polytope{P({"0.2", "0.7"}), P({"1", "0"})}, Polytope{P({"1", "0"})},
                                        Polytope{P({"0.4", "0"}), P({"1", "0"})}};
  for (const auto& c : colors) ASSERT_TRUE(in_hull(p, c));
  EXPECT_TRUE(in_hull(p, colorful_weak(p, colors).transversal()));
}

TEST(ColorfulWeak, ColorMissingThePointIsReported) {
  const std::vector<Polytope> colors = {Polytope{P({"0.5"})}, Polytope{P({"0.9"})}};
  EXPECT_THROW(colorful_weak(P({"0.5"}), colors), PreconditionError);
}

TEST(ColorfulStrong, DegenerateSinglePointC) {
  Rng rng(8);
  const Polytope x(random_generators_around(rng, P({"0.4", "0.7"}), 1, 10));
  const Point p = P({"0.4", "0.7"});
  ASSERT_TRUE(in_hull(p, x));
  const auto r = colorful_strong(Polytope{p}, {x, x, x});
  EXPECT_EQ(r.q, p);
  EXPECT_TRUE(in_hull(r.q, r.transversal()));
}

TEST(ColorfulStrong, BoundaryCoordinatesUseWidenedBounds) {
  const Point p = P({"1", "0"});
  const std::vector<Polytope> colors = {Polytope{P({"1", "0.3"}), P({"0.2", "0"})}, Polytope{P({"1", "0"})},
                                        Polytope{P({"1", "0.5"}), P({"0.4", "0"})}};
  const Polytope c{p, P({"0.5", "0.5"})};
  const auto r = colorful_strong(c, colors);
  EXPECT_EQ(r.working_bounds, SemiringBounds::extended());
  EXPECT_TRUE(in_hull(r.q, c));
  EXPECT_TRUE(in_hull(r.q, r.transversal()));
}

TEST(ColorfulStrong, RandomInstancesWithKnownCommonPoint) {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Point p = random_finite_point(rng, 2, 10);
    std::vector<Polytope> colors;
    for (int i = 0; i < 3; ++i) colors.emplace_back(random_generators_around(rng, p, 1, 10));
    const Polytope c(random_generators_around(rng, p, 1, 10));
    const auto r = colorful_strong(c, colors);
    EXPECT_TRUE(in_hull(r.q, c));
    EXPECT_TRUE(in_hull(r.q, r.transversal()));
    EXPECT_EQ(r.picks.size(), 3u);
  }
}

TEST(ColorfulStrong, WrongColorCountRejected) {
  const Polytope c{P({"0.5", "0.5"})};
  EXPECT_THROW(colorful_strong(c, {c, c}), PreconditionError);
}

TEST(FindCommonPoint, SegmentsThatCross) {
  const Polytope a{P({"0.2", "0.8"}), P({"0.8", "0.2"})};
  const Polytope b{P({"0.1", "0.1"}), P({"0.9", "0.9"})};
  const auto q = find_common_point(a, b, {}, Execution::Serial);
  ASSERT_TRUE(q);
  EXPECT_TRUE(in_hull(*q, a));
  EXPECT_TRUE(in_hull(*q, b));
  EXPECT_FALSE(find_common_point(Polytope{P({"0.1", "0.1"})}, Polytope{P({"0.2", "0.2"})}));
}
