#include <gtest/gtest.h>

#include <algorithm>

#include "maxmin/errors.hpp"
#include "maxmin/geometry.hpp"
#include "maxmin/grid.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/random.hpp"

using namespace maxmin;

namespace {

Point P(std::initializer_list<std::string_view> c) { return Point::parse(c); }

// Grid points of G^d on the decomposed segment, G = coordinates of x, y with lo, hi.
std::vector<Point> grid_points_on_segment(const Point& x, const Point& y) {
  const auto g = oracle::GridSpec::from_points({x, y}).values();
  const CandidateGrid cand(x.dim(), g);
  std::vector<Point> out;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (segment_contains(x, y, cand.at(i))) out.push_back(cand.at(i));
  }
  return out;
}

}  // namespace

TEST(SegmentPoint, Examples) {
  const Point x = P({"0.2", "0.5"}), y = P({"0.6", "0.9"});
  EXPECT_EQ(segment_point(x, y, Value::parse("0.55")), P({"0.55", "0.55"}));
  EXPECT_EQ(segment_point(x, y, Value::parse("0.1")), x);
  EXPECT_EQ(segment_point(x, y, Value(1)), y);
  EXPECT_THROW(segment_point(y, x, Value(0)), PreconditionError);
  EXPECT_THROW(segment_point(x, y, Value(2)), DomainError);
}

TEST(Classify, SplitsIndicesByParameter) {
  const auto c = classify(P({"0.2", "0.5"}), P({"0.6", "0.9"}), Value::parse("0.55"));
  EXPECT_EQ(c.middle, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(c.high.empty());
  const auto d = classify(P({"0.2", "0.5"}), P({"0.6", "0.9"}), Value::parse("0.7"));
  EXPECT_EQ(d.high, (std::vector<std::size_t>{0}));
  EXPECT_EQ(d.middle, (std::vector<std::size_t>{1}));
}

TEST(SegmentDecompose, ComparableExampleHasThreePieces) {
  const Point x = P({"0.2", "0.5"}), y = P({"0.6", "0.9"});
  const auto seg = segment_decompose(x, y);
  EXPECT_EQ(seg.mode, SegmentMode::Comparable);
  ASSERT_EQ(seg.pieces.size(), 3u);
  const std::vector<Point> chain = {x, P({"0.5", "0.5"}), P({"0.6", "0.6"}), y};
  // Every corner is a combination found by the brute-force enumeration.
  const auto brute = oracle::brute_segment(x, y, oracle::GridSpec::from_points({x, y}));
  for (const auto& q : chain) EXPECT_TRUE(std::binary_search(brute.begin(), brute.end(), q)) << q;
  EXPECT_EQ(seg.corners(), chain);
  EXPECT_EQ(seg.pieces[1].moving, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(seg.legs.front().breakpoints.size(), 4u);
}

TEST(SegmentDecompose, IdenticalEndpointsGiveOneDegeneratePiece) {
  const Point x = P({"0.3", "0.4"});
  const auto seg = segment_decompose(x, x);
  ASSERT_EQ(seg.pieces.size(), 1u);
  EXPECT_TRUE(seg.pieces.front().degenerate());
  EXPECT_EQ(oracle::brute_segment(x, x, oracle::GridSpec::from_points({x})), std::vector<Point>{x});
}

TEST(SegmentDecompose, IncomparableEndpointsConcatenateAtTheJoin) {
  const Point x = P({"0.7", "0.2"}), y = P({"0.3", "0.6"});
  const auto seg = segment_decompose(x, y);
  EXPECT_EQ(seg.mode, SegmentMode::Concatenated);
  ASSERT_TRUE(seg.junction);
  EXPECT_EQ(*seg.junction, P({"0.7", "0.6"}));
  EXPECT_EQ(seg.pieces.front().from, x);
  EXPECT_EQ(seg.pieces.back().to, y);
  EXPECT_EQ(grid_points_on_segment(x, y), oracle::brute_segment(x, y, oracle::GridSpec::from_points({x, y})));
}

TEST(SegmentContains, Examples) {
  const Point x = P({"0.2", "0.5"}), y = P({"0.6", "0.9"});
  EXPECT_TRUE(segment_contains(x, y, P({"0.55", "0.55"})));
  EXPECT_TRUE(segment_contains(x, y, x));
  EXPECT_FALSE(segment_contains(x, y, P({"0.3", "0.8"})));
}

TEST(SegmentContains, AgreesWithOracleOnRandomPairs) {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const Point x = random_point(rng, d, 8), y = random_point(rng, d, 8);
    EXPECT_EQ(grid_points_on_segment(x, y), oracle::brute_segment(x, y, oracle::GridSpec::from_points({x, y})))
        << x << " " << y;
  }
}

TEST(SegmentDecompose, ParametricImageMatchesOracle) {
  // Comparable pairs: z(b) over a dense b grid equals the brute combinations on that grid.
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Point x = random_point(rng, 2, 10), y = random_point(rng, 2, 10);
    const Point lo = Point{min(x[0], y[0]), min(x[1], y[1])};
    const Point hi = join(x, y);
    const auto g = oracle::GridSpec::uniform(Value(1, 20));
    std::vector<Point> param;
    for (const auto& b : g.values()) param.push_back(segment_point(lo, hi, b));
    std::sort(param.begin(), param.end());
    param.erase(std::unique(param.begin(), param.end()), param.end());
    EXPECT_EQ(param, oracle::brute_segment(lo, hi, g));
  }
}

TEST(SegmentDecompose, PieceCountBound) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 4;
    const auto seg = segment_decompose(random_point(rng, d, 9), random_point(rng, d, 9));
    for (const auto& leg : seg.legs) {
      const auto n = std::count_if(leg.pieces.begin(), leg.pieces.end(), [](const auto& p) { return !p.degenerate(); });
      EXPECT_LE(static_cast<std::size_t>(n), 2 * d - 1);
    }
  }
}

TEST(SegmentDecompose, PointAtTraversesContinuously) {
  const Point x = P({"0.7", "0.2"}), y = P({"0.3", "0.6"});
  const auto seg = segment_decompose(x, y);
  EXPECT_EQ(seg.point_at(Value(0)), x);
  EXPECT_EQ(seg.point_at(Value(1)), y);
  EXPECT_EQ(seg.point_at(Value(1, 2)), P({"0.7", "0.6"}));
  for (int k = 0; k <= 20; ++k) EXPECT_TRUE(segment_contains(x, y, seg.point_at(Value(k, 20))));
  EXPECT_THROW(seg.point_at(Value(2)), DomainError);
}

TEST(GeodesicDistance, Examples) {
  const Point x = P({"0.2", "0.5"}), y = P({"0.6", "0.9"});
  const auto d = geodesic_distance(x, y);
  SurdSum expected;
  expected.add(Value(3, 5), 1);
  expected.add(Value(1, 10), 2);
  EXPECT_EQ(d, expected);
  EXPECT_NEAR(static_cast<double>(d.to_long_double()), 0.6 + 0.1 * std::sqrt(2.0), 1e-12);
  EXPECT_EQ(geodesic_distance(y, x), d);
  EXPECT_TRUE(geodesic_distance(x, x).is_zero());
  const auto one = geodesic_distance(P({"0.2"}), P({"0.9"}));
  EXPECT_TRUE(one.is_rational());
  EXPECT_EQ(one.terms().at(1), Value(7, 10));
}

TEST(SurdSum, ReducesRadicandsAndEncloses) {
  SurdSum s;
  s.add(Value(1), 8);  // 2 sqrt 2
  s.add(Value(-2), 2);
  EXPECT_TRUE(s.is_zero());
  s.add(Value(1, 10), 2);
  const auto [lo, hi] = s.enclosure();
  EXPECT_LE(lo.to_double(), 0.1 * std::sqrt(2.0));
  EXPECT_GE(hi.to_double(), 0.1 * std::sqrt(2.0));
  EXPECT_THROW(s.add(Value(1), 0), DomainError);
}
