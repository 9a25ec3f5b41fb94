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

std::vector<Point> pick(const std::vector<Point>& x, const std::vector<std::size_t>& idx) {
  std::vector<Point> out;
  for (auto i : idx) out.push_back(x[i]);
  return out;
}

void expect_radon(const std::vector<Point>& x, const RadonPartition& r, const TNorm& t) {
  std::vector<std::size_t> all = r.first;
  all.insert(all.end(), r.second.begin(), r.second.end());
  std::sort(all.begin(), all.end());
  ASSERT_EQ(all.size(), x.size());
  for (std::size_t i = 0; i < all.size(); ++i) ASSERT_EQ(all[i], i);
  EXPECT_TRUE(hull_member_maxt(r.witness, Polytope(pick(x, r.first)), t).member);
  EXPECT_TRUE(hull_member_maxt(r.witness, Polytope(pick(x, r.second)), t).member);
}

}  // namespace

TEST(HullMemberMaxT, GeneratorIsMember) {
  const Polytope x{P({"0.9", "0.4"}), P({"0.3", "0.8"})};
  for (const auto& t : {TNorm::min(), TNorm::product(), TNorm::lukasiewicz()}) {
    EXPECT_TRUE(hull_member_maxt(x[0], x, t).member) << t.name();
  }
}

TEST(HullMemberMaxT, LukasiewiczExample) {
  const Polytope x{P({"0.9", "0.4"}), P({"0.3", "0.8"})};
  const Point p = P({"0.9", "0.8"});
  ASSERT_TRUE(oracle::brute_hull_member(p, x.generators(), TNorm::lukasiewicz(),
                                        oracle::GridSpec::uniform(Value(1, 100))));
  const auto m = hull_member_maxt(p, x, TNorm::lukasiewicz());
  EXPECT_TRUE(m.member);
  EXPECT_EQ(m.lambda, (std::vector<Value>{Value(1), Value(1)}));
}

TEST(HullMemberMaxT, AgreesWithMultiorderForMin) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const Polytope x(random_points(rng, 1 + trial % 4, d, 6));
    const Point p = trial % 2 ? random_hull_point(rng, x, TNorm::min(), 6) : random_point(rng, d, 6);
    EXPECT_EQ(hull_member_maxt(p, x, TNorm::min()).member, in_hull(p, x));
  }
}

TEST(HullMemberMaxT, ConstructedCombinationsAreMembers) {
  Rng rng(6);
  for (const auto& t : {TNorm::product(), TNorm::lukasiewicz()}) {
    for (int trial = 0; trial < 100; ++trial) {
      const Polytope x(random_points(rng, 3, 2, 10));
      const Point p = random_hull_point(rng, x, t, 10);
      EXPECT_TRUE(hull_member_maxt(p, x, t).member) << t.name() << " " << p;
    }
  }
}

TEST(Radon, OneDimensionalExample) {
  const std::vector<Point> x = {P({"0.2"}), P({"0.5"}), P({"0.9"})};
  const auto r = radon_partition(x, TNorm::min());
  const std::set<std::vector<std::size_t>> parts = {r.first, r.second};
  EXPECT_EQ(parts, (std::set<std::vector<std::size_t>>{{0, 2}, {1}}));
  EXPECT_EQ(r.witness, P({"0.5"}));
  EXPECT_TRUE(r.exact);
}

TEST(Radon, DuplicatePoints) {
  const std::vector<Point> x = {P({"0.3", "0.4"}), P({"0.9", "0.1"}), P({"0.3", "0.4"}), P({"0.2", "0.8"})};
  const auto r = radon_partition(x, TNorm::min());
  EXPECT_EQ(r.witness, x[0]);
  expect_radon(x, r, TNorm::min());
}

TEST(Radon, RandomPlanarInstancesAllTNorms) {
  Rng rng(8);
  for (const auto& t : {TNorm::min(), TNorm::product(), TNorm::lukasiewicz()}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_points(rng, 4, 2, 10);
      expect_radon(x, radon_partition(x, t), t);
    }
  }
}

TEST(Radon, WrongSizeRejected) {
  EXPECT_THROW(radon_partition({P({"0.1"}), P({"0.2"})}, TNorm::min()), PreconditionError);
}

TEST(Helly, IntervalsMeetAtLargestLeftEnd) {
  const std::vector<Polytope> f = {Polytope{P({"0.1"}), P({"0.6"})}, Polytope{P({"0.3"}), P({"0.9"})},
                                   Polytope{P({"0.2"}), P({"0.7"})}};
  const auto r = helly_check(f, TNorm::min());
  ASSERT_TRUE(r.common);
  EXPECT_EQ(*r.common, P({"0.3"}));
}

TEST(Helly, DisjointPairReported) {
  const std::vector<Polytope> f = {Polytope{P({"0.1"}), P({"0.2"})}, Polytope{P({"0.5"}), P({"0.6"})},
                                   Polytope{P({"0.15"}), P({"0.55"})}};
  const auto r = helly_check(f, TNorm::min());
  EXPECT_FALSE(r.common);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(*r.counterexample, (std::vector<std::size_t>{0, 1}));
}

TEST(Helly, PlanarFamiliesWithCommonPoint) {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Point p = random_finite_point(rng, 2, 10);
    std::vector<Polytope> f;
    for (int i = 0; i < 5; ++i) f.emplace_back(random_generators_around(rng, p, 1, 10));
    const auto r = helly_check(f, TNorm::min());
    ASSERT_TRUE(r.common);
    for (const auto& m : f) EXPECT_TRUE(in_hull(*r.common, m));
  }
}

TEST(Centerpoint, Examples) {
  const Point x = P({"0.4", "0.7"});
  EXPECT_EQ(centerpoint({x, x, x, x}, TNorm::min()), x);
  const std::vector<Point> line = {P({"0.1"}), P({"0.2"}), P({"0.8"}), P({"0.9"})};
  EXPECT_EQ(centerpoint_subset_size(4, 1), 3u);
  const auto c = centerpoint(line, TNorm::min());
  EXPECT_GE(c[0], Value::parse("0.2"));
  EXPECT_LE(c[0], Value::parse("0.8"));
  EXPECT_TRUE(verifies_centerpoint(c, line, TNorm::min()));
}

TEST(Centerpoint, RandomPlanarSets) {
  Rng rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_points(rng, 6, 2, 10);
    EXPECT_TRUE(verifies_centerpoint(centerpoint(p, TNorm::min()), p, TNorm::min()));
  }
}

TEST(Tverberg, RadonCase) {
  const std::vector<Point> x = {P({"0.2"}), P({"0.5"}), P({"0.9"})};
  const auto r = tverberg_search(x, 2, TNorm::min());
  ASSERT_TRUE(r.found);
  EXPECT_EQ(*r.witness, P({"0.5"}));
}

TEST(Tverberg, OneDimensionalThreeParts) {
  const std::vector<Point> x = {P({"0.1"}), P({"0.3"}), P({"0.5"}), P({"0.7"}), P({"0.9"})};
  const auto r = tverberg_search(x, 3, TNorm::min());
  ASSERT_TRUE(r.found);
  EXPECT_EQ(*r.witness, P({"0.5"}));
  EXPECT_EQ(r.blocks.size(), 3u);
  for (const auto& b : r.blocks) EXPECT_TRUE(in_hull(*r.witness, Polytope(pick(x, b))));
}

TEST(Tverberg, RandomPlanarThreeParts) {
  Rng rng(15);
  for (int trial = 0; trial < 3; ++trial) {
    const auto x = random_points(rng, 7, 2, 10);
    const auto r = tverberg_search(x, 3, TNorm::min());
    ASSERT_TRUE(r.found);
    EXPECT_FALSE(r.soundness_alarm);
    for (const auto& b : r.blocks) EXPECT_TRUE(in_hull(*r.witness, Polytope(pick(x, b))));
  }
}

TEST(Tverberg, PrimePowers) {
  EXPECT_TRUE(is_prime_power(2));
  EXPECT_TRUE(is_prime_power(8));
  EXPECT_TRUE(is_prime_power(9));
  EXPECT_FALSE(is_prime_power(6));
  EXPECT_FALSE(is_prime_power(1));
  EXPECT_THROW(tverberg_search({P({"0.1"})}, 1, TNorm::min()), PreconditionError);
}
