#include <gtest/gtest.h>

#include <map>

#include "maxmin/errors.hpp"
#include "maxmin/hull.hpp"
#include "maxmin/koenig.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/random.hpp"

using namespace maxmin;

namespace {

Point P(std::initializer_list<std::string_view> c) { return Point::parse(c); }

Matrix example() { return Matrix::from_rows({P({"0.9", "0.1"}), P({"0.8", "0.3"}), P({"0.5", "0.4"})}); }

Value brute(const Matrix& a) {
  std::vector<std::vector<Value>> rows(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i].push_back(a(i, j));
  }
  return oracle::brute_bottleneck(rows);
}

}  // namespace

TEST(ThresholdMatrix, Examples) {
  const auto a = example();
  const auto all = threshold_matrix(a, Value(0));
  for (const auto& row : all) EXPECT_EQ(row, (std::vector<bool>{true, true}));
  for (const auto& row : threshold_matrix(a, Value(1))) EXPECT_EQ(row, (std::vector<bool>{false, false}));
  const auto h = threshold_matrix(a, Value::parse("0.4"));
  EXPECT_EQ(h, (std::vector<std::vector<bool>>{{true, false}, {true, false}, {true, true}}));
}

TEST(Bottleneck, Examples) {
  const auto a = example();
  ASSERT_EQ(brute(a), Value::parse("0.4"));
  EXPECT_EQ(bottleneck_threshold(a), Value::parse("0.4"));
  const Matrix c(4, 3, Value::parse("0.35"));
  EXPECT_EQ(bottleneck_threshold(c), Value::parse("0.35"));
  const auto one = Matrix::from_rows({P({"0.3"}), P({"0.7"})});
  ASSERT_EQ(brute(one), Value::parse("0.7"));
  EXPECT_EQ(bottleneck_threshold(one), Value::parse("0.7"));
  EXPECT_THROW(bottleneck_threshold(Matrix(2, 2)), PreconditionError);
}

TEST(Bottleneck, MatchesOracleOnRandomMatrices) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + trial % 4;
    const auto a = random_matrix(rng, d + 1, d, 10);
    EXPECT_EQ(bottleneck_threshold(a), brute(a));
  }
}

TEST(KoenigDiagram, ExampleSatisfiesInvariants) {
  const auto g = koenig_diagram(example());
  EXPECT_EQ(g.t, Value::parse("0.4"));
  EXPECT_TRUE(diagram_violations(g).empty());
  EXPECT_LE(g.tightness(), 0);
  const auto tight = tight_diagram(example());
  EXPECT_TRUE(tight.tight());
  EXPECT_TRUE(diagram_violations(tight).empty());
}

TEST(KoenigDiagram, LowColumnGivesTightDiagram) {
  const auto a = Matrix::from_rows({P({"0.9", "0.1"}), P({"0.8", "0.2"}), P({"0.7", "0.3"})});
  const auto g = tight_diagram(a);
  EXPECT_EQ(g.t, Value::parse("0.3"));
  EXPECT_TRUE(g.tight());
  EXPECT_TRUE(diagram_violations(g).empty());
}

TEST(KoenigDiagram, OneColumnIsTight) {
  const auto g = koenig_diagram(Matrix::from_rows({P({"0.3"}), P({"0.7"})}));
  EXPECT_TRUE(g.tight());
  EXPECT_TRUE(diagram_violations(g).empty());
}

TEST(ImproveDiagram, StrictlyIncreasesTightness) {
  Rng rng(19);
  std::map<ImprovementKind, int> seen;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t d = 2 + trial % 4;
    auto g = koenig_diagram(random_matrix(rng, d + 1, d, 6));
    while (!g.tight()) {
      ImprovementTrace tr;
      const auto next = improve_diagram(g, &tr);
      ASSERT_GT(next.tightness(), g.tightness());
      ASSERT_TRUE(diagram_violations(next).empty());
      EXPECT_EQ(tr.tightness_before, g.tightness());
      EXPECT_EQ(tr.tightness_after, next.tightness());
      if (tr.kind == ImprovementKind::Cycle || tr.kind == ImprovementKind::FreeRow) {
        EXPECT_EQ(g.r() - next.r(), tr.full_turns);
      }
      ++seen[tr.kind];
      g = next;
    }
  }
  EXPECT_FALSE(seen.empty());
}

TEST(ImproveDiagram, RejectsTightInput) {
  const auto g = tight_diagram(example());
  EXPECT_THROW(improve_diagram(g), PreconditionError);
}

TEST(InternalSeparation, OneDimensionalBaseCase) {
  const auto r = internal_separation({P({"0.3"}), P({"0.7"})});
  EXPECT_EQ(r.point, P({"0.7"}));
  EXPECT_TRUE(verifies_internal_separation({P({"0.3"}), P({"0.7"})}, r));
}

TEST(InternalSeparation, SortedExample) {
  const std::vector<Point> x = {P({"0.9", "0.1"}), P({"0.8", "0.3"}), P({"0.5", "0.4"})};
  const auto s = intsep_sorted(x);
  EXPECT_EQ(s.point, P({"0.9", "0.4"}));
  // (0.8, 0.3) fits only the sector below p, so (0.9, 0.1) takes x_1 >= 0.9.
  EXPECT_EQ(s.sector, (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_TRUE(verifies_internal_separation(x, s));
  const auto r = internal_separation(x);
  EXPECT_TRUE(verifies_internal_separation(x, r));
  EXPECT_TRUE(in_hull(r.point, Polytope(x)));
}

TEST(InternalSeparation, EqualRows) {
  const Point x = P({"0.6", "0.4", "0.2"});
  EXPECT_EQ(intsep_sorted({x, x, x, x}).point, x);
  EXPECT_TRUE(verifies_internal_separation({x, x, x, x}, internal_separation({x, x, x, x})));
}

TEST(InternalSeparation, RandomInstances) {
  Rng rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + trial % 4;
    std::vector<Point> x;
    for (std::size_t i = 0; i <= d; ++i) x.push_back(random_finite_point(rng, d, 8));
    const auto r = internal_separation(x);
    EXPECT_TRUE(verifies_internal_separation(x, r));
    EXPECT_TRUE(in_hull(r.point, Polytope(x)));
  }
}

TEST(InternalSeparation, RejectsBoundaryCoordinates) {
  EXPECT_THROW(internal_separation({P({"0"}), P({"0.5"})}), PreconditionError);
  EXPECT_THROW(internal_separation({P({"0.3", "0.5"}), P({"0.5", "0.2"})}), PreconditionError);
  EXPECT_THROW(intsep_sorted({P({"0.3", "0.5"}), P({"0.5", "0.2"}), P({"0.5", "0.2"})}), PreconditionError);
}
