#include <gtest/gtest.h>

#include <omp.h>

#include "maxmin/hull.hpp"
#include "maxmin/maxt.hpp"
#include "maxmin/parallel.hpp"
#include "maxmin/random.hpp"
#include "maxmin/separation.hpp"

using namespace maxmin;

namespace {

class Parallel : public ::testing::Test {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

}  // namespace

TEST_F(Parallel, FindFirstReturnsSmallestIndex) {
  for (std::size_t hit : {0u, 1u, 4095u, 4096u, 9000u, 50000u}) {
    auto pred = [hit](std::size_t i) { return i >= hit && i % 3 == hit % 3; };
    EXPECT_EQ(find_first_parallel(60000, pred, 256), find_first_serial(60000, pred));
  }
  EXPECT_FALSE(find_first_parallel(10000, [](std::size_t) { return false; }));
  EXPECT_EQ(count_if_parallel(10000, [](std::size_t i) { return i % 7 == 0; }),
            count_if_serial(10000, [](std::size_t i) { return i % 7 == 0; }));
}

TEST_F(Parallel, ExceptionsReachTheCaller) {
  EXPECT_THROW(find_first_parallel(10000, [](std::size_t i) -> bool {
                 if (i == 77) throw std::runtime_error("boom");
                 return false;
               }),
               std::runtime_error);
}

TEST_F(Parallel, BoxKernelsMatchSerial) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const Polytope c(random_points(rng, 3, d, 8));
    Point a = random_point(rng, d, 8), b = random_point(rng, d, 8);
    const Box box(Point(std::vector<Value>(a.begin(), a.end())), join(a, b));
    EXPECT_EQ(box_hull_intersection(box, c, {}, Execution::Serial),
              box_hull_intersection(box, c, {}, Execution::Parallel));
    if (box_hull_intersection(box, c)) continue;
    const auto s = separate_box(box, c, {}, Execution::Serial);
    const auto q = separate_box(box, c, {}, Execution::Parallel);
    EXPECT_EQ(s.separable, q.separable);
    EXPECT_EQ(s.semispace.has_value(), q.semispace.has_value());
    if (s.semispace && q.semispace) {
      EXPECT_EQ(s.semispace->index, q.semispace->index);
    }
    EXPECT_EQ(s.condition.violation, q.condition.violation);
  }
}

TEST_F(Parallel, CommonPointMatchesSerial) {
  Rng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const Polytope a(random_points(rng, 3, 2, 8)), b(random_points(rng, 3, 2, 8));
    EXPECT_EQ(find_common_point(a, b, {}, Execution::Serial), find_common_point(a, b, {}, Execution::Parallel));
  }
}

TEST_F(Parallel, WitnessSearchesMatchSerial) {
  Rng rng(23);
  SearchOptions serial, parallel;
  serial.execution = Execution::Serial;
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_points(rng, 4, 2, 10);
    const auto r1 = radon_partition(x, TNorm::min(), serial);
    const auto r2 = radon_partition(x, TNorm::min(), parallel);
    EXPECT_EQ(r1.first, r2.first);
    EXPECT_EQ(r1.witness, r2.witness);
    const auto p = random_points(rng, 5, 2, 10);
    EXPECT_EQ(centerpoint(p, TNorm::min(), serial), centerpoint(p, TNorm::min(), parallel));
  }
}
