// Serial reference kernels against their OpenMP versions. Arg 0 is serial,
// arg 1 parallel; thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "maxmin/hull.hpp"
#include "maxmin/maxt.hpp"
#include "maxmin/random.hpp"
#include "maxmin/separation.hpp"

using namespace maxmin;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::Serial : Execution::Parallel; }

void set_label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

// Fixed instances where the searches scan most of their grid.
struct Fixture {
  Polytope c3;
  Box far_box;
  Polytope a, b;
  std::vector<Point> radon_pts;
  std::vector<Point> center_pts;

  Fixture() {
    Rng rng(31);
    c3 = Polytope(random_points(rng, 5, 3, 40));
    far_box = Box(Point{Value(39, 40), Value(39, 40), Value(39, 40)}, Point{Value(1), Value(1), Value(1)});
    a = Polytope{Point{Value(1, 40), Value(39, 40)}, Point{Value(2, 40), Value(38, 40)}};
    b = Polytope{Point{Value(39, 40), Value(1, 40)}, Point{Value(38, 40), Value(2, 40)}};
    radon_pts = random_points(rng, 5, 3, 40);
    center_pts = random_points(rng, 7, 2, 40);
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

void BM_BoxHullIntersection(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(box_hull_intersection(f.far_box, f.c3, {}, mode(state)));
  set_label(state);
}

void BM_FindCommonPoint(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(find_common_point(f.a, f.b, {}, mode(state)));
  set_label(state);
}

void BM_RadonMin(benchmark::State& state) {
  const auto& f = fixture();
  SearchOptions opt;
  opt.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(radon_partition(f.radon_pts, TNorm::min(), opt));
  set_label(state);
}

void BM_CenterpointMin(benchmark::State& state) {
  const auto& f = fixture();
  SearchOptions opt;
  opt.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(centerpoint(f.center_pts, TNorm::min(), opt));
  set_label(state);
}

void BM_CountMembers(benchmark::State& state) {
  const auto& f = fixture();
  const std::size_t n = 41 * 41 * 41;
  const Execution ex = mode(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_if(
        n,
        [&](std::size_t i) {
          const Point p{Value(static_cast<std::int64_t>(i / 1681), 40),
                        Value(static_cast<std::int64_t>(i / 41 % 41), 40), Value(static_cast<std::int64_t>(i % 41), 40)};
          return in_hull(p, f.c3);
        },
        ex));
  }
  set_label(state);
}

}  // namespace

BENCHMARK(BM_BoxHullIntersection)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindCommonPoint)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RadonMin)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CenterpointMin)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountMembers)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
