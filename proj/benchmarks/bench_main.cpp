#include <benchmark/benchmark.h>

#include "birch/certify.hpp"
#include "birch/numeric.hpp"
#include "birch/orthant.hpp"
#include "birch/polytope.hpp"

namespace {

const std::vector<std::string> kXY = {"x", "y"};

std::vector<birch::Polynomial> example1() {
  return {birch::parse("-8*y^8-4*x^4*y^4-8+21*x*y^4+5*x^3*y^2", kXY),
          birch::parse("-8*x^8-4*x^4*y^4-8+12*x*y^4+6*x^3*y^2", kXY)};
}

void BM_HullCube(benchmark::State& state) {
  std::vector<birch::ExponentVector> pts;
  for (std::int64_t a = 0; a <= 2; ++a)
    for (std::int64_t b = 0; b <= 2; ++b)
      for (std::int64_t c = 0; c <= 2; ++c) pts.push_back({2 * a, 2 * b, 2 * c});
  for (auto _ : state) benchmark::DoNotOptimize(birch::NewtonPolytope::hull(pts));
}
BENCHMARK(BM_HullCube);

void BM_DecideOrthantNegative(benchmark::State& state) {
  const auto f = birch::parse("x^4 + y^4 + 1 - 3*x*y", kXY);
  for (auto _ : state) benchmark::DoNotOptimize(birch::decide_orthant(f));
}
BENCHMARK(BM_DecideOrthantNegative);

void BM_DecideOrthantCover(benchmark::State& state) {
  const auto f = birch::parse("x^8*y^8 + x^8 + y^8 + 1 - 3*x*y^4 - x^3*y^2", kXY);
  for (auto _ : state) benchmark::DoNotOptimize(birch::decide_orthant(f));
}
BENCHMARK(BM_DecideOrthantCover);

void BM_SolveExample1(benchmark::State& state) {
  const auto sys = example1();
  birch::SolveOptions opts;
  opts.starts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(birch::solve_system(sys, opts));
}
BENCHMARK(BM_SolveExample1)->Arg(16)->Arg(64)->Arg(256);

void BM_CertifyExample1(benchmark::State& state) {
  const auto sys = example1();
  for (auto _ : state) benchmark::DoNotOptimize(birch::certify(birch::recognize_birch(sys)));
}
BENCHMARK(BM_CertifyExample1);

}  // namespace
BENCHMARK_MAIN();
