#include <benchmark/benchmark.h>

#include <liebound/analysis.hpp>
#include <liebound/generators.hpp>
#include <liebound/linalg.hpp>
#include <liebound/semisimple.hpp>

#include <random>

using namespace liebound;

namespace {

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<long>(rng() % 19) - 9;
  return m;
}

void BM_Rref(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_CharPoly(benchmark::State& state) {
  auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(8)->Arg(16)->Arg(24);

void BM_Radical(benchmark::State& state) {
  auto l = direct_sum(gen_sl(static_cast<std::size_t>(state.range(0))), gen_filiform(6));
  for (auto _ : state) benchmark::DoNotOptimize(radical(l));
}
BENCHMARK(BM_Radical)->Arg(2)->Arg(3)->Arg(4);

void BM_SimpleIdeals(benchmark::State& state) {
  auto l = gen_cyclic_sum(gen_sl(2), static_cast<std::size_t>(state.range(0))).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(simple_ideals(l));
}
BENCHMARK(BM_SimpleIdeals)->Arg(2)->Arg(3)->Arg(4);

void BM_AnalyzeCorpus(benchmark::State& state) {
  std::vector<Automorphism> pairs;
  for (const auto& e : standard_corpus()) pairs.push_back(*generate(e.spec).automorphism);
  for (auto _ : state)
    for (const auto& a : pairs) benchmark::DoNotOptimize(analyze(a));
}
BENCHMARK(BM_AnalyzeCorpus)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
