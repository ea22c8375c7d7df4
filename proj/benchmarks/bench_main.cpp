#include <sblf/classify.hpp>
#include <sblf/hurwitz.hpp>
#include <sblf/pslword.hpp>
#include <sblf/search.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace sblf;

namespace {

void BM_WordRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(0, 3);
  const Sl2Matrix letters[] = {generator(Generator::X1), generator(Generator::X1).inverse(),
                               generator(Generator::X2), generator(Generator::X2).inverse()};
  std::vector<Sl2Matrix> inputs;
  for (int i = 0; i < 256; ++i) {
    Sl2Matrix m;
    for (int j = 0; j < state.range(0); ++j) m *= letters[pick(rng)];
    inputs.push_back(m);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const SignedElement e = matrix_to_signed_word(inputs[i++ % inputs.size()]);
    benchmark::DoNotOptimize(evaluate(e));
  }
}
BENCHMARK(BM_WordRoundTrip)->Arg(10)->Arg(30)->Arg(100);

void BM_TProduct(benchmark::State& state) {
  const HurwitzSystem w = make_T_s(static_cast<int>(state.range(0))).expand();
  for (auto _ : state) benchmark::DoNotOptimize(total_monodromy(w));
}
BENCHMARK(BM_TProduct)->Arg(5)->Arg(40);

void BM_Solutions(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_part_equation_solutions(static_cast<int>(state.range(0)), state.range(1)));
  }
}
BENCHMARK(BM_Solutions)->Args({4, 25})->Args({5, 25})->Args({5, 40})->Unit(benchmark::kMillisecond);

void BM_Matsumoto(benchmark::State& state) {
  HurwitzSystem w = matsumoto_target(12);
  for (std::size_t pos : {3, 7, 1, 10, 5}) w = elementary_transformation(w, pos, Direction::Forward);
  for (auto _ : state) benchmark::DoNotOptimize(matsumoto_normalize(w));
}
BENCHMARK(BM_Matsumoto)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
