#include <benchmark/benchmark.h>

#include "mcgsig/linalg.hpp"
#include "mcgsig/meyer.hpp"
#include "mcgsig/rng.hpp"
#include "mcgsig/wall.hpp"

using namespace mcgsig;

namespace {

Mat random_mat(Rng& rng, std::size_t rows, std::size_t cols) {
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = make_rat(rng.uniform(-9, 9), rng.uniform(1, 4));
  return m;
}

void bm_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(17);
  const Mat m = random_mat(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref)->Arg(8)->Arg(16)->Arg(32);

void bm_class_function(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  const SurfaceModel model(g);
  const Catalog cat = Catalog::standard(model);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g; ++i) {
    names.push_back("t_a" + std::to_string(i + 1));
    names.push_back("t_b" + std::to_string(i + 1));
  }
  names.push_back("t_d");
  Rng rng(23);
  const auto rep = evaluate(random_word(rng, names, 8), cat, model);
  for (auto _ : state) benchmark::DoNotOptimize(class_function_m(rep));
}
BENCHMARK(bm_class_function)->Arg(1)->Arg(2)->Arg(4);

void bm_meyer_tau(benchmark::State& state) {
  const auto g = static_cast<std::size_t>(state.range(0));
  const SurfaceModel model(g);
  const Catalog cat = Catalog::standard(model);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g; ++i) {
    names.push_back("t_a" + std::to_string(i + 1));
    names.push_back("t_b" + std::to_string(i + 1));
  }
  names.push_back("t_d");
  Rng rng(29);
  const auto a = annulus(evaluate(random_word(rng, names, 6), cat, model));
  const auto b = annulus(evaluate(random_word(rng, names, 6), cat, model));
  for (auto _ : state) benchmark::DoNotOptimize(meyer_tau(a, b));
}
BENCHMARK(bm_meyer_tau)->Arg(1)->Arg(2)->Arg(3);

void bm_wall_signature(benchmark::State& state) {
  Rng rng(31);
  const auto triple = pants_triple(ProjectiveRational(rng.uniform(1, 9), rng.uniform(-9, 9)),
                                   ProjectiveRational(rng.uniform(1, 9), rng.uniform(-9, 9)),
                                   ProjectiveRational(rng.uniform(1, 9), rng.uniform(-9, 9)));
  for (auto _ : state) benchmark::DoNotOptimize(wall_signature(triple));
}
BENCHMARK(bm_wall_signature);

}  // namespace
