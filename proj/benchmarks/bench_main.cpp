#include <bci/dual.hpp>
#include <bci/family.hpp>
#include <bci/lefschetz.hpp>
#include <bci/oracle.hpp>
#include <bci/reduction_graph.hpp>
#include <bci/resultant.hpp>

#include <benchmark/benchmark.h>

#include <string>

namespace {

// f_i = a_i x_i^d - b_i x_{i+1} x_{i+2}^{d-1}, indices mod n.
bci::BinomialFamily ring(std::size_t n, unsigned long d) {
  std::string text;
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t j = i % n + 1, k = j % n + 1;
    if (i > 1) text += "; ";
    text += "f" + std::to_string(i) + " = a" + std::to_string(i) + "*x" + std::to_string(i) + "^" + std::to_string(d) +
            " - b" + std::to_string(i) + "*x" + std::to_string(j) + "*x" + std::to_string(k) + "^" + std::to_string(d - 1);
  }
  return bci::parse_family(text);
}

void BM_Graph(benchmark::State& state) {
  auto fam = ring(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(bci::build_graph(fam, fam.resultant_degree()));
}
BENCHMARK(BM_Graph)->DenseRange(3, 6);

void BM_DetStructural(benchmark::State& state) {
  auto fam = ring(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(bci::det_structural(fam));
}
BENCHMARK(BM_DetStructural)->DenseRange(3, 6);

void BM_DualGenerator(benchmark::State& state) {
  auto fam = ring(state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(bci::dual_generator(fam));
}
BENCHMARK(BM_DualGenerator)->DenseRange(3, 6);

void BM_HilbertOracle(benchmark::State& state) {
  auto fam = bci::specialize(ring(state.range(0), 2), bci::parse_assignment("a=1,b=2", state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bci::hilbert_function(fam, fam.resultant_degree()));
}
BENCHMARK(BM_HilbertOracle)->DenseRange(3, 5);

void BM_Hessian(benchmark::State& state) {
  auto fam = bci::specialize(ring(5, 2), bci::parse_assignment("a=1,b=2", 5));
  bci::QPoly F = bci::dual_generator(fam).evaluate(fam.coefficients());
  for (auto _ : state) benchmark::DoNotOptimize(bci::hessian(F, state.range(0)));
}
BENCHMARK(BM_Hessian)->DenseRange(1, 2);

}  // namespace

BENCHMARK_MAIN();
