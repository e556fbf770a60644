#include <benchmark/benchmark.h>

#include <random>

#include "hazkit/cubes.hpp"
#include "hazkit/families.hpp"
#include "hazkit/hazards.hpp"
#include "hazkit/synthesis.hpp"

using namespace hazkit;

namespace {

circuit sample_circuit(std::size_t arity, std::size_t gates) {
  std::mt19937 rng(0xbe9c);
  circuit_builder b(arity);
  std::vector<node_id> pool;
  for (std::uint32_t v = 0; v < arity; ++v) {
    pool.push_back(b.add_input(v, false));
    pool.push_back(b.add_input(v, true));
  }
  node_id out = pool.front();
  for (std::size_t g = 0; g < gates; ++g) {
    node_id x = pool[rng() % pool.size()];
    node_id y = pool[rng() % pool.size()];
    out = rng() % 2 ? b.add_and(x, y) : b.add_or(x, y);
    pool.push_back(out);
  }
  return b.build(out);
}

void BM_detect_oracle(benchmark::State& state) {
  circuit c = sample_circuit(static_cast<std::size_t>(state.range(0)), 30);
  for (auto _ : state) benchmark::DoNotOptimize(detect_oracle(c));
}
BENCHMARK(BM_detect_oracle)->Arg(6)->Arg(8)->Arg(10);

void BM_detect_structural(benchmark::State& state) {
  circuit c = sample_circuit(static_cast<std::size_t>(state.range(0)), 30);
  for (auto _ : state) benchmark::DoNotOptimize(detect_structural(c));
}
BENCHMARK(BM_detect_structural)->Arg(6)->Arg(8)->Arg(10);

void BM_prime_implicants(benchmark::State& state) {
  std::mt19937 rng(0x517e);
  truth_table f = truth_table::random(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(prime_implicants_qmc(f));
}
BENCHMARK(BM_prime_implicants)->Arg(8)->Arg(10)->Arg(12);

void BM_formal_dnf_parity(benchmark::State& state) {
  circuit c = mk_parity(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(formal_dnf(c));
}
BENCHMARK(BM_formal_dnf_parity)->Arg(8)->Arg(10)->Arg(12);

void BM_huffman(benchmark::State& state) {
  std::mt19937 rng(0x9u);
  truth_table f = truth_table::random(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(huffman_dnf(f));
}
BENCHMARK(BM_huffman)->Arg(6)->Arg(8);

void BM_shannon(benchmark::State& state) {
  std::mt19937 rng(0xau);
  truth_table f = truth_table::random(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_shannon(f, 3));
}
BENCHMARK(BM_shannon)->Arg(8)->Arg(10)->Arg(12);

} // namespace

BENCHMARK_MAIN();
