#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "fencemonoid/enumerate.hpp"
#include "fencemonoid/factor.hpp"
#include "fencemonoid/fence.hpp"
#include "fencemonoid/genfam.hpp"
#include "fencemonoid/greens.hpp"

using namespace fencemonoid;

namespace {

const SemigroupTable& if_table(int n) {
  static std::map<int, SemigroupTable> tables;
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, build(n, Kind::IF)).first;
  return it->second;
}

}  // namespace

static void BM_Compose(benchmark::State& state) {
  const auto& s = if_table(8);
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, s.size() - 1);
  std::vector<std::pair<PartialInjection, PartialInjection>> pairs;
  for (int i = 0; i < 1024; ++i) pairs.emplace_back(s[pick(rng)], s[pick(rng)]);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ & 1023];
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_Compose);

static void BM_Membership(benchmark::State& state) {
  const auto& s = if_table(8);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(membership(s[i++ % s.size()]));
}
BENCHMARK(BM_Membership);

static void BM_BuildIF(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build(n, Kind::IF, {threads}).size());
}
BENCHMARK(BM_BuildIF)->Args({7, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

static void BM_BuildI(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build(7, Kind::I, {4}).size());
}
BENCHMARK(BM_BuildI)->Unit(benchmark::kMillisecond);

static void BM_ClosureG(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto gens = set_G(n);
  for (auto _ : state) benchmark::DoNotOptimize(closure(n, gens).size());
}
BENCHMARK(BM_ClosureG)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_JInvariant(benchmark::State& state) {
  const auto& s = if_table(8);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(j_invariant(s[i++ % s.size()]));
}
BENCHMARK(BM_JInvariant);

// One full sweep of constructive factorizations over IF_n.
static void BM_FactorizeSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& s = if_table(n);
  Factorizer f(n);
  for (auto _ : state) {
    std::size_t letters = 0;
    for (const auto& a : s) letters += f.constructive_j(a, false)->length();
    benchmark::DoNotOptimize(letters);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * s.size()));
}
BENCHMARK(BM_FactorizeSweep)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Irreducibles(benchmark::State& state) {
  const auto& s = if_table(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(irreducibles(s).size());
}
BENCHMARK(BM_Irreducibles)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
