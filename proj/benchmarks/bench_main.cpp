#include <benchmark/benchmark.h>

#include <random>

#include "hermia/counting.hpp"
#include "hermia/enumeration.hpp"
#include "hermia/families.hpp"
#include "hermia/isomorphism.hpp"
#include "hermia/spectra.hpp"
#include "hermia/switching.hpp"
#include "hermia/twins.hpp"

using namespace hermia;

namespace {

Digraph random_digraph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> st(0, 3);
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) d.set_state(u, v, static_cast<PairState>(st(rng)));
  }
  return d;
}

void BM_CharPoly(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<std::size_t>(state.range(0)), 1);
  const HermitianMatrix h = hermitian(d);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(h));
}
BENCHMARK(BM_CharPoly)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_CharPolyExpansion(benchmark::State& state) {
  const Digraph d = twin_expand(make_named(Named::KMinus), ExpansionVector(0, {9, 18, 20, 60}));
  const HermitianMatrix h = hermitian(d);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(h));
}
BENCHMARK(BM_CharPolyExpansion)->Unit(benchmark::kMillisecond);

void BM_Eigenvalues(benchmark::State& state) {
  const HermitianMatrix h = hermitian(random_digraph(static_cast<std::size_t>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(h));
}
BENCHMARK(BM_Eigenvalues)->Arg(8)->Arg(32);

void BM_CanonicalForm(benchmark::State& state) {
  const Digraph d = random_digraph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(8)->Arg(12);

void BM_CanonicalFormTwins(benchmark::State& state) {
  const Digraph d = twin_expand(make_named(Named::KMinus), ExpansionVector(0, {2, 3, 2, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalFormTwins);

void BM_SwitchingEquivalent(benchmark::State& state) {
  const Digraph a = twin_expand(make_named(Named::TMinus), ExpansionVector(0, {1, 1, 2}));
  const Digraph b = make_named(Named::TMinusB);
  for (auto _ : state) benchmark::DoNotOptimize(switching_equivalent(a, b));
}
BENCHMARK(BM_SwitchingEquivalent);

void BM_EnumerateDigraphs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_digraphs(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateDigraphs)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CollisionSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(expansion_collision_search(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CollisionSearch)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_CountSelfConverse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_self_converse(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CountSelfConverse)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
