#include <map>

#include <benchmark/benchmark.h>

#include "permtree/bfs.hpp"
#include "permtree/coset.hpp"
#include "permtree/corpus.hpp"

using namespace permtree;

namespace {

const PermGroup& sym(std::size_t n) {
  static std::map<std::size_t, PermGroup> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, PermGroup(n, make::symmetric(n))).first;
  return it->second;
}

void cayley_serial(benchmark::State& st) {
  const auto& g = sym(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bfs::cayley_diameter_serial(g, g.generators()));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(g.order()));
}

void cayley_parallel(benchmark::State& st) {
  const auto& g = sym(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bfs::cayley_diameter_parallel(g, g.generators()));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(g.order()));
}

Csr coset_graph(std::size_t n) {
  // Sym(n) acting on the cosets of Sym(2) x Sym(n-2).
  const auto& g = sym(n);
  PermGroup h(n, make::direct_sum(make::symmetric(2), 2, make::symmetric(n - 2), n - 2));
  auto space = std::make_shared<const CosetSpace>(g, h);
  return schreier_graph(space, with_inverses(g.generators())).undirected();
}

void all_pairs_serial(benchmark::State& st) {
  auto graph = coset_graph(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bfs::diameter_serial(graph));
}

void all_pairs_parallel(benchmark::State& st) {
  auto graph = coset_graph(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bfs::diameter_parallel(graph));
}

}  // namespace

BENCHMARK(cayley_serial)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(cayley_parallel)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(all_pairs_serial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(all_pairs_parallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
