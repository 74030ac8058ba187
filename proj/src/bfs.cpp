#include "permtree/bfs.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <stdexcept>

#include <omp.h>

#include "permtree/errors.hpp"

namespace permtree {

Csr Csr::from_rows(std::uint32_t vertex_count, const std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<std::vector<std::uint32_t>> adj(vertex_count);
  for (const auto& row : rows) {
    if (row.size() != vertex_count) throw std::invalid_argument("adjacency row has wrong length");
    for (std::uint32_t v = 0; v < vertex_count; ++v) {
      std::uint32_t w = row[v];
      if (w == v) continue;
      adj[v].push_back(w);
      adj[w].push_back(v);
    }
  }
  Csr csr;
  csr.offsets.reserve(vertex_count + 1);
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    csr.targets.insert(csr.targets.end(), list.begin(), list.end());
    csr.offsets.push_back(static_cast<std::uint32_t>(csr.targets.size()));
  }
  return csr;
}

namespace bfs {

std::vector<std::uint32_t> distances_serial(const Csr& graph, std::uint32_t source) {
  std::vector<std::uint32_t> dist(graph.vertex_count(), kUnreachable);
  std::vector<std::uint32_t> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t v = queue[head];
    for (std::uint32_t e = graph.offsets[v]; e < graph.offsets[v + 1]; ++e) {
      std::uint32_t w = graph.targets[e];
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> distances_parallel(const Csr& graph, std::uint32_t source) {
  const std::uint32_t n = graph.vertex_count();
  auto dist = std::make_unique<std::atomic<std::uint32_t>[]>(n);
  for (std::uint32_t v = 0; v < n; ++v) dist[v].store(kUnreachable, std::memory_order_relaxed);
  dist[source] = 0;
  std::vector<std::uint32_t> frontier{source};
  std::uint32_t level = 0;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
#pragma omp parallel
    {
      std::vector<std::uint32_t> local;
#pragma omp for schedule(dynamic, 64) nowait
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        std::uint32_t v = frontier[i];
        for (std::uint32_t e = graph.offsets[v]; e < graph.offsets[v + 1]; ++e) {
          std::uint32_t w = graph.targets[e];
          std::uint32_t expected = kUnreachable;
          if (dist[w].load(std::memory_order_relaxed) == kUnreachable &&
              dist[w].compare_exchange_strong(expected, level + 1, std::memory_order_relaxed))
            local.push_back(w);
        }
      }
#pragma omp critical
      next.insert(next.end(), local.begin(), local.end());
    }
    frontier = std::move(next);
    ++level;
  }
  std::vector<std::uint32_t> result(n);
  for (std::uint32_t v = 0; v < n; ++v) result[v] = dist[v].load(std::memory_order_relaxed);
  return result;
}

namespace {

std::uint32_t eccentricity(const std::vector<std::uint32_t>& dist) {
  std::uint32_t worst = 0;
  for (std::uint32_t d : dist) worst = std::max(worst, d);
  return worst;
}

}  // namespace

std::uint32_t diameter_serial(const Csr& graph) {
  std::uint32_t worst = 0;
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
    worst = std::max(worst, eccentricity(distances_serial(graph, v)));
    if (worst == kUnreachable) break;
  }
  return worst;
}

std::uint32_t diameter_parallel(const Csr& graph) {
  const auto n = static_cast<std::int64_t>(graph.vertex_count());
  std::uint32_t worst = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(max : worst)
  for (std::int64_t v = 0; v < n; ++v)
    worst = std::max(worst, eccentricity(distances_serial(graph, static_cast<std::uint32_t>(v))));
  return worst;
}

namespace {

struct CayleySetup {
  std::vector<Permutation> moves;
  std::uint32_t order;
  std::size_t base_len;
};

CayleySetup prepare(const PermGroup& g, const std::vector<Permutation>& s) {
  if (g.order() >= BigInt(kUnreachable)) throw ResourceLimitError("group too large for Cayley BFS");
  CayleySetup setup{{}, static_cast<std::uint32_t>(g.order()), g.levels().size()};
  for (const auto& x : s) {
    if (!g.contains(x)) throw std::invalid_argument("Cayley generator outside the group");
    for (const auto& y : {x, x.inverse()})
      if (!y.is_identity() && std::find(setup.moves.begin(), setup.moves.end(), y) == setup.moves.end())
        setup.moves.push_back(y);
  }
  return setup;
}

}  // namespace

std::uint32_t cayley_diameter_serial(const PermGroup& g, const std::vector<Permutation>& s) {
  auto setup = prepare(g, s);
  std::vector<bool> seen(setup.order, false);
  std::vector<Point> images(setup.base_len), moved(setup.base_len);
  std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(g.rank(Permutation(g.degree())))};
  seen[frontier[0]] = true;
  std::uint64_t reached = 1;
  std::uint32_t depth = 0;
  while (true) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t r : frontier) {
      g.unrank_base_images(r, images);
      for (const auto& m : setup.moves) {
        for (std::size_t j = 0; j < images.size(); ++j) moved[j] = m(images[j]);
        auto q = static_cast<std::uint32_t>(g.rank_base_images(moved));
        if (!seen[q]) {
          seen[q] = true;
          next.push_back(q);
        }
      }
    }
    if (next.empty()) break;
    reached += next.size();
    frontier = std::move(next);
    ++depth;
  }
  return reached == setup.order ? depth : kUnreachable;
}

std::uint32_t cayley_diameter_parallel(const PermGroup& g, const std::vector<Permutation>& s) {
  auto setup = prepare(g, s);
  const std::size_t words = (setup.order + 63) / 64;
  auto seen = std::make_unique<std::atomic<std::uint64_t>[]>(words);
  for (std::size_t w = 0; w < words; ++w) seen[w].store(0, std::memory_order_relaxed);
  auto claim = [&](std::uint32_t q) {
    std::uint64_t bit = std::uint64_t{1} << (q % 64);
    return (seen[q / 64].fetch_or(bit, std::memory_order_relaxed) & bit) == 0;
  };
  std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(g.rank(Permutation(g.degree())))};
  claim(frontier[0]);
  std::uint64_t reached = 1;
  std::uint32_t depth = 0;
  while (true) {
    std::vector<std::uint32_t> next;
#pragma omp parallel
    {
      std::vector<Point> images(setup.base_len), moved(setup.base_len);
      std::vector<std::uint32_t> local;
#pragma omp for schedule(dynamic, 256) nowait
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        g.unrank_base_images(frontier[i], images);
        for (const auto& m : setup.moves) {
          for (std::size_t j = 0; j < images.size(); ++j) moved[j] = m(images[j]);
          auto q = static_cast<std::uint32_t>(g.rank_base_images(moved));
          if (claim(q)) local.push_back(q);
        }
      }
#pragma omp critical
      next.insert(next.end(), local.begin(), local.end());
    }
    if (next.empty()) break;
    reached += next.size();
    frontier = std::move(next);
    ++depth;
  }
  return reached == setup.order ? depth : kUnreachable;
}

}  // namespace bfs

}  // namespace permtree
