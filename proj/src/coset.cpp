#include "permtree/coset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permtree/element_table.hpp"
#include "permtree/errors.hpp"
#include "permtree/group_ops.hpp"

namespace permtree {

namespace {

std::vector<Point> all_points(std::size_t n) {
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

CosetSpace::CosetSpace(PermGroup g, PermGroup h, std::uint64_t max_cosets)
    : g_(std::move(g)), h_(std::move(h)) {
  if (h_.degree() != g_.degree() || !h_.is_subgroup_of(g_))
    throw std::invalid_argument("coset space: H is not a subgroup of G");
  BigInt index = g_.order() / h_.order();
  if (index > max_cosets) throw ResourceLimitError("coset space exceeds the configured coset limit");
  h_ordered_ = PermGroup(g_.degree(), h_.generators(), all_points(g_.degree()));
  reps_.push_back(Permutation(g_.degree()));
  ids_.emplace(reps_.front(), 0);
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    for (const auto& s : g_.generators()) {
      Permutation c = canonical(compose(s, reps_[k]));
      if (ids_.emplace(c, static_cast<std::uint32_t>(reps_.size())).second) reps_.push_back(std::move(c));
    }
  }
  if (BigInt(reps_.size()) != index) throw std::logic_error("coset enumeration missed cosets");
}

Permutation CosetSpace::canonical(const Permutation& x) const {
  Permutation y = x;
  for (const auto& level : h_ordered_.levels()) {
    if (level.orbit.size() == 1) continue;
    std::size_t best = 0;
    for (std::size_t k = 1; k < level.orbit.size(); ++k)
      if (y(level.orbit[k]) < y(level.orbit[best])) best = k;
    if (best != 0) y = compose(y, level.transversal[best]);
  }
  return y;
}

std::uint32_t CosetSpace::coset_of(const Permutation& x) const {
  auto it = ids_.find(canonical(x));
  if (it == ids_.end()) throw std::invalid_argument("element is not in G");
  return it->second;
}

SchreierGraph schreier_graph(std::shared_ptr<const CosetSpace> space, std::vector<Permutation> labels) {
  SchreierGraph graph{std::move(space), std::move(labels), {}};
  const auto& reps = graph.space->transversal();
  for (const auto& s : graph.labels) {
    std::vector<std::uint32_t> row(reps.size());
    for (std::size_t v = 0; v < reps.size(); ++v) row[v] = graph.space->coset_of(compose(s, reps[v]));
    graph.rows.push_back(std::move(row));
  }
  return graph;
}

std::vector<Permutation> with_inverses(const std::vector<Permutation>& s) {
  if (s.empty()) throw std::invalid_argument("empty generating set");
  std::vector<Permutation> out{Permutation(s.front().degree())};
  for (const auto& x : s)
    for (const auto& y : {x, x.inverse()})
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  return out;
}

bool generates(const PermGroup& g, const std::vector<Permutation>& s) {
  for (const auto& x : s)
    if (x.degree() != g.degree() || !g.contains(x)) return false;
  return PermGroup(g.degree(), s).order() == g.order();
}

std::uint32_t schreier_diameter(const PermGroup& g, const PermGroup& h, const std::vector<Permutation>& s,
                                std::uint64_t max_cosets) {
  if (!generates(g, s)) throw std::invalid_argument("S does not generate G");
  auto space = std::make_shared<const CosetSpace>(g, h, max_cosets);
  return bfs::diameter_parallel(schreier_graph(space, s).undirected());
}

SchreierGenerators schreier_generators(const PermGroup& g, const PermGroup& h,
                                       const std::vector<Permutation>& s, std::uint64_t max_cosets) {
  if (!generates(g, s)) throw std::invalid_argument("S does not generate G");
  std::vector<std::uint32_t> inverse_index(s.size());
  bool has_identity = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    has_identity = has_identity || s[i].is_identity();
    auto inv = s[i].inverse();
    auto it = std::find(s.begin(), s.end(), inv);
    if (it == s.end()) throw std::invalid_argument("S is not closed under inverses");
    inverse_index[i] = static_cast<std::uint32_t>(it - s.begin());
  }
  if (!has_identity) throw std::invalid_argument("S does not contain the identity");

  auto space = std::make_shared<const CosetSpace>(g, h, max_cosets);
  auto graph = schreier_graph(space, s);
  SchreierGenerators out;
  out.diameter = bfs::diameter_serial(graph.undirected());

  // Breadth-first words tau(v) from the trivial coset.
  const std::uint32_t n = graph.vertex_count();
  std::vector<std::vector<std::uint32_t>> tau_word(n);
  std::vector<Permutation> tau(n);
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  tau[0] = Permutation(g.degree());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t v = queue[head];
    for (std::uint32_t i = 0; i < s.size(); ++i) {
      std::uint32_t w = graph.rows[i][v];
      if (seen[w]) continue;
      seen[w] = true;
      tau[w] = compose(s[i], tau[v]);
      tau_word[w] = tau_word[v];
      tau_word[w].push_back(i);
      queue.push_back(w);
    }
  }

  std::unordered_map<Permutation, std::size_t, PermutationHash> found;
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t i = 0; i < s.size(); ++i) {
      std::uint32_t w = graph.rows[i][v];
      Permutation u = compose(tau[w].inverse(), compose(s[i], tau[v]));
      if (u.is_identity() || found.count(u)) continue;
      std::vector<std::uint32_t> word = tau_word[v];
      word.push_back(i);
      for (auto it = tau_word[w].rbegin(); it != tau_word[w].rend(); ++it) word.push_back(inverse_index[*it]);
      found.emplace(u, out.generators.size());
      out.generators.push_back({std::move(u), std::move(word)});
    }
  }
  return out;
}

std::vector<PairDiameter> diam_pair_exact_many(const PermGroup& g, const std::vector<PermGroup>& hs,
                                               std::uint64_t threshold) {
  if (threshold > 64) throw std::invalid_argument("exhaustive threshold is limited to 64");
  if (g.order() > threshold) throw ResourceLimitError("group too large for exhaustive diameter");
  ElementTable table(g, threshold);
  const std::size_t order = table.size();

  std::vector<std::uint32_t> classes;
  for (std::uint32_t i = 0; i < order; ++i)
    if (i != table.identity() && table.inv(i) >= i) classes.push_back(i);
  const std::size_t c = classes.size();
  if (c > 30) throw ResourceLimitError("too many inverse classes for exhaustive enumeration");

  // act[h][x][v]: vertex of x * (v-th coset of hs[h]).
  struct Action {
    std::size_t index;
    std::vector<std::vector<std::uint32_t>> act;
  };
  std::vector<Action> actions;
  for (const auto& h : hs) {
    CosetSpace space(g, h);
    Action a{space.index(), std::vector<std::vector<std::uint32_t>>(order)};
    for (std::uint32_t x = 0; x < order; ++x)
      for (const auto& rep : space.transversal()) a.act[x].push_back(space.coset_of(compose(table.element(x), rep)));
    actions.push_back(std::move(a));
  }

  const std::uint64_t full = order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
  const std::uint64_t masks = std::uint64_t{1} << c;
  const std::size_t hcount = hs.size();
  std::vector<std::uint32_t> best(hcount, 0);
  constexpr std::uint64_t kNoMask = ~std::uint64_t{0};
  std::vector<std::uint64_t> best_mask(hcount, kNoMask);
  std::uint64_t examined = 0;

#pragma omp parallel
  {
    std::vector<std::uint32_t> local_best(hcount, 0);
    std::vector<std::uint64_t> local_mask(hcount, kNoMask);
    std::uint64_t local_examined = 0;
    std::vector<std::uint32_t> gens;
    std::vector<std::uint64_t> adj;
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t m = 0; m < static_cast<std::int64_t>(masks); ++m) {
      gens.clear();
      for (std::size_t k = 0; k < c; ++k)
        if (m >> k & 1) gens.push_back(classes[k]);
      // Closure as a bitmask over element indices.
      std::uint64_t reach = std::uint64_t{1} << table.identity();
      std::vector<std::uint32_t> list{table.identity()};
      for (std::size_t head = 0; head < list.size(); ++head)
        for (std::uint32_t x : gens)
          for (std::uint32_t y : {table.mul(x, list[head]), table.mul(table.inv(x), list[head])})
            if (!(reach >> y & 1)) {
              reach |= std::uint64_t{1} << y;
              list.push_back(y);
            }
      if (reach != full) continue;
      ++local_examined;
      for (std::size_t hi = 0; hi < hcount; ++hi) {
        const auto& a = actions[hi];
        const std::size_t nv = a.index;
        adj.assign(nv, 0);
        for (std::uint32_t x : gens)
          for (std::size_t v = 0; v < nv; ++v) {
            std::uint32_t w = a.act[x][v];
            adj[v] |= std::uint64_t{1} << w;
            adj[w] |= std::uint64_t{1} << v;
          }
        std::uint32_t diam = 0;
        for (std::size_t src = 0; src < nv; ++src) {
          std::uint64_t visited = std::uint64_t{1} << src, frontier = visited;
          std::uint32_t depth = 0;
          const std::uint64_t all = nv == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nv) - 1;
          while (visited != all) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
            next &= ~visited;
            visited |= next;
            frontier = next;
            ++depth;
          }
          diam = std::max(diam, depth);
        }
        if (diam > local_best[hi] || (diam == local_best[hi] && static_cast<std::uint64_t>(m) < local_mask[hi])) {
          local_best[hi] = diam;
          local_mask[hi] = static_cast<std::uint64_t>(m);
        }
      }
    }
#pragma omp critical
    {
      examined += local_examined;
      for (std::size_t hi = 0; hi < hcount; ++hi) {
        if (local_best[hi] > best[hi] || (local_best[hi] == best[hi] && local_mask[hi] < best_mask[hi])) {
          best[hi] = local_best[hi];
          best_mask[hi] = local_mask[hi];
        }
      }
    }
  }

  std::vector<PairDiameter> result;
  for (std::size_t hi = 0; hi < hcount; ++hi) {
    PairDiameter pd;
    pd.diameter = best[hi];
    pd.sets_examined = examined;
    pd.witness.push_back(Permutation(g.degree()));
    for (std::size_t k = 0; k < c; ++k)
      if (best_mask[hi] >> k & 1) {
        pd.witness.push_back(table.element(classes[k]));
        if (table.inv(classes[k]) != classes[k]) pd.witness.push_back(table.element(table.inv(classes[k])));
      }
    result.push_back(std::move(pd));
  }
  return result;
}

PairDiameter diam_pair_exact(const PermGroup& g, const PermGroup& h, std::uint64_t threshold) {
  return diam_pair_exact_many(g, {h}, threshold).front();
}

std::vector<Permutation> extend_generating_set(const PermGroup& g, const PermGroup& g_sub,
                                               const std::vector<Permutation>& s_sub) {
  if (!g_sub.is_subgroup_of(g)) throw std::invalid_argument("G' is not a subgroup of G");
  if (!generates(g_sub, s_sub)) throw std::invalid_argument("S' does not generate G'");
  std::vector<Permutation> s = s_sub;
  PermGroup current(g.degree(), s);
  std::vector<Permutation> candidates = g.generators();
  for (const auto& x : g.strong_generators()) candidates.push_back(x);
  for (const auto& x : candidates) {
    if (current.order() == g.order()) break;
    if (current.contains(x)) continue;
    s.push_back(x);
    current = PermGroup(g.degree(), s);
  }
  return s;
}

InducedSubgraphReport check_induced_subgraph(const PermGroup& g, const PermGroup& h, const PermGroup& g_sub,
                                             const std::vector<Permutation>& s_sub,
                                             const std::vector<Permutation>& s) {
  InducedSubgraphReport report;
  PermGroup h_sub = intersection(g_sub, h);
  auto big = std::make_shared<const CosetSpace>(g, h);
  auto small = std::make_shared<const CosetSpace>(g_sub, h_sub);
  auto big_graph = schreier_graph(big, s);
  auto small_graph = schreier_graph(small, s_sub);

  std::vector<std::size_t> label_of_sub;
  for (const auto& x : s_sub) {
    auto it = std::find(s.begin(), s.end(), x);
    if (it == s.end()) return report;
    label_of_sub.push_back(static_cast<std::size_t>(it - s.begin()));
  }

  // Walk {g'H} from H along S'-edges, carrying an element g' for each vertex.
  std::vector<int> phi(big->index(), -1);
  std::vector<std::uint32_t> order{0};
  std::vector<Permutation> elem(big->index());
  elem[0] = Permutation(g.degree());
  phi[0] = static_cast<int>(small->coset_of(elem[0]));
  for (std::size_t head = 0; head < order.size(); ++head) {
    std::uint32_t v = order[head];
    for (std::size_t i = 0; i < s_sub.size(); ++i) {
      std::uint32_t w = big_graph.rows[label_of_sub[i]][v];
      if (phi[w] >= 0) continue;
      elem[w] = compose(s_sub[i], elem[v]);
      phi[w] = static_cast<int>(small->coset_of(elem[w]));
      order.push_back(w);
    }
  }
  report.vertices = order.size();
  std::vector<bool> hit(small->index(), false);
  bool injective = true;
  for (std::uint32_t v : order) {
    if (hit[phi[v]]) injective = false;
    hit[phi[v]] = true;
  }
  report.bijection = injective && order.size() == small->index();

  report.edges_match = true;
  for (std::uint32_t v : order)
    for (std::size_t i = 0; i < s_sub.size(); ++i) {
      std::uint32_t w = big_graph.rows[label_of_sub[i]][v];
      if (static_cast<std::uint32_t>(phi[w]) != small_graph.rows[i][phi[v]]) report.edges_match = false;
    }

  std::vector<bool> is_sub_label(s.size(), false);
  for (std::size_t l : label_of_sub) is_sub_label[l] = true;
  for (std::uint32_t v : order)
    for (std::size_t l = 0; l < s.size(); ++l) {
      if (is_sub_label[l]) continue;
      std::uint32_t w = big_graph.rows[l][v];
      if (w != v && phi[w] >= 0) ++report.extra_edges;
    }
  return report;
}

std::string to_dot(const SchreierGraph& graph) {
  std::ostringstream out;
  out << "graph schreier {\n";
  const auto& reps = graph.space->transversal();
  for (std::size_t v = 0; v < reps.size(); ++v)
    out << "  v" << v << " [label=\"" << reps[v].to_string() << "\"];\n";
  for (std::size_t l = 0; l < graph.rows.size(); ++l)
    for (std::size_t v = 0; v < reps.size(); ++v) {
      std::uint32_t w = graph.rows[l][v];
      if (w != v) out << "  v" << v << " -- v" << w << " [label=\"s" << l << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

namespace {

void put_u32(std::string& out, std::uint32_t x) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((x >> (8 * k)) & 0xff));
}

std::uint32_t get_u32(const std::string& in, std::size_t pos) {
  if (pos + 4 > in.size()) throw std::invalid_argument("truncated adjacency data");
  std::uint32_t x = 0;
  for (int k = 0; k < 4; ++k) x |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[pos + k])) << (8 * k);
  return x;
}

}  // namespace

std::string to_binary(const SchreierGraph& graph) {
  std::string out;
  const std::uint32_t n = graph.vertex_count();
  put_u32(out, n);
  put_u32(out, static_cast<std::uint32_t>(graph.rows.size()));
  for (std::uint32_t v = 0; v < n; ++v)
    for (const auto& row : graph.rows) put_u32(out, row[v]);
  return out;
}

std::vector<std::vector<std::uint32_t>> rows_from_binary(const std::string& bytes) {
  std::uint32_t n = get_u32(bytes, 0), labels = get_u32(bytes, 4);
  std::vector<std::vector<std::uint32_t>> rows(labels, std::vector<std::uint32_t>(n));
  std::size_t pos = 8;
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t l = 0; l < labels; ++l, pos += 4) rows[l][v] = get_u32(bytes, pos);
  return rows;
}

}  // namespace permtree
