#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "tri/bench.hpp"
#include "tri/network.hpp"
#include "tri/rng.hpp"
#include "tri/statespace.hpp"
#include "tri/ugraph.hpp"

namespace trifix {

inline tri::UGraph random_ugraph(int n, double edge_prob, tri::SplitMix64& rng) {
  tri::UGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < edge_prob) g.add_edge(u, v);
  return g;
}

inline tri::EliminationOrder random_order(const tri::UGraph& g,
                                          tri::SplitMix64& rng) {
  std::vector<int> order = g.alive_vertices();
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.bounded(i)]);
  return {std::move(order)};
}

// Small mixed network: stochastic cardinalities 2..4, deterministic
// cardinality capped at 12, no observed vertices.
inline tri::Network random_mixed_net(int nodes, double p_det,
                                     std::uint64_t seed) {
  tri::GenParams p;
  p.nodes = nodes;
  p.max_in_degree = 3;
  p.p_det = p_det;
  p.p_obs = 0.0;
  p.stoch_card_min = 2;
  p.stoch_card_max = 4;
  p.det_card_cap = 12;
  p.seed = seed;
  return tri::gen_random_network(p);
}

// Exponential-time reference: a graph is chordal iff no vertex subset of
// size >= 4 induces a cycle.
inline bool naive_is_chordal(const tri::UGraph& g) {
  const std::vector<int> alive = g.alive_vertices();
  const int n = static_cast<int>(alive.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) sub.push_back(alive[i]);
    if (sub.size() < 4) continue;
    bool cycle = true;
    int edges = 0;
    for (int u : sub) {
      int deg = 0;
      for (int v : sub)
        if (u != v && g.has_edge(u, v)) ++deg;
      if (deg != 2) {
        cycle = false;
        break;
      }
      edges += deg;
    }
    if (!cycle || edges != 2 * static_cast<int>(sub.size())) continue;
    // Degrees all 2 and |E| = |S|: a disjoint union of cycles; connected?
    std::vector<int> stack{sub[0]};
    std::vector<char> seen(static_cast<std::size_t>(g.capacity()), 0);
    seen[static_cast<std::size_t>(sub[0])] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : sub)
        if (!seen[static_cast<std::size_t>(v)] && g.has_edge(u, v)) {
          seen[static_cast<std::size_t>(v)] = 1;
          ++reached;
          stack.push_back(v);
        }
    }
    if (reached == static_cast<int>(sub.size())) return false;  // induced hole
  }
  return true;
}

// Brute-force maximal cliques by subset enumeration (n <= ~12).
inline std::vector<std::vector<int>> naive_maximal_cliques(
    const tri::UGraph& g) {
  const std::vector<int> alive = g.alive_vertices();
  const int n = static_cast<int>(alive.size());
  std::vector<int> cliques;
  for (int mask = 1; mask < (1 << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask & (1 << i)) && (mask & (1 << j)) &&
            !g.has_edge(alive[i], alive[j]))
          ok = false;
    if (ok) cliques.push_back(mask);
  }
  std::vector<std::vector<int>> out;
  for (int m : cliques) {
    bool maximal = true;
    for (int m2 : cliques)
      if (m2 != m && (m & m2) == m) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    std::vector<int> c;
    for (int i = 0; i < n; ++i)
      if (m & (1 << i)) c.push_back(alive[i]);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All triangulations of the moral graph of `net`, memoized by fill mask over
// the canonical non-adjacent-pair list. Scores are determinism-aware.
struct TriangulationEnumeration {
  std::vector<tri::Edge> pairs;          // canonical order
  std::vector<char> chordal;             // per mask
  std::vector<tri::StateSpace> score;    // valid when chordal[mask]
  tri::UGraph moral;

  tri::UGraph graph_of(std::uint32_t mask) const {
    tri::UGraph g = moral;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (std::uint32_t{1} << i)) g.add_edge(pairs[i].first,
                                                     pairs[i].second);
    return g;
  }
};

// After adding the removable edge e to a chordal graph, the unique maximal
// clique holding both endpoints. Requires the grown graph to be chordal.
inline std::vector<int> merged_clique(const tri::UGraph& grown,
                                      tri::Edge e) {
  std::vector<int> found;
  for (const std::vector<int>& c : tri::maximal_cliques_chordal(grown)) {
    if (std::binary_search(c.begin(), c.end(), e.first) &&
        std::binary_search(c.begin(), c.end(), e.second)) {
      if (!found.empty()) throw tri::Error("merged clique is not unique");
      found = c;
    }
  }
  return found;
}

// True when an endpoint of e is deterministic with its entire parent set
// inside the merged clique: adding e then merges a clique whose
// deterministic member was already fully determined, which can lower the
// state space without the edge being ancestral.
inline bool determined_endpoint_merge(const tri::UGraph& grown,
                                      const tri::Network& net, tri::Edge e) {
  const std::vector<int> clique = merged_clique(grown, e);
  for (int x : {e.first, e.second}) {
    const tri::Vertex& vx = net[x];
    if (!vx.deterministic) continue;
    bool inside = true;
    for (int p : vx.parents)
      inside = inside && std::binary_search(clique.begin(), clique.end(), p);
    if (inside) return true;
  }
  return false;
}

inline TriangulationEnumeration enumerate_triangulations(
    const tri::Network& net) {
  TriangulationEnumeration en;
  en.moral = tri::moralize(net).graph;
  const std::vector<int> alive = en.moral.alive_vertices();
  for (std::size_t i = 0; i < alive.size(); ++i)
    for (std::size_t j = i + 1; j < alive.size(); ++j)
      if (!en.moral.has_edge(alive[i], alive[j]))
        en.pairs.emplace_back(alive[i], alive[j]);
  const std::size_t count = std::size_t{1} << en.pairs.size();
  en.chordal.assign(count, 0);
  en.score.assign(count, tri::StateSpace{0});
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    tri::UGraph g = en.graph_of(mask);
    if (!tri::is_chordal_quick(g)) continue;
    en.chordal[mask] = 1;
    en.score[mask] = tri::chordal_graph_state_space(g, net);
  }
  return en;
}

}  // namespace trifix
