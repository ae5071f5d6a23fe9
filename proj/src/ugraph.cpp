#include "tri/ugraph.hpp"

#include <algorithm>
#include <deque>

namespace tri {

UGraph::UGraph(int n) : n_(n), alive_(n), adj_(n, VertexSet(n)) {
  if (n < 0) throw Error("vertex count must be non-negative");
  alive_.set();
}

void UGraph::check_vertex(int v) const {
  if (!is_alive(v))
    throw Error("vertex " + std::to_string(v) + " is not alive");
}

std::vector<int> UGraph::alive_vertices() const {
  std::vector<int> out;
  out.reserve(alive_count());
  for (auto v = alive_.find_first(); v != VertexSet::npos;
       v = alive_.find_next(v))
    out.push_back(static_cast<int>(v));
  return out;
}

bool UGraph::has_edge(int u, int v) const {
  return u >= 0 && u < n_ && v >= 0 && v < n_ && u != v && adj_[u].test(v);
}

void UGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error("self-loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

void UGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].reset(v);
  adj_[v].reset(u);
}

const VertexSet& UGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int UGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v)
    if (alive_.test(v)) twice += static_cast<int>(adj_[v].count());
  return twice / 2;
}

std::vector<Edge> UGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    if (!alive_.test(u)) continue;
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos;
         v = adj_[u].find_next(v))
      out.emplace_back(u, static_cast<int>(v));
  }
  return out;
}

void UGraph::kill_vertex(int v) {
  check_vertex(v);
  for (auto u = adj_[v].find_first(); u != VertexSet::npos;
       u = adj_[v].find_next(u))
    adj_[u].reset(v);
  adj_[v].reset();
  alive_.reset(v);
}

void check_order(const UGraph& g, const EliminationOrder& a) {
  if (static_cast<int>(a.order.size()) != g.alive_count())
    throw Error("elimination order is not a bijection over alive vertices");
  VertexSet seen(g.capacity());
  for (int v : a.order) {
    if (!g.is_alive(v) || seen.test(v))
      throw Error("elimination order is not a bijection over alive vertices");
    seen.set(v);
  }
}

std::vector<Edge> deficiency(const UGraph& g, int v) {
  const VertexSet& nb = g.neighbors(v);
  std::vector<Edge> out;
  for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
    VertexSet missing = nb;
    missing -= g.neighbors(static_cast<int>(u));
    for (auto w = missing.find_next(u); w != VertexSet::npos;
         w = missing.find_next(w))
      out.emplace_back(static_cast<int>(u), static_cast<int>(w));
  }
  return out;
}

int deficiency_count(const UGraph& g, int v) {
  const VertexSet& nb = g.neighbors(v);
  int count = 0;
  for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
    VertexSet missing = nb;
    missing -= g.neighbors(static_cast<int>(u));
    for (auto w = missing.find_next(u); w != VertexSet::npos;
         w = missing.find_next(w))
      ++count;
  }
  return count;
}

void eliminate_in_place(UGraph& g, int v) {
  for (const Edge& e : deficiency(g, v)) g.add_edge(e.first, e.second);
  g.kill_vertex(v);
}

UGraph eliminate_vertex(const UGraph& g, int v) {
  UGraph out = g;
  eliminate_in_place(out, v);
  return out;
}

bool is_simplicial(const UGraph& g, int v) {
  const VertexSet& nb = g.neighbors(v);
  for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
    VertexSet rest = nb;
    rest.reset(u);
    if (!rest.is_subset_of(g.neighbors(static_cast<int>(u)))) return false;
  }
  return true;
}

namespace {

// Visit order of maximum cardinality search (ties to the lowest id),
// reversed so the result is the candidate elimination order: on a chordal
// graph the vertex visited first is eliminated last.
std::vector<int> mcs_candidate_order(const UGraph& g) {
  const int n = g.capacity();
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<int> visit;
  const int m = g.alive_count();
  visit.reserve(m);
  for (int step = 0; step < m; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!g.is_alive(v) || numbered[v]) continue;
      if (best == -1 || weight[v] > weight[best]) best = v;
    }
    numbered[best] = 1;
    visit.push_back(best);
    const VertexSet& nb = g.neighbors(best);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
      if (!numbered[u]) ++weight[u];
  }
  return {visit.rbegin(), visit.rend()};
}

// Some chordless cycle of length >= 4; empty when the graph is chordal.
// For every vertex v with a non-adjacent neighbor pair (u, w), a shortest
// u-w path through vertices outside N[v] closes a chordless cycle with v.
std::vector<int> find_hole(const UGraph& g) {
  const int n = g.capacity();
  for (int v = 0; v < n; ++v) {
    if (!g.is_alive(v)) continue;
    const VertexSet& nb = g.neighbors(v);
    for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
      for (auto w = nb.find_next(u); w != VertexSet::npos;
           w = nb.find_next(w)) {
        if (g.has_edge(static_cast<int>(u), static_cast<int>(w))) continue;
        VertexSet blocked = nb;
        blocked.reset(u);
        blocked.reset(w);
        blocked.set(v);
        std::vector<int> prev(n, -1);
        std::deque<int> queue{static_cast<int>(u)};
        prev[u] = static_cast<int>(u);
        bool found = false;
        while (!queue.empty() && !found) {
          int x = queue.front();
          queue.pop_front();
          const VertexSet& xn = g.neighbors(x);
          for (auto y = xn.find_first(); y != VertexSet::npos;
               y = xn.find_next(y)) {
            if (blocked.test(y) || prev[y] != -1) continue;
            prev[y] = x;
            if (y == w) {
              found = true;
              break;
            }
            queue.push_back(static_cast<int>(y));
          }
        }
        if (!found) continue;
        std::vector<int> path;
        for (int x = static_cast<int>(w); x != static_cast<int>(u);
             x = prev[x])
          path.push_back(x);
        path.push_back(static_cast<int>(u));
        std::reverse(path.begin(), path.end());
        std::vector<int> hole{v};
        hole.insert(hole.end(), path.begin(), path.end());
        return hole;  // v, u, ..., w — shortest path makes it chordless
      }
    }
  }
  return {};
}

}  // namespace

ChordalityWitness is_chordal(const UGraph& g) {
  std::vector<int> order = mcs_candidate_order(g);
  UGraph w = g;
  for (int v : order) {
    if (!is_simplicial(w, v)) return {false, {}, find_hole(g)};
    w.kill_vertex(v);
  }
  return {true, EliminationOrder{std::move(order)}, {}};
}

bool is_chordal_quick(const UGraph& g) {
  std::vector<int> order = mcs_candidate_order(g);
  UGraph w = g;
  for (int v : order) {
    if (!is_simplicial(w, v)) return false;
    w.kill_vertex(v);
  }
  return true;
}

std::vector<std::vector<int>> maximal_cliques_chordal(
    const UGraph& g, const EliminationOrder& peo) {
  check_order(g, peo);
  UGraph w = g;
  std::vector<VertexSet> cands;
  cands.reserve(peo.order.size());
  for (int v : peo.order) {
    VertexSet cand = w.neighbors(v);
    cand.set(v);
    cands.push_back(std::move(cand));
    w.kill_vertex(v);
  }
  // A candidate eliminated later never contains an earlier one (the earlier
  // vertex is gone), so only forward containment needs filtering.
  std::vector<std::vector<int>> out;
  for (std::size_t j = 0; j < cands.size(); ++j) {
    bool maximal = true;
    for (std::size_t i = 0; i < j && maximal; ++i)
      if (cands[j].is_subset_of(cands[i])) maximal = false;
    if (!maximal) continue;
    std::vector<int> clique;
    for (auto v = cands[j].find_first(); v != VertexSet::npos;
         v = cands[j].find_next(v))
      clique.push_back(static_cast<int>(v));
    out.push_back(std::move(clique));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> maximal_cliques_chordal(const UGraph& g) {
  ChordalityWitness w = is_chordal(g);
  if (!w.chordal) throw Error("graph is not chordal");
  return maximal_cliques_chordal(g, w.peo);
}

UGraph with_edges(const UGraph& g, const std::vector<Edge>& extra) {
  UGraph out = g;
  for (const Edge& e : extra) out.add_edge(e.first, e.second);
  return out;
}

}  // namespace tri
