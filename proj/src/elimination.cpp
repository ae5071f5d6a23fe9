#include "tri/elimination.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tri/statespace.hpp"

namespace tri {

Triangulation::Triangulation(UGraph base, std::vector<Edge> fill)
    : base_(std::move(base)) {
  std::sort(fill.begin(), fill.end());
  for (std::size_t i = 0; i < fill.size(); ++i) {
    const auto& [u, v] = fill[i];
    if (u >= v || !base_.is_alive(u) || !base_.is_alive(v))
      throw Error("fill edge endpoints must be distinct alive vertices");
    if (base_.has_edge(u, v))
      throw Error("fill edge already present in the base graph");
    if (i > 0 && fill[i] == fill[i - 1]) throw Error("duplicate fill edge");
  }
  fill_ = std::move(fill);
  total_ = with_edges(base_, fill_);
  ChordalityWitness w = is_chordal(total_);
  if (!w.chordal) throw Error("total graph is not chordal");
  peo_ = std::move(w.peo);
  cliques_ = maximal_cliques_chordal(total_, peo_);
}

Triangulation elimination_graph(const UGraph& g, const EliminationOrder& a) {
  check_order(g, a);
  UGraph working = g;
  std::vector<Edge> fill;
  for (int v : a.order) {
    for (const Edge& e : deficiency(working, v)) {
      fill.push_back(e);
      working.add_edge(e.first, e.second);
    }
    working.kill_vertex(v);
  }
  return Triangulation(g, std::move(fill));
}

bool fill_path_predicate(const UGraph& g, const EliminationOrder& a, int u,
                         int v) {
  check_order(g, a);
  if (u == v || !g.is_alive(u) || !g.is_alive(v))
    throw Error("fill path predicate needs two distinct alive vertices");
  if (g.has_edge(u, v)) throw Error("pair is already adjacent");
  std::vector<int> pos(g.capacity(), -1);
  for (std::size_t i = 0; i < a.order.size(); ++i)
    pos[a.order[i]] = static_cast<int>(i);
  const int bound = std::min(pos[u], pos[v]);
  // BFS from u; only vertices ordered before both endpoints may be interior.
  VertexSet visited(g.capacity());
  visited.set(u);
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    const VertexSet& nb = g.neighbors(x);
    for (auto y = nb.find_first(); y != VertexSet::npos; y = nb.find_next(y)) {
      if (visited.test(y)) continue;
      if (static_cast<int>(y) == v) return true;
      visited.set(y);
      if (pos[y] < bound) queue.push_back(static_cast<int>(y));
    }
  }
  return false;
}

std::vector<Edge> non_minimal_edges(const Triangulation& t) {
  std::vector<Edge> out;
  for (const Edge& e : t.fill()) {
    UGraph w = t.total();
    w.remove_edge(e.first, e.second);
    if (is_chordal_quick(w)) out.push_back(e);
  }
  return out;
}

Triangulation minimalize(const Triangulation& t) {
  UGraph total = t.total();
  std::vector<Edge> fill = t.fill();  // already sorted
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < fill.size(); ++i) {
      total.remove_edge(fill[i].first, fill[i].second);
      if (is_chordal_quick(total)) {
        fill.erase(fill.begin() + static_cast<std::ptrdiff_t>(i));
        removed = true;
        break;  // restart the scan
      }
      total.add_edge(fill[i].first, fill[i].second);
    }
  }
  return Triangulation(t.base(), std::move(fill));
}

EliminationCheck is_elimination_graph(const Triangulation& t) {
  UGraph base = t.base();
  UGraph total = t.total();
  EliminationOrder witness;
  witness.order.reserve(base.alive_count());
  while (base.alive_count() > 0) {
    int pick = -1;
    for (int v = 0; v < base.capacity() && pick == -1; ++v) {
      if (!base.is_alive(v)) continue;
      if (base.neighbors(v) == total.neighbors(v) && is_simplicial(total, v))
        pick = v;
    }
    if (pick == -1) return {false, std::nullopt};
    witness.order.push_back(pick);
    eliminate_in_place(base, pick);  // may add fill to the shrinking base
    total.kill_vertex(pick);         // simplicial: nothing to add
  }
  return {true, std::move(witness)};
}

BigInt delta_state_space_on_removal(const Triangulation& t, Edge e,
                                    const Network& net) {
  e = make_edge(e.first, e.second);
  if (!std::binary_search(t.fill().begin(), t.fill().end(), e))
    throw Error("edge is not a fill edge of the triangulation");
  {
    UGraph w = t.total();
    w.remove_edge(e.first, e.second);
    if (!is_chordal_quick(w)) throw Error("fill edge is minimal");
  }
  const auto [u, v] = e;
  const std::vector<int>* clique = nullptr;
  for (const std::vector<int>& c : t.maximal_cliques()) {
    if (std::binary_search(c.begin(), c.end(), u) &&
        std::binary_search(c.begin(), c.end(), v)) {
      if (clique) throw Error("edge lies in more than one maximal clique");
      clique = &c;
    }
  }
  if (!clique) throw Error("no maximal clique contains the edge");

  BigInt rest{1};
  VertexSet in_clique(t.total().capacity());
  for (int w : *clique) {
    if (net[w].deterministic)
      throw Error("clique containing the edge has a deterministic vertex");
    in_clique.set(w);
    if (w != u && w != v) rest *= net[w].cardinality;
  }

  // Is C minus one endpoint contained in some larger clique once the edge is
  // gone? Only the u and v adjacency rows differ from the total graph.
  auto absorbed = [&](int dropped) {
    VertexSet part = in_clique;
    part.reset(dropped);
    for (int x = 0; x < t.total().capacity(); ++x) {
      if (!t.total().is_alive(x) || part.test(x)) continue;
      VertexSet nb = t.total().neighbors(x);
      if (x == u) nb.reset(v);
      if (x == v) nb.reset(u);
      if (part.is_subset_of(nb)) return true;
    }
    return false;
  };
  // The u side is the split clique that keeps u, i.e. C minus v.
  const bool u_side_absorbed = absorbed(v);
  const bool v_side_absorbed = absorbed(u);
  const BigInt cu{net[u].cardinality};
  const BigInt cv{net[v].cardinality};

  if (!u_side_absorbed && !v_side_absorbed) return rest * (cu + cv - cu * cv);
  if (u_side_absorbed && !v_side_absorbed) return (1 - cu) * rest * cv;
  if (!u_side_absorbed && v_side_absorbed) return (1 - cv) * rest * cu;
  return -rest * cu * cv;
}

std::string serialize_triangulation(const Triangulation& t,
                                    const Network& net) {
  std::vector<std::pair<std::string, std::string>> lines;
  lines.reserve(t.fill().size());
  for (const Edge& e : t.fill()) {
    std::string a = net[e.first].name, b = net[e.second].name;
    if (b < a) std::swap(a, b);
    lines.emplace_back(std::move(a), std::move(b));
  }
  std::sort(lines.begin(), lines.end());
  std::ostringstream out;
  out << "tri " << net.name << "\n";
  for (const auto& [a, b] : lines) out << "fill " << a << ' ' << b << "\n";
  return out.str();
}

Triangulation parse_triangulation(const std::string& text,
                                  const Network& net) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_header = false;
  std::vector<Edge> fill;

  auto fail = [&lineno](const std::string& msg) -> void {
    throw Error("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(std::move(t));
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok[0] != "tri" || tok.size() != 2)
        fail("expected 'tri <network-name>' header");
      if (tok[1] != net.name)
        fail("triangulation names network '" + tok[1] + "', expected '" +
             net.name + "'");
      have_header = true;
      continue;
    }
    if (tok[0] != "fill" || tok.size() != 3)
      fail("expected 'fill <u-name> <v-name>'");
    auto u = net.find_vertex(tok[1]);
    auto v = net.find_vertex(tok[2]);
    if (!u) fail("unknown vertex '" + tok[1] + "'");
    if (!v) fail("unknown vertex '" + tok[2] + "'");
    if (*u == *v) fail("fill edge endpoints must differ");
    fill.push_back(make_edge(*u, *v));
  }
  if (!have_header) throw Error("missing 'tri <network-name>' header");
  return Triangulation(moralize(net).graph, std::move(fill));
}

}  // namespace tri
