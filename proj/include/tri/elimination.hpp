#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tri/bigint.hpp"
#include "tri/network.hpp"
#include "tri/ugraph.hpp"

namespace tri {

// A chordal supergraph of a base graph: base edges plus a disjoint fill set.
// Construction verifies disjointness and chordality of the total graph and
// caches the chordality witness and the maximal-clique list.
class Triangulation {
 public:
  Triangulation(UGraph base, std::vector<Edge> fill);

  const UGraph& base() const { return base_; }
  const std::vector<Edge>& fill() const { return fill_; }  // sorted
  const UGraph& total() const { return total_; }
  const EliminationOrder& perfect_order() const { return peo_; }
  const std::vector<std::vector<int>>& maximal_cliques() const {
    return cliques_;
  }

 private:
  UGraph base_;
  std::vector<Edge> fill_;
  UGraph total_;
  EliminationOrder peo_;
  std::vector<std::vector<int>> cliques_;
};

// Runs vertex elimination along `a` and returns the base graph together with
// every edge added on the way. The result is always chordal and `a` is a
// perfect order of it.
Triangulation elimination_graph(const UGraph& g, const EliminationOrder& a);

// True iff a path u, x1, .., xk, v exists in g with every interior vertex
// ordered before both u and v. Equivalent to {u, v} becoming a fill edge of
// elimination_graph(g, a). Requires u != v and {u, v} not an edge of g.
bool fill_path_predicate(const UGraph& g, const EliminationOrder& a, int u,
                         int v);

// Fill edges whose individual removal keeps the total graph chordal.
std::vector<Edge> non_minimal_edges(const Triangulation& t);

// Removes removable fill edges one at a time (ascending edge order, scan
// restarted after each removal) until none remains. Every intermediate graph
// is chordal; the result is minimal but otherwise arbitrary.
Triangulation minimalize(const Triangulation& t);

struct EliminationCheck {
  bool reachable = false;
  std::optional<EliminationOrder> witness;  // set iff reachable
};

// Decides whether some elimination order of t.base() produces exactly
// t.total(). Peels vertices that are simplicial in the total graph and have
// gained no neighbors; the peeled sequence is the witness order.
EliminationCheck is_elimination_graph(const Triangulation& t);

// Exact state-space change from removing the non-minimal fill edge e = (u,v),
// by case analysis on whether the two split cliques stay maximal. The unique
// maximal clique containing u and v must be all-stochastic.
BigInt delta_state_space_on_removal(const Triangulation& t, Edge e,
                                    const Network& net);

// Line-based file format: header `tri <network-name>`, then one
// `fill <u-name> <v-name>` line per fill edge (alphabetical, sorted on
// write; order-insensitive on read). The base graph is the moral graph.
std::string serialize_triangulation(const Triangulation& t,
                                    const Network& net);
Triangulation parse_triangulation(const std::string& text, const Network& net);

}  // namespace tri
