#pragma once

#include <cstdint>
#include <vector>

#include "tri/elimination.hpp"
#include "tri/network.hpp"
#include "tri/ugraph.hpp"

namespace tri {

enum class AncestralCause { child, undirected };

// For a deterministic vertex det with a non-parent neighbor endpoint, the
// edges that would pull every parent of det into endpoint's cliques.
struct AncestralGroup {
  int det = -1;
  int endpoint = -1;
  std::vector<Edge> edges;  // missing pa(det)-endpoint edges, sorted
  AncestralCause cause = AncestralCause::undirected;
};

struct AncestralPlan {
  std::vector<AncestralGroup> groups;  // selected, in selection order
  std::vector<Edge> chosen_edges;      // sorted union of the groups' edges
};

enum class ClosureMode { all, some };

// One group per (deterministic det, non-parent neighbor endpoint) pair with a
// nonempty missing-edge set, ascending (det, endpoint). The graph must
// contain every moral edge of the network; extra undirected edges are fine.
std::vector<AncestralGroup> ancestral_groups(const UGraph& g,
                                             const Network& net);

// Fixpoint of: find groups on the current graph, select, add their edges.
// ClosureMode::all selects every group. ClosureMode::some skips groups whose
// det-endpoint adjacency predates the closure and is not a directed child
// edge; adjacencies created by previously added edges stay eligible.
AncestralPlan pretriangulation_closure(const UGraph& g, const Network& net,
                                       ClosureMode mode);

// Selects a group only when merging beats keeping the two cliques separate:
// S(endpoint+det+parents) < S(endpoint+det) + S(det+parents).
AncestralPlan lo_extra(const UGraph& g, const Network& net);

// Selects each newly discovered group independently with probability q.
// Deterministic for a fixed seed.
AncestralPlan sampled_extra(const UGraph& g, const Network& net,
                            std::uint64_t rng_seed, double q);

// Adds the plan's edges up front, then eliminates along `order`; the fill is
// the plan plus whatever elimination adds. (Interleaving edge additions with
// elimination steps would produce the same triangulation.)
Triangulation extra_eliminate(const UGraph& g, const Network& net,
                              const AncestralPlan& plan,
                              const EliminationOrder& order);

// Whether an edge between u and v would connect a parent of some
// deterministic vertex to a child or undirected neighbor of it, evaluated
// against the adjacency of g.
bool edge_is_ancestral(const UGraph& g, const Network& net, Edge e);

// The fill edges of t that are ancestral in t's total graph.
std::vector<Edge> ancestral_fill_edges(const Triangulation& t,
                                       const Network& net);

}  // namespace tri
