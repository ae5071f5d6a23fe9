#pragma once

#include <vector>

#include "tri/bigint.hpp"
#include "tri/network.hpp"
#include "tri/ugraph.hpp"

namespace tri {

class Triangulation;

// Product of member cardinalities, excluding every deterministic member whose
// entire parent set lies inside the clique (its value is a function of the
// others). Exclusion is evaluated independently per deterministic member.
// With observed_as_unit, observed members contribute a factor of 1.
StateSpace clique_state_space(const VertexSet& clique, const Network& net,
                              bool observed_as_unit = false);
StateSpace clique_state_space(const std::vector<int>& clique,
                              const Network& net,
                              bool observed_as_unit = false);

// Sum of clique_state_space over the maximal cliques of the total graph.
StateSpace graph_state_space(const Triangulation& t, const Network& net,
                             bool observed_as_unit = false);

// Same, for a bare chordal graph. Throws if the graph is not chordal.
StateSpace chordal_graph_state_space(const UGraph& g, const Network& net,
                                     bool observed_as_unit = false);

}  // namespace tri
