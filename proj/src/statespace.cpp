#include "tri/statespace.hpp"

#include "tri/elimination.hpp"

namespace tri {

StateSpace clique_state_space(const VertexSet& clique, const Network& net,
                              bool observed_as_unit) {
  if (static_cast<int>(clique.size()) != net.size())
    throw Error("clique index space does not match the network");
  StateSpace product{1};
  for (auto v = clique.find_first(); v != VertexSet::npos;
       v = clique.find_next(v)) {
    const Vertex& vx = net[static_cast<int>(v)];
    if (vx.deterministic) {
      bool parents_inside = true;
      for (int p : vx.parents)
        if (!clique.test(p)) {
          parents_inside = false;
          break;
        }
      if (parents_inside) continue;
    }
    if (observed_as_unit && vx.observed) continue;
    product *= vx.cardinality;
  }
  return product;
}

StateSpace clique_state_space(const std::vector<int>& clique,
                              const Network& net, bool observed_as_unit) {
  VertexSet bits(net.size());
  for (int v : clique) {
    if (v < 0 || v >= net.size()) throw Error("clique vertex out of range");
    bits.set(v);
  }
  return clique_state_space(bits, net, observed_as_unit);
}

namespace {

StateSpace sum_over_cliques(const std::vector<std::vector<int>>& cliques,
                            const Network& net, bool observed_as_unit) {
  StateSpace total{0};
  VertexSet bits(net.size());
  for (const std::vector<int>& c : cliques) {
    bits.reset();
    for (int v : c) bits.set(v);
    total += clique_state_space(bits, net, observed_as_unit);
  }
  return total;
}

}  // namespace

StateSpace graph_state_space(const Triangulation& t, const Network& net,
                             bool observed_as_unit) {
  return sum_over_cliques(t.maximal_cliques(), net, observed_as_unit);
}

StateSpace chordal_graph_state_space(const UGraph& g, const Network& net,
                                     bool observed_as_unit) {
  return sum_over_cliques(maximal_cliques_chordal(g), net, observed_as_unit);
}

}  // namespace tri
