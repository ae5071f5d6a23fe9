#include "tri/ancestral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "tri/rng.hpp"
#include "tri/statespace.hpp"

namespace tri {

std::vector<AncestralGroup> ancestral_groups(const UGraph& g,
                                             const Network& net) {
  std::vector<AncestralGroup> out;
  for (const Vertex& d : net.vertices) {
    if (!d.deterministic || d.parents.empty() || !g.is_alive(d.id)) continue;
    const VertexSet& nb = g.neighbors(d.id);
    for (auto c = nb.find_first(); c != VertexSet::npos; c = nb.find_next(c)) {
      const int endpoint = static_cast<int>(c);
      if (net.is_parent(endpoint, d.id)) continue;
      AncestralGroup grp;
      grp.det = d.id;
      grp.endpoint = endpoint;
      grp.cause = net.is_parent(d.id, endpoint) ? AncestralCause::child
                                                : AncestralCause::undirected;
      for (int p : d.parents)
        if (p != endpoint && !g.has_edge(p, endpoint))
          grp.edges.push_back(make_edge(p, endpoint));
      if (grp.edges.empty()) continue;
      std::sort(grp.edges.begin(), grp.edges.end());
      out.push_back(std::move(grp));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.det, a.endpoint) < std::tie(b.det, b.endpoint);
  });
  return out;
}

namespace {

// Shared fixpoint driver. decide(group, adjacency_was_added) is consulted
// once per (det, endpoint) identity, the first time the group shows up.
AncestralPlan run_closure(
    const UGraph& g, const Network& net,
    const std::function<bool(const AncestralGroup&, bool)>& decide) {
  AncestralPlan plan;
  UGraph current = g;
  std::set<Edge> added;
  std::map<std::pair<int, int>, bool> decided;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const AncestralGroup& grp : ancestral_groups(current, net)) {
      const std::pair<int, int> key{grp.det, grp.endpoint};
      auto it = decided.find(key);
      if (it == decided.end()) {
        const bool from_added =
            added.count(make_edge(grp.det, grp.endpoint)) > 0;
        it = decided.emplace(key, decide(grp, from_added)).first;
      }
      if (!it->second) continue;
      bool grew = false;
      for (const Edge& e : grp.edges) {
        if (current.has_edge(e.first, e.second)) continue;  // added earlier
        current.add_edge(e.first, e.second);
        added.insert(e);
        plan.chosen_edges.push_back(e);
        grew = true;
      }
      if (grew) {
        plan.groups.push_back(grp);
        changed = true;
      }
    }
  }
  std::sort(plan.chosen_edges.begin(), plan.chosen_edges.end());
  return plan;
}

}  // namespace

AncestralPlan pretriangulation_closure(const UGraph& g, const Network& net,
                                       ClosureMode mode) {
  return run_closure(g, net,
                     [mode](const AncestralGroup& grp, bool from_added) {
                       if (mode == ClosureMode::all) return true;
                       return grp.cause == AncestralCause::child || from_added;
                     });
}

AncestralPlan lo_extra(const UGraph& g, const Network& net) {
  return run_closure(g, net, [&net](const AncestralGroup& grp, bool) {
    std::vector<int> det_family{grp.det};
    const Vertex& d = net[grp.det];
    det_family.insert(det_family.end(), d.parents.begin(), d.parents.end());
    std::vector<int> merged = det_family;
    merged.push_back(grp.endpoint);
    const StateSpace joint = clique_state_space(merged, net);
    const StateSpace split =
        clique_state_space(std::vector<int>{grp.endpoint, grp.det}, net) +
        clique_state_space(det_family, net);
    return joint < split;
  });
}

AncestralPlan sampled_extra(const UGraph& g, const Network& net,
                            std::uint64_t rng_seed, double q) {
  if (q < 0.0 || q > 1.0) throw Error("sampling probability must be in [0,1]");
  SplitMix64 rng(rng_seed);
  return run_closure(g, net, [&rng, q](const AncestralGroup&, bool) {
    return rng.uniform01() < q;
  });
}

Triangulation extra_eliminate(const UGraph& g, const Network& net,
                              const AncestralPlan& plan,
                              const EliminationOrder& order) {
  (void)net;
  for (const Edge& e : plan.chosen_edges)
    if (!g.is_alive(e.first) || !g.is_alive(e.second))
      throw Error("plan edge endpoint is not a vertex of the graph");
  UGraph augmented = with_edges(g, plan.chosen_edges);
  Triangulation inner = elimination_graph(augmented, order);
  std::vector<Edge> fill = plan.chosen_edges;
  fill.insert(fill.end(), inner.fill().begin(), inner.fill().end());
  return Triangulation(g, std::move(fill));
}

bool edge_is_ancestral(const UGraph& g, const Network& net, Edge e) {
  auto qualifies = [&](int p, int c) {
    for (const Vertex& d : net.vertices) {
      if (!d.deterministic || d.id == c) continue;
      if (!net.is_parent(p, d.id)) continue;
      if (net.is_parent(c, d.id)) continue;  // endpoint must be a non-parent
      if (net.is_parent(d.id, c) || g.has_edge(d.id, c)) return true;
    }
    return false;
  };
  return qualifies(e.first, e.second) || qualifies(e.second, e.first);
}

std::vector<Edge> ancestral_fill_edges(const Triangulation& t,
                                       const Network& net) {
  std::vector<Edge> out;
  for (const Edge& e : t.fill())
    if (edge_is_ancestral(t.total(), net, e)) out.push_back(e);
  return out;
}

}  // namespace tri
