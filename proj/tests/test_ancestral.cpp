#include "doctest.h"

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "testutil.hpp"
#include "tri/ancestral.hpp"
#include "tri/statespace.hpp"

using namespace tri;
using namespace trifix;

namespace {

std::set<Edge> edge_set(const std::vector<Edge>& edges) {
  return {edges.begin(), edges.end()};
}

// Replays a plan against the evolving graph and checks that every group was
// a legitimate selection at the moment it was applied.
void check_plan_derivation(const UGraph& start, const Network& net,
                           const AncestralPlan& plan) {
  UGraph g = start;
  for (const AncestralGroup& grp : plan.groups) {
    REQUIRE(net[grp.det].deterministic);
    CHECK(g.has_edge(grp.det, grp.endpoint));
    CHECK(!net.is_parent(grp.endpoint, grp.det));
    CHECK((grp.cause == AncestralCause::child) ==
          net.is_parent(grp.det, grp.endpoint));
    for (const Edge& e : grp.edges) {
      const int parent = net.is_parent(e.first, grp.det) ? e.first : e.second;
      const int endpoint = e.first == parent ? e.second : e.first;
      CHECK(net.is_parent(parent, grp.det));
      CHECK(endpoint == grp.endpoint);
      if (!g.has_edge(e.first, e.second)) g.add_edge(e.first, e.second);
    }
  }
  std::set<Edge> applied;
  for (const AncestralGroup& grp : plan.groups)
    for (const Edge& e : grp.edges) applied.insert(e);
  CHECK(edge_set(plan.chosen_edges) == applied);
  for (const Edge& e : plan.chosen_edges)
    CHECK(!start.has_edge(e.first, e.second));
}

}  // namespace

TEST_CASE("ancestral groups on the fixtures") {
  const Network a = fixA();
  const auto ga = ancestral_groups(moralize(a).graph, a);
  REQUIRE(ga.size() == 2);
  CHECK(ga[0].det == D);
  CHECK(ga[0].endpoint == C);
  CHECK(ga[0].edges == std::vector<Edge>{make_edge(B, C)});
  CHECK(ga[0].cause == AncestralCause::child);
  CHECK(ga[1].endpoint == E);
  CHECK(ga[1].edges == std::vector<Edge>{make_edge(A, E)});

  const Network b = fixB();
  const auto gb = ancestral_groups(moralize(b).graph, b);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0].edges == std::vector<Edge>{make_edge(A, C), make_edge(B, C)});
  CHECK(gb[1].edges == std::vector<Edge>{make_edge(A, E), make_edge(B, E)});
  CHECK(gb[0].cause == AncestralCause::child);

  const Network none = parse_network("net t\nvar a 2 -\nvar b 2 - | a\n");
  CHECK(ancestral_groups(moralize(none).graph, none).empty());
}

TEST_CASE("closure with every group selected") {
  const Network a = fixA();
  const UGraph moral = moralize(a).graph;
  const AncestralPlan plan = pretriangulation_closure(moral, a, ClosureMode::all);
  CHECK(edge_set(plan.chosen_edges) ==
        std::set<Edge>{make_edge(B, C), make_edge(A, E)});
  CHECK(chordal_graph_state_space(with_edges(moral, plan.chosen_edges), a) ==
        54);
  check_plan_derivation(moral, a, plan);

  const Network b = fixB();
  const UGraph moral_b = moralize(b).graph;
  const AncestralPlan plan_b =
      pretriangulation_closure(moral_b, b, ClosureMode::all);
  CHECK(plan_b.chosen_edges.size() == 4);
  CHECK(chordal_graph_state_space(with_edges(moral_b, plan_b.chosen_edges),
                                  b) == 2000);
  check_plan_derivation(moral_b, b, plan_b);

  // Both fixA endpoints are children of d, so `some` selects the same plan.
  const AncestralPlan some = pretriangulation_closure(moral, a, ClosureMode::some);
  CHECK(some.chosen_edges == plan.chosen_edges);
}

TEST_CASE("closure skips moral-only adjacencies in some mode") {
  // d is deterministic with parents a,b; w is a child of both d and x, so
  // d-x is a moral marriage edge: an undirected-cause group.
  const Network net = parse_network(
      "net t\nvar a 2 -\nvar b 2 -\nvar d 4 det | a b\nvar x 2 -\n"
      "var w 2 - | d x\n");
  const UGraph moral = moralize(net).graph;
  const auto groups = ancestral_groups(moral, net);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].endpoint == 3);  // x, undirected
  CHECK(groups[0].cause == AncestralCause::undirected);
  CHECK(groups[1].endpoint == 4);  // w, child
  CHECK(groups[1].cause == AncestralCause::child);

  const AncestralPlan all = pretriangulation_closure(moral, net, ClosureMode::all);
  const AncestralPlan some =
      pretriangulation_closure(moral, net, ClosureMode::some);
  CHECK(edge_set(all.chosen_edges) ==
        std::set<Edge>{make_edge(0, 3), make_edge(1, 3), make_edge(0, 4),
                       make_edge(1, 4)});
  CHECK(edge_set(some.chosen_edges) ==
        std::set<Edge>{make_edge(0, 4), make_edge(1, 4)});
  check_plan_derivation(moral, net, all);
  check_plan_derivation(moral, net, some);
}

TEST_CASE("closure recurses through added edges") {
  // p is deterministic (parents r, s) and itself a parent of deterministic d;
  // wiring p to d's child c creates the new pair (p, c) mid-closure.
  const Network net = parse_network(
      "net t\nvar r 2 -\nvar s 2 -\nvar p 3 det | r s\nvar q 2 -\n"
      "var d 4 det | p q\nvar c 2 - | d\n");
  const int r = 0, s = 1, p = 2, q = 3, d = 4, c = 5;
  const UGraph moral = moralize(net).graph;

  const AncestralPlan all = pretriangulation_closure(moral, net, ClosureMode::all);
  CHECK(edge_set(all.chosen_edges) ==
        std::set<Edge>{make_edge(r, q), make_edge(s, q),   // (p, q) undirected
                       make_edge(r, d), make_edge(s, d),   // (p, d) child
                       make_edge(p, c), make_edge(q, c),   // (d, c) child
                       make_edge(r, c), make_edge(s, c)})  // (p, c) recursive
  ;
  check_plan_derivation(moral, net, all);

  // some-mode skips the (p, q) marriage group, but the added r-d and s-d
  // adjacencies open (d, r) and (d, s), which wire q back to r and s: the
  // same closure by a different route.
  const AncestralPlan some =
      pretriangulation_closure(moral, net, ClosureMode::some);
  CHECK(edge_set(some.chosen_edges) == edge_set(all.chosen_edges));
  bool some_selected_pq = false, all_selected_pq = false;
  for (const AncestralGroup& grp : some.groups)
    some_selected_pq = some_selected_pq || (grp.det == p && grp.endpoint == q);
  for (const AncestralGroup& grp : all.groups)
    all_selected_pq = all_selected_pq || (grp.det == p && grp.endpoint == q);
  CHECK(!some_selected_pq);
  CHECK(all_selected_pq);
  check_plan_derivation(moral, net, some);
}

TEST_CASE("locally optimal selection") {
  const Network a = fixA();
  const AncestralPlan plan_a = lo_extra(moralize(a).graph, a);
  CHECK(edge_set(plan_a.chosen_edges) ==
        std::set<Edge>{make_edge(B, C), make_edge(A, E)});

  // fixB: merging scores 1000 against 400 + 100, so nothing is selected.
  const Network b = fixB();
  const AncestralPlan plan_b = lo_extra(moralize(b).graph, b);
  CHECK(plan_b.chosen_edges.empty());
  CHECK(chordal_graph_state_space(moralize(b).graph, b) == 900);

  const Network none = parse_network("net t\nvar a 2 -\nvar b 3 - | a\n");
  CHECK(lo_extra(moralize(none).graph, none).chosen_edges.empty());
}

TEST_CASE("sampled selection degenerates and reproduces") {
  const Network b = fixB();
  const UGraph moral = moralize(b).graph;
  const AncestralPlan all = pretriangulation_closure(moral, b, ClosureMode::all);
  for (std::uint64_t seed : {1ull, 7ull, 99ull}) {
    CHECK(sampled_extra(moral, b, seed, 1.0).chosen_edges == all.chosen_edges);
    CHECK(sampled_extra(moral, b, seed, 0.0).chosen_edges.empty());
    const AncestralPlan p1 = sampled_extra(moral, b, seed, 0.5);
    const AncestralPlan p2 = sampled_extra(moral, b, seed, 0.5);
    CHECK(p1.chosen_edges == p2.chosen_edges);  // deterministic per seed
    check_plan_derivation(moral, b, p1);
    // Any outcome is a union of whole groups.
    for (const AncestralGroup& grp : p1.groups)
      for (const Edge& e : grp.edges)
        CHECK(edge_set(p1.chosen_edges).count(e));
  }
}

TEST_CASE("some-mode plans are contained in all-mode plans") {
  SplitMix64 rng(31);
  for (int it = 0; it < 50; ++it) {
    const Network net =
        random_mixed_net(2 + static_cast<int>(rng.bounded(7)), 0.6, rng.next());
    const UGraph moral = moralize(net).graph;
    const AncestralPlan all =
        pretriangulation_closure(moral, net, ClosureMode::all);
    const AncestralPlan some =
        pretriangulation_closure(moral, net, ClosureMode::some);
    const auto all_set = edge_set(all.chosen_edges);
    for (const Edge& e : some.chosen_edges) CHECK(all_set.count(e));
    check_plan_derivation(moral, net, all);
    check_plan_derivation(moral, net, some);
    CHECK(all.chosen_edges.size() <=
          static_cast<std::size_t>(net.size() * net.size()));
  }
}

TEST_CASE("extra elimination with an empty plan is plain elimination") {
  SplitMix64 rng(67);
  const Network net = random_mixed_net(6, 0.5, 123);
  const UGraph moral = moralize(net).graph;
  const EliminationOrder order = random_order(moral, rng);
  CHECK(extra_eliminate(moral, net, {}, order).fill() ==
        elimination_graph(moral, order).fill());
}

TEST_CASE("extra elimination on fixA reaches the optimal triangulation") {
  const Network a = fixA();
  const UGraph moral = moralize(a).graph;
  const AncestralPlan plan = pretriangulation_closure(moral, a, ClosureMode::all);
  for (const EliminationOrder& order :
       {EliminationOrder{{C, A, B, D, E}}, EliminationOrder{{E, D, C, B, A}},
        EliminationOrder{{C, E, D, A, B}}}) {
    const Triangulation t = extra_eliminate(moral, a, plan, order);
    CHECK(edge_set(t.fill()) ==
          std::set<Edge>{make_edge(B, C), make_edge(A, E)});
    CHECK(graph_state_space(t, a) == 54);
  }
}

TEST_CASE("extra elimination on fixB with the full plan scores 2000") {
  const Network b = fixB();
  const UGraph moral = moralize(b).graph;
  const AncestralPlan plan = pretriangulation_closure(moral, b, ClosureMode::all);
  const UGraph augmented = with_edges(moral, plan.chosen_edges);
  const ChordalityWitness w = is_chordal(augmented);
  REQUIRE(w.chordal);
  const Triangulation t = extra_eliminate(moral, b, plan, w.peo);
  CHECK(edge_set(t.fill()) == edge_set(plan.chosen_edges));
  CHECK(graph_state_space(t, b) == 2000);

  EliminationOrder bogus{{0, 1}};
  CHECK_THROWS_AS(extra_eliminate(moral, b, plan, bogus), Error);
}

TEST_CASE("score-reducing additions are group members or determined merges") {
  SplitMix64 rng(73);
  int exercised = 0, in_groups = 0;
  for (int it = 0; it < 30; ++it) {
    const Network net =
        random_mixed_net(2 + static_cast<int>(rng.bounded(5)), 0.6, rng.next());
    const TriangulationEnumeration en = enumerate_triangulations(net);
    const std::uint32_t count = std::uint32_t(1) << en.pairs.size();
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      if (!en.chordal[mask]) continue;
      const UGraph current = en.graph_of(mask);
      const auto groups = ancestral_groups(current, net);
      for (std::size_t i = 0; i < en.pairs.size(); ++i) {
        if (mask & (std::uint32_t{1} << i)) continue;
        const std::uint32_t bigger = mask | (std::uint32_t{1} << i);
        if (!en.chordal[bigger] || en.score[bigger] >= en.score[mask])
          continue;
        ++exercised;
        bool found = false;
        for (const AncestralGroup& grp : groups)
          found = found || std::find(grp.edges.begin(), grp.edges.end(),
                                     en.pairs[i]) != grp.edges.end();
        if (found) ++in_groups;
        CHECK((found ||
               determined_endpoint_merge(en.graph_of(bigger), net,
                                         en.pairs[i])));
      }
    }
  }
  CHECK(exercised > 5);
  CHECK(in_groups > 0);
}
