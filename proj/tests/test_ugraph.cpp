#include "doctest.h"

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "testutil.hpp"
#include "tri/network.hpp"
#include "tri/ugraph.hpp"

using namespace tri;
using namespace trifix;

namespace {

UGraph fixa_moral() { return moralize(fixA()).graph; }

UGraph figd_total() {
  UGraph g = fixa_moral();
  g.add_edge(B, C);
  g.add_edge(A, E);
  return g;
}

bool hole_is_valid(const UGraph& g, const std::vector<int>& hole) {
  const int k = static_cast<int>(hole.size());
  if (k < 4) return false;
  std::set<int> distinct(hole.begin(), hole.end());
  if (static_cast<int>(distinct.size()) != k) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.has_edge(hole[i], hole[j]) != consecutive) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("graph basics and alive views") {
  UGraph g(4);
  CHECK(g.capacity() == 4);
  CHECK(g.alive_count() == 4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.has_edge(1, 0));
  CHECK(g.edge_count() == 2);
  g.kill_vertex(1);
  CHECK(g.alive_count() == 3);
  CHECK(g.edge_count() == 0);
  CHECK(!g.has_edge(0, 1));
  CHECK_THROWS_AS(g.add_edge(0, 1), Error);
  CHECK_THROWS_AS(g.add_edge(2, 2), Error);
}

TEST_CASE("deficiency on the fixA moral graph") {
  const UGraph g = fixa_moral();
  CHECK(deficiency(g, D) == std::vector<Edge>{{A, E}, {B, C}, {C, E}});
  CHECK(deficiency_count(g, D) == 3);
  CHECK(deficiency(g, C).empty());  // simplicial
  UGraph lone(1);
  CHECK(deficiency(lone, 0).empty());  // isolated
  CHECK_THROWS_AS(deficiency(eliminate_vertex(g, D), D), Error);
}

TEST_CASE("eliminating d completes the remaining four vertices") {
  const UGraph g = fixa_moral();
  const UGraph gd = eliminate_vertex(g, D);
  CHECK(gd.alive_count() == 4);
  for (int u : {A, B, C, E})
    for (int v : {A, B, C, E})
      if (u < v) CHECK(gd.has_edge(u, v));

  const UGraph gc = eliminate_vertex(g, C);  // simplicial: induced subgraph
  CHECK(gc.edge_count() == g.edge_count() - g.degree(C));

  UGraph lone(1);
  CHECK(eliminate_vertex(lone, 0).alive_count() == 0);
}

TEST_CASE("elimination recount identity on random graphs") {
  SplitMix64 rng(11);
  for (int it = 0; it < 60; ++it) {
    const int n = 2 + static_cast<int>(rng.bounded(7));
    const UGraph g = random_ugraph(n, rng.uniform01(), rng);
    const int v = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
    const UGraph gv = eliminate_vertex(g, v);
    std::set<Edge> expected;
    for (const Edge& e : g.edges())
      if (e.first != v && e.second != v) expected.insert(e);
    for (const Edge& e : deficiency(g, v)) expected.insert(e);
    const std::vector<Edge> actual = gv.edges();
    CHECK(std::set<Edge>(actual.begin(), actual.end()) == expected);
  }
}

TEST_CASE("simplicial tests on the figure-d triangulation") {
  const UGraph t = figd_total();
  CHECK(is_simplicial(t, C));   // neighbors a, b, d pairwise adjacent
  CHECK(!is_simplicial(t, A));  // c and e are both neighbors, not adjacent
  UGraph small(3);
  small.add_edge(0, 1);
  CHECK(is_simplicial(small, 0));  // degree 1
  CHECK(is_simplicial(small, 2));  // degree 0
}

TEST_CASE("chordality verdicts with witnesses") {
  UGraph cycle(4);
  cycle.add_edge(0, 1);
  cycle.add_edge(1, 2);
  cycle.add_edge(2, 3);
  cycle.add_edge(3, 0);
  const ChordalityWitness w = is_chordal(cycle);
  CHECK(!w.chordal);
  CHECK(hole_is_valid(cycle, w.hole));

  UGraph complete(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) complete.add_edge(u, v);
  CHECK(is_chordal(complete).chordal);

  CHECK(is_chordal(fixa_moral()).chordal);
}

TEST_CASE("perfect order witness eliminates with zero deficiency") {
  SplitMix64 rng(23);
  for (int it = 0; it < 80; ++it) {
    const int n = 1 + static_cast<int>(rng.bounded(8));
    const UGraph g = random_ugraph(n, rng.uniform01(), rng);
    const ChordalityWitness w = is_chordal(g);
    if (!w.chordal) {
      CHECK(hole_is_valid(g, w.hole));
      continue;
    }
    UGraph work = g;
    for (int v : w.peo.order) {
      CHECK(deficiency_count(work, v) == 0);
      work.kill_vertex(v);
    }
  }
}

TEST_CASE("chordality agrees with the subset-enumeration reference") {
  SplitMix64 rng(37);
  int nonchordal_seen = 0;
  for (int it = 0; it < 300; ++it) {
    const int n = 2 + static_cast<int>(rng.bounded(7));  // up to 8
    const UGraph g = random_ugraph(n, 0.2 + 0.6 * rng.uniform01(), rng);
    const bool expected = naive_is_chordal(g);
    CHECK(is_chordal_quick(g) == expected);
    CHECK(is_chordal(g).chordal == expected);
    if (!expected) ++nonchordal_seen;
  }
  CHECK(nonchordal_seen > 20);  // sample exercises both verdicts
}

TEST_CASE("maximal cliques of the fixture graphs") {
  using Cliques = std::vector<std::vector<int>>;
  CHECK(maximal_cliques_chordal(fixa_moral()) ==
        Cliques{{A, B, D}, {A, D, C}, {B, D, E}});
  CHECK(maximal_cliques_chordal(figd_total()) ==
        Cliques{{A, B, D, C}, {A, B, D, E}});

  UGraph complete(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) complete.add_edge(u, v);
  CHECK(maximal_cliques_chordal(complete) == Cliques{{0, 1, 2, 3}});

  UGraph cycle(4);
  cycle.add_edge(0, 1);
  cycle.add_edge(1, 2);
  cycle.add_edge(2, 3);
  cycle.add_edge(3, 0);
  CHECK_THROWS_AS(maximal_cliques_chordal(cycle), Error);
}

TEST_CASE("maximal cliques match brute force and stay within |V|") {
  SplitMix64 rng(53);
  int checked = 0;
  for (int it = 0; it < 200; ++it) {
    const int n = 1 + static_cast<int>(rng.bounded(8));
    const UGraph g = random_ugraph(n, rng.uniform01(), rng);
    if (!is_chordal_quick(g)) continue;
    ++checked;
    const auto cliques = maximal_cliques_chordal(g);
    CHECK(cliques == naive_maximal_cliques(g));
    CHECK(cliques.size() <= static_cast<std::size_t>(g.alive_count()));
  }
  CHECK(checked > 50);
}
