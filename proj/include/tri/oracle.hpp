#pragma once

#include <utility>
#include <vector>

#include "tri/bigint.hpp"
#include "tri/network.hpp"
#include "tri/ugraph.hpp"

namespace tri {

// Desk-scale guards: orders grow as |V|! and fill subsets as 2^pairs.
struct OracleLimits {
  int max_order_vertices = 9;
  int max_fill_pairs = 22;
};

struct OracleReport {
  StateSpace best_elim_score;
  EliminationOrder best_elim_order;
  StateSpace best_tri_score;
  std::vector<Edge> best_tri_fill;
  bool gap = false;  // best_tri_score < best_elim_score
};

// Exact minimum of the graph state space over every elimination order of the
// moral graph; ties resolved toward the lexicographically smallest order.
std::pair<StateSpace, EliminationOrder> best_over_orders(
    const Network& net, const OracleLimits& limits = {});

// Exact minimum over every chordal supergraph of the moral graph, by
// enumerating fill subsets in increasing canonical-mask order and keeping the
// first best, so tied witnesses prefer subsets.
std::pair<StateSpace, std::vector<Edge>> best_over_triangulations(
    const Network& net, const OracleLimits& limits = {});

OracleReport oracle_report(const Network& net, const OracleLimits& limits = {});

// Does some triangulation of the moral graph score strictly below alpha?
bool maxstatspace_decide(const Network& net, const StateSpace& alpha,
                         const OracleLimits& limits = {});

// The polynomial certificate check: fill must be disjoint from the moral
// edges; accepts iff moral+fill is chordal and scores strictly below alpha.
bool verify_certificate(const Network& net, const std::vector<Edge>& fill,
                        const StateSpace& alpha);

}  // namespace tri
