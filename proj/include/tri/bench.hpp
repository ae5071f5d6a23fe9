#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tri/bigint.hpp"
#include "tri/network.hpp"
#include "tri/search.hpp"

namespace tri {

// Random-network generation parameters. Defaults follow the reference
// benchmark protocol: 30 nodes, in-degree at most 4, half the nodes
// deterministic, a tenth observed (cardinality 50), stochastic cardinalities
// 2..5, deterministic cardinalities 2..min(product of parents, 125).
struct GenParams {
  int nodes = 30;
  int max_in_degree = 4;
  double p_det = 0.5;
  double p_obs = 0.1;
  int stoch_card_min = 2;
  int stoch_card_max = 5;
  std::int64_t obs_card = 50;
  std::int64_t det_card_cap = 125;
  std::uint64_t seed = 0;
};

// DAG over ids 0..nodes-1 taken as the topological order; each node's parent
// set is drawn uniformly over the subsets of earlier nodes with size at most
// max_in_degree. A parentless node drawn deterministic is made stochastic.
// Deterministic given the seed.
Network gen_random_network(const GenParams& p);

struct BenchRow {
  int graph_id = 0;
  int det_count = 0;
  std::vector<StateSpace> scores;  // one per method
  int winner = 0;                  // lowest score, ties to the lowest index
  bool tie = false;                // >= 2 methods achieved the best score
};

// Ratio buckets against the per-graph best score. `best` counts wins;
// tied_best counts equal-score non-winners (informational; those rows also
// land in lt2, so best+lt2+..+ge16 sums to the number of graphs).
struct MethodAggregate {
  int best = 0;
  int tied_best = 0;
  int lt2 = 0;
  int x2_4 = 0;
  int x4_8 = 0;
  int x8_16 = 0;
  int ge16 = 0;
};

struct BenchReport {
  GenParams params;
  int n_graphs = 0;
  std::vector<std::string> method_names;
  std::vector<BenchRow> rows;
  std::vector<MethodAggregate> aggregates;
};

// Generates n_graphs networks (graph i seeded with mix(seed, i)) and runs
// every method's pool on each; scoring is the determinism-aware state space.
BenchReport run_benchmark(const GenParams& p, int n_graphs,
                          const std::vector<HeuristicSpec>& methods,
                          int jobs = 1, bool observed_as_unit = false);

// Tab-separated: a commented parameter header, one row per graph, an
// aggregate block, and with table2 a breakdown by deterministic-node count
// (share of graphs where the method was within 2x of the best).
std::string format_bench_report(const BenchReport& report, bool table2);

}  // namespace tri
