#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tri/ancestral.hpp"
#include "tri/bigint.hpp"
#include "tri/elimination.hpp"
#include "tri/network.hpp"
#include "tri/rng.hpp"

namespace tri {

enum class HeuristicKind { lookahead, mcs };
enum class Criterion { weight, fill, size };
enum class ExtraMode { none, all, some, lo, sampled };

// Spec string grammar:
//   [mcs|la:<crit>[+<crit>...]][,topx=<n>][,extra=<none|all|some|lo|sampled>]
//   [,q=<float>][,pool=<n>][,seed=<n>]
// with <crit> in {weight, fill, size}; defaults la:weight, topx=1,
// extra=none, q=0.5, pool=1, seed=0.
struct HeuristicSpec {
  HeuristicKind kind = HeuristicKind::lookahead;
  std::vector<Criterion> criteria{Criterion::weight};
  int top_x = 1;
  ExtraMode extra = ExtraMode::none;
  double sampled_q = 0.5;
  int pool = 1;
  std::uint64_t seed = 0;
  // Ablation switch: score `weight` as the plain cardinality product instead
  // of the determinism-aware state space. Not part of the spec grammar.
  bool weight_all_stochastic = false;
};

HeuristicSpec parse_heuristic_spec(const std::string& text);
std::string format_heuristic_spec(const HeuristicSpec& spec);

// The built-in lookahead catalog: every nonempty criteria chain of length
// <= 2, the three singletons again with randomized tie-breaking (topx 3),
// and maximum cardinality search. extra/pool/seed are left at defaults.
std::vector<HeuristicSpec> heuristic_catalog();

// Picks the vertex to eliminate next. For lookahead, g is the current
// (partially eliminated) graph and each alive vertex is scored by the
// criteria chain, ascending lexicographically with vertex-id tie-break;
// the winner is drawn uniformly among the first min(top_x, alive) entries.
// For mcs, g keeps its full adjacency and `mcs_numbered` marks the vertices
// already numbered; candidates are ranked by descending numbered-neighbor
// count. Throws on an empty graph.
int next_vertex(const UGraph& g, const Network& net, const HeuristicSpec& spec,
                SplitMix64& rng, const VertexSet* mcs_numbered = nullptr);

// Ancestral plan per spec.extra on the moral graph, then an elimination
// order built with next_vertex, then extra_eliminate. Pure given (net, spec).
Triangulation run_heuristic(const Network& net, const HeuristicSpec& spec);

struct CandidateOutcome {
  std::uint64_t seed = 0;  // derived seed the candidate ran with
  StateSpace score;
  bool elimination_reachable = false;
};

struct SearchResult {
  Triangulation best;
  StateSpace best_score;
  std::vector<CandidateOutcome> per_candidate;  // by candidate index
};

// Runs spec.pool independent candidates, candidate i seeded with
// spec.seed ^ i; the best is the lowest score, ties to the earliest
// candidate. `jobs` only bounds parallelism; results are schedule-invariant.
SearchResult run_pool(const Network& net, const HeuristicSpec& spec,
                      int jobs = 1, bool observed_as_unit = false);

}  // namespace tri
