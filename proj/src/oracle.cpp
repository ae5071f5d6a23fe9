#include "tri/oracle.hpp"

#include <algorithm>
#include <map>

#include "tri/statespace.hpp"

namespace tri {

namespace {

// Fill edges of the elimination graph, encoded as a mask over `pair_index`
// (canonical order over the non-adjacent pairs of g).
std::uint64_t elimination_fill_mask(const UGraph& g,
                                    const std::vector<int>& order,
                                    const std::map<Edge, int>& pair_index) {
  UGraph working = g;
  std::uint64_t mask = 0;
  for (int v : order) {
    for (const Edge& e : deficiency(working, v)) {
      mask |= std::uint64_t{1} << pair_index.at(e);
      working.add_edge(e.first, e.second);
    }
    working.kill_vertex(v);
  }
  return mask;
}

std::vector<Edge> non_adjacent_pairs(const UGraph& g) {
  std::vector<Edge> out;
  const std::vector<int> alive = g.alive_vertices();
  for (std::size_t i = 0; i < alive.size(); ++i)
    for (std::size_t j = i + 1; j < alive.size(); ++j)
      if (!g.has_edge(alive[i], alive[j]))
        out.emplace_back(alive[i], alive[j]);
  return out;
}

}  // namespace

std::pair<StateSpace, EliminationOrder> best_over_orders(
    const Network& net, const OracleLimits& limits) {
  const UGraph moral = moralize(net).graph;
  if (moral.alive_count() > limits.max_order_vertices)
    throw Error("order-enumeration bound exceeded (" +
                std::to_string(moral.alive_count()) + " vertices, limit " +
                std::to_string(limits.max_order_vertices) + ")");

  const std::vector<Edge> pairs = non_adjacent_pairs(moral);
  std::map<Edge, int> pair_index;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    pair_index[pairs[i]] = static_cast<int>(i);

  std::vector<int> order = moral.alive_vertices();  // sorted: lex-first
  std::map<std::uint64_t, StateSpace> memo;         // fill mask -> score
  StateSpace best_score{0};
  EliminationOrder best_order;
  bool have = false;
  do {
    const std::uint64_t mask =
        pairs.size() <= 63
            ? elimination_fill_mask(moral, order, pair_index)
            : 0;
    StateSpace score;
    if (pairs.size() <= 63) {
      auto it = memo.find(mask);
      if (it == memo.end()) {
        std::vector<Edge> fill;
        for (std::size_t i = 0; i < pairs.size(); ++i)
          if (mask & (std::uint64_t{1} << i)) fill.push_back(pairs[i]);
        it = memo.emplace(mask, chordal_graph_state_space(
                                    with_edges(moral, fill), net))
                 .first;
      }
      score = it->second;
    } else {
      // No compact mask; score directly (n is small enough to be rare).
      UGraph working = moral;
      UGraph total = moral;
      for (int v : order) {
        for (const Edge& e : deficiency(working, v)) {
          working.add_edge(e.first, e.second);
          total.add_edge(e.first, e.second);
        }
        working.kill_vertex(v);
      }
      score = chordal_graph_state_space(total, net);
    }
    if (!have || score < best_score) {
      have = true;
      best_score = score;
      best_order.order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (!have) return {StateSpace{0}, {}};  // empty graph: the empty order
  return {best_score, best_order};
}

std::pair<StateSpace, std::vector<Edge>> best_over_triangulations(
    const Network& net, const OracleLimits& limits) {
  const UGraph moral = moralize(net).graph;
  const std::vector<Edge> pairs = non_adjacent_pairs(moral);
  if (static_cast<int>(pairs.size()) > limits.max_fill_pairs)
    throw Error("fill-subset bound exceeded (" +
                std::to_string(pairs.size()) + " pairs, limit " +
                std::to_string(limits.max_fill_pairs) + ")");

  StateSpace best_score{0};
  std::vector<Edge> best_fill;
  bool have = false;
  const std::uint64_t end = std::uint64_t{1} << pairs.size();
  std::vector<Edge> fill;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    fill.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) fill.push_back(pairs[i]);
    UGraph total = with_edges(moral, fill);
    if (!is_chordal_quick(total)) continue;
    StateSpace score = chordal_graph_state_space(total, net);
    if (!have || score < best_score) {  // keep-first: subsets win ties
      have = true;
      best_score = score;
      best_fill = fill;
    }
  }
  if (!have) {
    // Unreachable: the complete fill always triangulates.
    return {StateSpace{0}, {}};
  }
  return {best_score, best_fill};
}

OracleReport oracle_report(const Network& net, const OracleLimits& limits) {
  OracleReport report;
  auto [elim_score, elim_order] = best_over_orders(net, limits);
  auto [tri_score, tri_fill] = best_over_triangulations(net, limits);
  report.best_elim_score = std::move(elim_score);
  report.best_elim_order = std::move(elim_order);
  report.best_tri_score = std::move(tri_score);
  report.best_tri_fill = std::move(tri_fill);
  report.gap = report.best_tri_score < report.best_elim_score;
  return report;
}

bool maxstatspace_decide(const Network& net, const StateSpace& alpha,
                         const OracleLimits& limits) {
  return best_over_triangulations(net, limits).first < alpha;
}

bool verify_certificate(const Network& net, const std::vector<Edge>& fill,
                        const StateSpace& alpha) {
  const UGraph moral = moralize(net).graph;
  UGraph total = moral;
  for (const Edge& e : fill) {
    const Edge n = make_edge(e.first, e.second);
    if (!moral.is_alive(n.first) || !moral.is_alive(n.second) ||
        n.first == n.second)
      throw Error("certificate edge endpoints must be distinct vertices");
    if (moral.has_edge(n.first, n.second))
      throw Error("certificate fill overlaps the moral graph");
    total.add_edge(n.first, n.second);
  }
  if (!is_chordal_quick(total)) return false;
  return chordal_graph_state_space(total, net) < alpha;
}

}  // namespace tri
