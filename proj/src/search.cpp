#include "tri/search.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <sstream>

#include "tri/statespace.hpp"

namespace tri {

namespace {

Criterion parse_criterion(const std::string& s) {
  if (s == "weight") return Criterion::weight;
  if (s == "fill") return Criterion::fill;
  if (s == "size") return Criterion::size;
  throw Error("unknown criterion '" + s + "'");
}

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::weight: return "weight";
    case Criterion::fill: return "fill";
    default: return "size";
  }
}

const char* extra_name(ExtraMode m) {
  switch (m) {
    case ExtraMode::none: return "none";
    case ExtraMode::all: return "all";
    case ExtraMode::some: return "some";
    case ExtraMode::lo: return "lo";
    default: return "sampled";
  }
}

}  // namespace

HeuristicSpec parse_heuristic_spec(const std::string& text) {
  HeuristicSpec spec;
  std::istringstream in(text);
  std::string part;
  bool first = true;
  while (std::getline(in, part, ',')) {
    if (part.empty()) throw Error("empty component in spec '" + text + "'");
    if (first && part == "mcs") {
      spec.kind = HeuristicKind::mcs;
      first = false;
      continue;
    }
    if (first && part.rfind("la:", 0) == 0) {
      spec.kind = HeuristicKind::lookahead;
      spec.criteria.clear();
      std::istringstream cs(part.substr(3));
      std::string crit;
      while (std::getline(cs, crit, '+'))
        spec.criteria.push_back(parse_criterion(crit));
      if (spec.criteria.empty()) throw Error("lookahead needs criteria");
      first = false;
      continue;
    }
    first = false;
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw Error("expected key=value in spec component '" + part + "'");
    const std::string key = part.substr(0, eq);
    const std::string val = part.substr(eq + 1);
    try {
      if (key == "topx") {
        spec.top_x = std::stoi(val);
        if (spec.top_x < 1) throw Error("topx must be >= 1");
      } else if (key == "extra") {
        if (val == "none") spec.extra = ExtraMode::none;
        else if (val == "all") spec.extra = ExtraMode::all;
        else if (val == "some") spec.extra = ExtraMode::some;
        else if (val == "lo") spec.extra = ExtraMode::lo;
        else if (val == "sampled") spec.extra = ExtraMode::sampled;
        else throw Error("unknown extra mode '" + val + "'");
      } else if (key == "q") {
        spec.sampled_q = std::stod(val);
        if (spec.sampled_q < 0.0 || spec.sampled_q > 1.0)
          throw Error("q must be in [0,1]");
      } else if (key == "pool") {
        spec.pool = std::stoi(val);
        if (spec.pool < 1) throw Error("pool must be >= 1");
      } else if (key == "seed") {
        spec.seed = std::stoull(val);
      } else {
        throw Error("unknown spec key '" + key + "'");
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw Error("bad value in spec component '" + part + "'");
    }
  }
  return spec;
}

std::string format_heuristic_spec(const HeuristicSpec& spec) {
  std::ostringstream out;
  if (spec.kind == HeuristicKind::mcs) {
    out << "mcs";
  } else {
    out << "la:";
    for (std::size_t i = 0; i < spec.criteria.size(); ++i)
      out << (i ? "+" : "") << criterion_name(spec.criteria[i]);
  }
  out << ",topx=" << spec.top_x << ",extra=" << extra_name(spec.extra);
  if (spec.extra == ExtraMode::sampled) out << ",q=" << spec.sampled_q;
  out << ",pool=" << spec.pool << ",seed=" << spec.seed;
  return out.str();
}

std::vector<HeuristicSpec> heuristic_catalog() {
  const Criterion all[] = {Criterion::weight, Criterion::fill,
                           Criterion::size};
  std::vector<HeuristicSpec> out;
  for (Criterion a : all) {
    HeuristicSpec s;
    s.criteria = {a};
    out.push_back(s);
  }
  for (Criterion a : all)
    for (Criterion b : all) {
      HeuristicSpec s;
      s.criteria = {a, b};
      out.push_back(s);
    }
  for (Criterion a : all) {
    HeuristicSpec s;
    s.criteria = {a};
    s.top_x = 3;
    out.push_back(s);
  }
  HeuristicSpec mcs;
  mcs.kind = HeuristicKind::mcs;
  out.push_back(mcs);
  return out;
}

namespace {

struct ScoredVertex {
  std::vector<BigInt> score;
  int vertex = -1;

  bool operator<(const ScoredVertex& o) const {
    if (score != o.score) return score < o.score;
    return vertex < o.vertex;
  }
};

BigInt lookahead_score(const UGraph& g, const Network& net, int v,
                       Criterion crit, bool weight_all_stochastic) {
  switch (crit) {
    case Criterion::weight: {
      VertexSet clique = g.neighbors(v);
      clique.set(v);
      if (!weight_all_stochastic) return clique_state_space(clique, net);
      BigInt product{1};
      for (auto u = clique.find_first(); u != VertexSet::npos;
           u = clique.find_next(u))
        product *= net[static_cast<int>(u)].cardinality;
      return product;
    }
    case Criterion::fill:
      return BigInt{deficiency_count(g, v)};
    default:
      return BigInt{g.degree(v)};
  }
}

}  // namespace

int next_vertex(const UGraph& g, const Network& net, const HeuristicSpec& spec,
                SplitMix64& rng, const VertexSet* mcs_numbered) {
  std::vector<ScoredVertex> ranked;
  if (spec.kind == HeuristicKind::mcs) {
    if (!mcs_numbered) throw Error("mcs selection needs the numbered set");
    for (int v : g.alive_vertices()) {
      if (mcs_numbered->test(v)) continue;
      const auto count = (g.neighbors(v) & *mcs_numbered).count();
      // Negate so ascending sort prefers the most numbered neighbors.
      ranked.push_back({{BigInt{-static_cast<long long>(count)}}, v});
    }
  } else {
    for (int v : g.alive_vertices()) {
      ScoredVertex sv;
      sv.vertex = v;
      for (Criterion crit : spec.criteria)
        sv.score.push_back(
            lookahead_score(g, net, v, crit, spec.weight_all_stochastic));
      ranked.push_back(std::move(sv));
    }
  }
  if (ranked.empty()) throw Error("no vertex to select in an empty graph");
  std::sort(ranked.begin(), ranked.end());
  const std::size_t window =
      std::min<std::size_t>(static_cast<std::size_t>(spec.top_x),
                            ranked.size());
  return ranked[rng.bounded(window)].vertex;
}

namespace {

AncestralPlan make_plan(const UGraph& moral, const Network& net,
                        const HeuristicSpec& spec, std::uint64_t plan_seed) {
  switch (spec.extra) {
    case ExtraMode::none: return {};
    case ExtraMode::all:
      return pretriangulation_closure(moral, net, ClosureMode::all);
    case ExtraMode::some:
      return pretriangulation_closure(moral, net, ClosureMode::some);
    case ExtraMode::lo: return lo_extra(moral, net);
    default: return sampled_extra(moral, net, plan_seed, spec.sampled_q);
  }
}

}  // namespace

Triangulation run_heuristic(const Network& net, const HeuristicSpec& spec) {
  const MoralGraph moral = moralize(net);
  SplitMix64 seeds(spec.seed);
  const std::uint64_t plan_seed = seeds.next();
  const std::uint64_t tie_seed = seeds.next();

  const AncestralPlan plan = make_plan(moral.graph, net, spec, plan_seed);
  const UGraph augmented = with_edges(moral.graph, plan.chosen_edges);

  SplitMix64 tie_rng(tie_seed);
  EliminationOrder order;
  order.order.reserve(augmented.alive_count());
  if (spec.kind == HeuristicKind::mcs) {
    // Number every vertex first, then eliminate in reverse numbering order,
    // which is a perfect order whenever the augmented graph is chordal.
    VertexSet numbered(augmented.capacity());
    std::vector<int> visit;
    visit.reserve(augmented.alive_count());
    for (int step = 0; step < augmented.alive_count(); ++step) {
      int v = next_vertex(augmented, net, spec, tie_rng, &numbered);
      numbered.set(v);
      visit.push_back(v);
    }
    order.order.assign(visit.rbegin(), visit.rend());
  } else {
    UGraph working = augmented;
    while (working.alive_count() > 0) {
      int v = next_vertex(working, net, spec, tie_rng);
      order.order.push_back(v);
      eliminate_in_place(working, v);
    }
  }
  return extra_eliminate(moral.graph, net, plan, order);
}

SearchResult run_pool(const Network& net, const HeuristicSpec& spec, int jobs,
                      bool observed_as_unit) {
  if (spec.pool < 1) throw Error("pool must be >= 1");
  struct Slot {
    std::optional<Triangulation> tri;
    CandidateOutcome outcome;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(spec.pool));

  auto run_candidate = [&](int i) {
    HeuristicSpec cs = spec;
    cs.seed = spec.seed ^ static_cast<std::uint64_t>(i);
    Triangulation t = run_heuristic(net, cs);
    CandidateOutcome out;
    out.seed = cs.seed;
    out.score = graph_state_space(t, net, observed_as_unit);
    out.elimination_reachable = is_elimination_graph(t).reachable;
    slots[static_cast<std::size_t>(i)] = {std::move(t), std::move(out)};
  };

  if (jobs <= 1 || spec.pool == 1) {
    for (int i = 0; i < spec.pool; ++i) run_candidate(i);
  } else {
    std::atomic<int> cursor{0};
    auto worker = [&] {
      for (int i = cursor.fetch_add(1); i < spec.pool;
           i = cursor.fetch_add(1))
        run_candidate(i);
    };
    std::vector<std::future<void>> futures;
    const int n_workers = std::min(jobs, spec.pool);
    futures.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w)
      futures.push_back(std::async(std::launch::async, worker));
    for (auto& f : futures) f.get();
  }

  int best = 0;
  for (int i = 1; i < spec.pool; ++i)
    if (slots[i].outcome.score < slots[best].outcome.score) best = i;

  SearchResult result{std::move(*slots[best].tri),
                      slots[best].outcome.score,
                      {}};
  result.per_candidate.reserve(slots.size());
  for (Slot& s : slots) result.per_candidate.push_back(std::move(s.outcome));
  return result;
}

}  // namespace tri
