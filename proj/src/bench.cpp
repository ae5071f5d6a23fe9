#include "tri/bench.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <sstream>

#include "tri/rng.hpp"

namespace tri {

namespace {

// Binomial coefficients small enough for exact 64-bit arithmetic here
// (in-degree caps at a handful).
std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) /
        static_cast<std::uint64_t>(i);
  return r;
}

// Uniform k-subset of {0..n-1} (Floyd), returned ascending.
std::vector<int> sample_subset(int n, int k, SplitMix64& rng) {
  std::vector<int> out;
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int j = n - k; j < n; ++j) {
    int t = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(j) + 1));
    if (in[t]) t = j;
    in[t] = 1;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Network gen_random_network(const GenParams& p) {
  if (p.nodes <= 0) throw Error("generator needs at least one node");
  if (p.max_in_degree < 0) throw Error("max in-degree must be >= 0");
  if (p.p_det < 0 || p.p_det > 1 || p.p_obs < 0 || p.p_obs > 1)
    throw Error("probabilities must be in [0,1]");
  if (p.stoch_card_min < 1 || p.stoch_card_max < p.stoch_card_min)
    throw Error("bad stochastic cardinality range");
  if (p.obs_card < 1 || p.det_card_cap < 2)
    throw Error("bad observed cardinality or deterministic cap");

  SplitMix64 rng(p.seed);
  Network net;
  net.name = "rand" + std::to_string(p.seed);
  for (int i = 0; i < p.nodes; ++i) {
    Vertex v;
    v.id = i;
    v.name = "v" + std::to_string(i);

    // Parent-set size s chosen with probability proportional to C(i, s),
    // which makes the set uniform over all subsets of size <= cap.
    const int cap = std::min(i, p.max_in_degree);
    std::uint64_t total = 0;
    for (int s = 0; s <= cap; ++s) total += choose(i, s);
    std::uint64_t pick = rng.bounded(total);
    int size = 0;
    for (int s = 0; s <= cap; ++s) {
      const std::uint64_t c = choose(i, s);
      if (pick < c) {
        size = s;
        break;
      }
      pick -= c;
    }
    v.parents = sample_subset(i, size, rng);

    v.deterministic = rng.uniform01() < p.p_det;
    v.observed = rng.uniform01() < p.p_obs;
    if (v.deterministic && v.parents.empty()) v.deterministic = false;

    if (v.deterministic) {
      std::int64_t prod = 1;
      for (int q : v.parents) {
        prod *= net.vertices[q].cardinality;
        if (prod >= p.det_card_cap) {
          prod = p.det_card_cap;
          break;
        }
      }
      v.cardinality =
          rng.range(2, std::max<std::int64_t>(
                           2, std::min(prod, p.det_card_cap)));
    } else if (v.observed) {
      v.cardinality = p.obs_card;
    } else {
      v.cardinality = rng.range(p.stoch_card_min, p.stoch_card_max);
    }
    net.vertices.push_back(std::move(v));
  }
  validate_network(net);
  return net;
}

BenchReport run_benchmark(const GenParams& p, int n_graphs,
                          const std::vector<HeuristicSpec>& methods,
                          int jobs, bool observed_as_unit) {
  if (n_graphs < 1) throw Error("benchmark needs at least one graph");
  if (methods.empty()) throw Error("benchmark needs at least one method");

  BenchReport report;
  report.params = p;
  report.n_graphs = n_graphs;
  for (const HeuristicSpec& m : methods)
    report.method_names.push_back(format_heuristic_spec(m));
  report.rows.resize(static_cast<std::size_t>(n_graphs));

  auto run_graph = [&](int g) {
    const std::uint64_t graph_seed = mix_seed(p.seed, g);
    GenParams gp = p;
    gp.seed = graph_seed;
    const Network net = gen_random_network(gp);
    BenchRow row;
    row.graph_id = g;
    for (const Vertex& v : net.vertices)
      if (v.deterministic) ++row.det_count;
    for (std::size_t m = 0; m < methods.size(); ++m) {
      HeuristicSpec spec = methods[m];
      spec.seed = mix_seed(graph_seed, methods[m].seed);
      row.scores.push_back(
          run_pool(net, spec, 1, observed_as_unit).best_score);
    }
    row.winner = 0;
    for (std::size_t m = 1; m < row.scores.size(); ++m)
      if (row.scores[m] < row.scores[row.winner])
        row.winner = static_cast<int>(m);
    int at_best = 0;
    for (const StateSpace& s : row.scores)
      if (s == row.scores[row.winner]) ++at_best;
    row.tie = at_best > 1;
    report.rows[static_cast<std::size_t>(g)] = std::move(row);
  };

  if (jobs <= 1) {
    for (int g = 0; g < n_graphs; ++g) run_graph(g);
  } else {
    std::atomic<int> cursor{0};
    auto worker = [&] {
      for (int g = cursor.fetch_add(1); g < n_graphs; g = cursor.fetch_add(1))
        run_graph(g);
    };
    std::vector<std::future<void>> futures;
    const int n_workers = std::min(jobs, n_graphs);
    futures.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w)
      futures.push_back(std::async(std::launch::async, worker));
    for (auto& f : futures) f.get();
  }

  report.aggregates.assign(methods.size(), MethodAggregate{});
  for (const BenchRow& row : report.rows) {
    const StateSpace& best = row.scores[static_cast<std::size_t>(row.winner)];
    for (std::size_t m = 0; m < row.scores.size(); ++m) {
      MethodAggregate& agg = report.aggregates[m];
      const StateSpace& s = row.scores[m];
      if (static_cast<int>(m) == row.winner) {
        ++agg.best;
      } else {
        if (s == best) ++agg.tied_best;
        if (s < best * 2) ++agg.lt2;
        else if (s < best * 4) ++agg.x2_4;
        else if (s < best * 8) ++agg.x4_8;
        else if (s < best * 16) ++agg.x8_16;
        else ++agg.ge16;
      }
    }
  }
  return report;
}

std::string format_bench_report(const BenchReport& report, bool table2) {
  std::ostringstream out;
  const GenParams& p = report.params;
  out << "# gen: nodes=" << p.nodes << " max_in_degree=" << p.max_in_degree
      << " p_det=" << p.p_det << " p_obs=" << p.p_obs << " stoch_cards=["
      << p.stoch_card_min << "," << p.stoch_card_max << "] obs_card="
      << p.obs_card << " det_card_cap=" << p.det_card_cap
      << " seed=" << p.seed << " graphs=" << report.n_graphs << "\n";
  out << "# note: parent sets are sampled uniformly per node over a random "
         "topological order, an approximation of a uniform draw over all "
         "bounded-in-degree DAGs\n";
  out << "graph\tdet_count";
  for (const std::string& name : report.method_names) out << '\t' << name;
  out << "\twinner\ttie\n";
  for (const BenchRow& row : report.rows) {
    out << row.graph_id << '\t' << row.det_count;
    for (const StateSpace& s : row.scores) out << '\t' << s;
    out << '\t' << row.winner << '\t' << (row.tie ? 1 : 0) << "\n";
  }
  out << "\nmethod\tbest\ttied_best\tlt_x2\tx2_x4\tx4_x8\tx8_x16\tge_x16\n";
  for (std::size_t m = 0; m < report.method_names.size(); ++m) {
    const MethodAggregate& a = report.aggregates[m];
    out << report.method_names[m] << '\t' << a.best << '\t' << a.tied_best
        << '\t' << a.lt2 << '\t' << a.x2_4 << '\t' << a.x4_8 << '\t'
        << a.x8_16 << '\t' << a.ge16 << "\n";
  }
  if (table2) {
    // Share of graphs (by deterministic-node count) where each method was
    // the best or within 2x of it.
    std::map<int, std::vector<int>> within2x;  // det_count -> per-method hits
    std::map<int, int> group_size;
    for (const BenchRow& row : report.rows) {
      auto& hits = within2x[row.det_count];
      hits.resize(report.method_names.size(), 0);
      ++group_size[row.det_count];
      const StateSpace& best =
          row.scores[static_cast<std::size_t>(row.winner)];
      for (std::size_t m = 0; m < row.scores.size(); ++m)
        if (row.scores[m] < best * 2) ++hits[m];
    }
    out << "\ndet_count\tgraphs";
    for (const std::string& name : report.method_names)
      out << '\t' << name << "_pct_lt_x2";
    out << "\n";
    for (const auto& [det, hits] : within2x) {
      out << det << '\t' << group_size[det];
      for (int h : hits)
        out << '\t' << (100.0 * h / group_size[det]);
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace tri
