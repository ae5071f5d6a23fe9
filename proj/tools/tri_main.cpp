// tri: triangulation toolkit for mixed stochastic/deterministic networks.
//
// Subcommands: triangulate, check-elim, statespace, ancestral, minimalize,
// oracle, gen, bench. Primary output goes to stdout as tab-separated fields;
// diagnostics to stderr. Exit codes: 0 success, 1 negative verdict,
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tri/ancestral.hpp"
#include "tri/bench.hpp"
#include "tri/elimination.hpp"
#include "tri/network.hpp"
#include "tri/oracle.hpp"
#include "tri/search.hpp"
#include "tri/statespace.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tri::Error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tri::Error("cannot write file '" + path + "'");
  out << content;
}

tri::Network load_network(const std::string& path) {
  try {
    return tri::parse_network(read_file(path));
  } catch (const tri::Error& e) {
    throw tri::Error(path + ": " + e.what());
  }
}

tri::Triangulation load_triangulation(const std::string& path,
                                      const tri::Network& net) {
  try {
    return tri::parse_triangulation(read_file(path), net);
  } catch (const tri::Error& e) {
    throw tri::Error(path + ": " + e.what());
  }
}

const char* cause_name(tri::AncestralCause c) {
  return c == tri::AncestralCause::child ? "child" : "undirected";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triangulation toolkit for mixed stochastic/deterministic "
               "networks"};
  app.require_subcommand(1);
  int exit_code = 0;

  // triangulate
  std::string t_net, t_spec, t_out;
  int t_jobs = 1;
  bool t_obs_unit = false;
  auto* c_tri = app.add_subcommand("triangulate",
                                   "search for a low state-space "
                                   "triangulation");
  c_tri->add_option("net", t_net, "network file")->required();
  c_tri->add_option("--spec", t_spec, "heuristic spec string")->required();
  c_tri->add_option("--out", t_out, "write the triangulation here");
  c_tri->add_option("--jobs", t_jobs, "parallel candidate workers");
  c_tri->add_flag("--observed-as-unit", t_obs_unit,
                  "score observed vertices as cardinality 1");
  c_tri->callback([&] {
    const tri::Network net = load_network(t_net);
    const tri::HeuristicSpec spec = tri::parse_heuristic_spec(t_spec);
    tri::SearchResult result = tri::run_pool(net, spec, t_jobs, t_obs_unit);
    if (!t_out.empty())
      write_file(t_out, tri::serialize_triangulation(result.best, net));
    const bool reachable =
        tri::is_elimination_graph(result.best).reachable;
    std::cout << result.best_score << '\t'
              << (reachable ? "elimination-graph" : "not-elimination-graph")
              << "\n";
  });

  // check-elim
  std::string ce_net, ce_tri;
  auto* c_check = app.add_subcommand(
      "check-elim", "can some elimination order produce this triangulation?");
  c_check->add_option("net", ce_net, "network file")->required();
  c_check->add_option("tri", ce_tri, "triangulation file")->required();
  c_check->callback([&] {
    const tri::Network net = load_network(ce_net);
    const tri::Triangulation t = load_triangulation(ce_tri, net);
    const tri::EliminationCheck check = tri::is_elimination_graph(t);
    if (check.reachable) {
      std::cout << "elimination-graph";
      for (int v : check.witness->order) std::cout << ' ' << net[v].name;
      std::cout << "\n";
    } else {
      std::cout << "not-elimination-graph\n";
      exit_code = 1;
    }
  });

  // statespace
  std::string ss_net, ss_tri;
  bool ss_obs_unit = false;
  auto* c_ss = app.add_subcommand("statespace",
                                  "determinism-aware state space of the "
                                  "moral graph or a triangulation of it");
  c_ss->add_option("net", ss_net, "network file")->required();
  c_ss->add_option("tri", ss_tri, "triangulation file (default: no fill)");
  c_ss->add_flag("--observed-as-unit", ss_obs_unit,
                 "score observed vertices as cardinality 1");
  c_ss->callback([&] {
    const tri::Network net = load_network(ss_net);
    const tri::Triangulation t =
        ss_tri.empty() ? tri::Triangulation(tri::moralize(net).graph, {})
                       : load_triangulation(ss_tri, net);
    std::cout << tri::graph_state_space(t, net, ss_obs_unit) << "\n";
  });

  // ancestral
  std::string a_net, a_mode = "all";
  double a_q = 0.5;
  std::uint64_t a_seed = 0;
  auto* c_anc = app.add_subcommand("ancestral",
                                   "pre-triangulation ancestral edge plan");
  c_anc->add_option("net", a_net, "network file")->required();
  c_anc->add_option("--mode", a_mode, "all|some|lo|sampled")->required();
  c_anc->add_option("--q", a_q, "selection probability for sampled");
  c_anc->add_option("--seed", a_seed, "seed for sampled");
  c_anc->callback([&] {
    const tri::Network net = load_network(a_net);
    const tri::UGraph moral = tri::moralize(net).graph;
    tri::AncestralPlan plan;
    if (a_mode == "all")
      plan = tri::pretriangulation_closure(moral, net, tri::ClosureMode::all);
    else if (a_mode == "some")
      plan = tri::pretriangulation_closure(moral, net, tri::ClosureMode::some);
    else if (a_mode == "lo")
      plan = tri::lo_extra(moral, net);
    else if (a_mode == "sampled")
      plan = tri::sampled_extra(moral, net, a_seed, a_q);
    else
      throw tri::Error("unknown mode '" + a_mode + "'");
    for (const tri::AncestralGroup& grp : plan.groups)
      for (const tri::Edge& e : grp.edges)
        std::cout << "extra " << net[e.first].name << ' '
                  << net[e.second].name << ' ' << a_mode << ' '
                  << net[grp.det].name << ' ' << cause_name(grp.cause)
                  << "\n";
  });

  // minimalize
  std::string m_net, m_tri, m_out;
  auto* c_min = app.add_subcommand(
      "minimalize", "drop removable fill edges until the fill is minimal");
  c_min->add_option("net", m_net, "network file")->required();
  c_min->add_option("tri", m_tri, "triangulation file")->required();
  c_min->add_option("--out", m_out, "write the minimalized triangulation");
  c_min->callback([&] {
    const tri::Network net = load_network(m_net);
    const tri::Triangulation t = load_triangulation(m_tri, net);
    const tri::Triangulation reduced = tri::minimalize(t);
    if (!m_out.empty())
      write_file(m_out, tri::serialize_triangulation(reduced, net));
    std::cout << reduced.fill().size() << '\t'
              << tri::graph_state_space(reduced, net) << "\n";
  });

  // oracle
  std::string o_net, o_alpha;
  int o_max_pairs = 22;
  auto* c_oracle = app.add_subcommand(
      "oracle", "exhaustive optima over orders and over triangulations");
  c_oracle->add_option("net", o_net, "network file")->required();
  c_oracle->add_option("--decide", o_alpha,
                       "also decide: triangulation with state space < alpha?");
  c_oracle->add_option("--max-fill-pairs", o_max_pairs,
                       "fill-subset enumeration bound");
  c_oracle->callback([&] {
    const tri::Network net = load_network(o_net);
    tri::OracleLimits limits;
    limits.max_fill_pairs = o_max_pairs;
    const tri::OracleReport report = tri::oracle_report(net, limits);
    std::cout << report.best_elim_score << '\t';
    for (std::size_t i = 0; i < report.best_elim_order.order.size(); ++i)
      std::cout << (i ? "," : "")
                << net[report.best_elim_order.order[i]].name;
    std::cout << '\t' << report.best_tri_score << '\t';
    for (std::size_t i = 0; i < report.best_tri_fill.size(); ++i) {
      const tri::Edge& e = report.best_tri_fill[i];
      std::cout << (i ? "," : "") << net[e.first].name << '-'
                << net[e.second].name;
    }
    std::cout << '\t' << (report.gap ? "gap" : "no-gap");
    if (!o_alpha.empty()) {
      tri::StateSpace alpha;
      try {
        alpha = tri::StateSpace(o_alpha);
      } catch (const std::exception&) {
        throw tri::Error("bad --decide threshold '" + o_alpha + "'");
      }
      const bool verdict = report.best_tri_score < alpha;
      std::cout << '\t' << (verdict ? "true" : "false");
      if (!verdict) exit_code = 1;
    }
    std::cout << "\n";
  });

  // gen
  tri::GenParams g_params;
  std::string g_out;
  auto* c_gen = app.add_subcommand("gen", "generate a random network");
  c_gen->add_option("--seed", g_params.seed, "generator seed")->required();
  c_gen->add_option("--nodes", g_params.nodes, "node count")
      ->capture_default_str();
  c_gen->add_option("--max-parents", g_params.max_in_degree,
                    "maximum in-degree")
      ->capture_default_str();
  c_gen->add_option("--pdet", g_params.p_det, "deterministic probability")
      ->capture_default_str();
  c_gen->add_option("--pobs", g_params.p_obs, "observed probability")
      ->capture_default_str();
  c_gen->add_option("--obs-card", g_params.obs_card,
                    "cardinality of observed vertices")
      ->capture_default_str();
  c_gen->add_option("--det-cap", g_params.det_card_cap,
                    "deterministic cardinality cap")
      ->capture_default_str();
  c_gen->add_option("--out", g_out, "output network file")->required();
  c_gen->callback([&] {
    write_file(g_out,
               tri::serialize_network(tri::gen_random_network(g_params)));
  });

  // bench
  tri::GenParams b_params;
  b_params.nodes = 15;  // desk-scale default; full protocol via flags
  std::string b_methods, b_out;
  int b_graphs = 100, b_jobs = 1;
  bool b_table2 = false, b_obs_unit = false;
  auto* c_bench = app.add_subcommand(
      "bench", "compare heuristic methods on random networks");
  c_bench->add_option("--graphs", b_graphs, "number of graphs")->required();
  c_bench->add_option("--seed", b_params.seed, "master seed")->required();
  c_bench->add_option("--methods", b_methods,
                      "semicolon-separated heuristic specs")
      ->required();
  c_bench->add_flag("--table2", b_table2,
                    "add a breakdown by deterministic-node count");
  c_bench->add_option("--out", b_out, "output report file")->required();
  c_bench->add_option("--nodes", b_params.nodes, "node count per graph")
      ->capture_default_str();
  c_bench->add_option("--max-parents", b_params.max_in_degree,
                      "maximum in-degree");
  c_bench->add_option("--pdet", b_params.p_det, "deterministic probability");
  c_bench->add_option("--pobs", b_params.p_obs, "observed probability");
  c_bench->add_option("--obs-card", b_params.obs_card,
                      "cardinality of observed vertices");
  c_bench->add_option("--det-cap", b_params.det_card_cap,
                      "deterministic cardinality cap");
  c_bench->add_option("--jobs", b_jobs, "parallel graph workers");
  c_bench->add_flag("--observed-as-unit", b_obs_unit,
                    "score observed vertices as cardinality 1");
  c_bench->callback([&] {
    std::vector<tri::HeuristicSpec> methods;
    std::istringstream ms(b_methods);
    std::string one;
    while (std::getline(ms, one, ';'))
      if (!one.empty()) methods.push_back(tri::parse_heuristic_spec(one));
    const tri::BenchReport report =
        tri::run_benchmark(b_params, b_graphs, methods, b_jobs, b_obs_unit);
    write_file(b_out, tri::format_bench_report(report, b_table2));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const tri::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
