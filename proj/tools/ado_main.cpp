// ado: build, query and audit distance oracles; generate graphs and gadgets; run sweeps.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ado/ado.hpp"
#include "ado/bench.hpp"
#include "ado/edge_list_io.hpp"
#include "ado/error.hpp"
#include "ado/gadgets.hpp"
#include "ado/generators.hpp"
#include "ado/lemma_suite.hpp"
#include "ado/oracle.hpp"
#include "ado/parallel.hpp"
#include "ado/verify.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

void log_config(const std::string& command, json config, unsigned threads) {
  config["command"] = command;
  config["threads"] = ado::resolve_threads(threads);
  std::cerr << "config " << config.dump() << '\n';
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) {
    ado::fail(ado::ErrorKind::io, "cannot write " + path);
  }
}

void write_gadget(const ado::GadgetGraph& gadget, const std::string& out,
                  const std::string& rep_map) {
  ado::write_edge_list_file(out, gadget.graph);
  ado::write_rep_map_file(rep_map.empty() ? out + ".rep" : rep_map, gadget);
  std::cout << to_string(gadget.kind) << ": n=" << gadget.graph.num_vertices()
            << " m=" << gadget.graph.num_edges() << " b=" << gadget.b
            << " padded_sets=" << gadget.n_padded << " t=" << gadget.t
            << " max_degree=" << ado::max_degree(gadget.graph) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate distance oracles for unweighted graphs"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (default: $ADO_THREADS or all cores)");

  // build
  auto* build = app.add_subcommand("build", "build an oracle from an edge list");
  std::string graph_path, out_path;
  std::optional<double> alpha, c_n, c_b;
  std::optional<unsigned> k;
  std::optional<double> eps, c;
  std::uint64_t seed = 0;
  build->add_option("graph", graph_path, "edge-list file")->required();
  build->add_option("out", out_path, "oracle output file")->required();
  build->add_option("--alpha", alpha, "raw mode: alpha in [0, 1/3)");
  build->add_option("--cn", c_n, "raw mode: neighborhood constant (default 1)");
  build->add_option("--cb", c_b, "raw mode: bunch constant (default 4)");
  build->add_option("--k", k, "degree mode: k >= 1");
  build->add_option("--eps", eps, "degree mode: 0 < eps <= 1/k");
  build->add_option("--c", c, "degree mode: degree constant (default 1)");
  build->add_option("--seed", seed, "random seed");

  // query
  auto* query = app.add_subcommand("query", "query a stored oracle");
  std::string oracle_path;
  ado::Vertex qu = 0, qv = 0;
  query->add_option("oracle", oracle_path)->required();
  query->add_option("u", qu)->required();
  query->add_option("v", qv)->required();

  // audit
  auto* audit = app.add_subcommand("audit", "check an oracle against exact distances");
  std::optional<double> mult, add;
  bool exhaustive = false;
  std::optional<std::size_t> pairs;
  std::string json_path;
  audit->add_option("graph", graph_path)->required();
  audit->add_option("oracle", oracle_path)->required();
  audit->add_option("--mult", mult, "multiplicative bound (default: oracle's declared)");
  audit->add_option("--add", add, "additive bound (default: oracle's declared)");
  auto* exhaustive_flag = audit->add_flag("--exhaustive", exhaustive, "check every ordered pair");
  audit->add_option("--pairs", pairs, "number of sampled ordered pairs")->excludes(exhaustive_flag);
  audit->add_option("--seed", seed);
  audit->add_option("--json", json_path, "write a summary file");

  // lemmas
  auto* lemmas = app.add_subcommand("lemmas", "sample the truncated-BFS lemmas on a graph");
  std::size_t samples = 1000;
  lemmas->add_option("graph", graph_path)->required();
  lemmas->add_option("--samples", samples);
  lemmas->add_option("--seed", seed);
  lemmas->add_option("--json", json_path);

  // gen
  auto* gen = app.add_subcommand("gen", "generate graphs, gadgets and instances");
  gen->require_subcommand(1);
  std::string rep_map, instance_path;
  std::size_t n = 0, delta = 0, m = 0, num_sets = 0, universe = 0;
  bool connected = false;
  double density = 0.5;
  unsigned gk = 2;
  double geps = 0.5, gc = 1.0;

  auto* gen_random = gen->add_subcommand("random", "random bounded-degree graph");
  gen_random->add_option("out", out_path)->required();
  gen_random->add_option("--n", n)->required();
  gen_random->add_option("--delta", delta, "max degree")->required();
  gen_random->add_option("--m", m, "target edge count")->required();
  gen_random->add_flag("--connected", connected);
  gen_random->add_option("--seed", seed);

  auto* gen_butterfly = gen->add_subcommand("butterfly", "butterfly graph with N vertices per layer");
  gen_butterfly->add_option("out", out_path)->required();
  gen_butterfly->add_option("--N", num_sets)->required();
  gen_butterfly->add_option("--k", gk)->required();
  gen_butterfly->add_option("--rep-map", rep_map, "default: <out>.rep");

  auto* gen_merged = gen->add_subcommand("merged", "merged set-intersection gadget");
  gen_merged->add_option("instance", instance_path)->required();
  gen_merged->add_option("out", out_path)->required();
  gen_merged->add_option("--k", gk)->required();
  gen_merged->add_option("--rep-map", rep_map);

  auto* gen_split = gen->add_subcommand("split", "merged gadget with split boundary edges");
  gen_split->add_option("instance", instance_path)->required();
  gen_split->add_option("out", out_path)->required();
  gen_split->add_option("--k", gk)->required();
  gen_split->add_option("--eps", geps)->required();
  gen_split->add_option("--c", gc)->required();
  gen_split->add_option("--rep-map", rep_map);

  auto* gen_instance = gen->add_subcommand("instance", "random set-intersection instance");
  gen_instance->add_option("out", out_path)->required();
  gen_instance->add_option("--N", num_sets)->required();
  gen_instance->add_option("--X", universe)->required();
  gen_instance->add_option("--density", density);
  gen_instance->add_option("--seed", seed);

  // bench
  auto* bench = app.add_subcommand("bench", "run a sweep from a JSON config, CSV to stdout");
  std::string config_path, csv_path;
  bench->add_option("config", config_path)->required();
  bench->add_option("--out", csv_path, "CSV file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ado::ErrorKind::usage);
  }

  try {
    if (build->parsed()) {
      const bool raw = alpha || c_n || c_b;
      const bool degree = k || eps || c;
      if (raw == degree) {
        ado::fail(ado::ErrorKind::usage,
                  "build needs either --alpha [--cn --cb] or --k --eps [--c], not both");
      }
      if (degree && (!k || !eps)) {
        ado::fail(ado::ErrorKind::usage, "degree mode needs both --k and --eps");
      }
      if (raw && !alpha) {
        ado::fail(ado::ErrorKind::usage, "raw mode needs --alpha");
      }
      json config{{"graph", graph_path}, {"out", out_path}, {"seed", seed}};
      if (raw) {
        config["alpha"] = *alpha;
        config["c_n"] = c_n.value_or(1.0);
        config["c_b"] = c_b.value_or(4.0);
      } else {
        config["k"] = *k;
        config["eps"] = *eps;
        config["c"] = c.value_or(1.0);
      }
      log_config("build", config, threads);
      // validate parameters before reading the graph
      ado::AdoParams params;
      if (raw) {
        params.alpha = *alpha;
        params.c_n = c_n.value_or(1.0);
        params.c_b = c_b.value_or(4.0);
        params.seed = seed;
        params.threads = threads;
        params.validate();
      }
      const ado::Graph g = ado::read_edge_list_file(graph_path);
      const ado::AdoStructure oracle =
          raw ? ado::build_ado(g, params)
              : ado::build_for_degree(g, *k, *eps, c.value_or(1.0), seed, threads);
      ado::save_ado(out_path, oracle);
      std::cout << ado::format_space_report(ado::space_report(oracle)) << '\n';
      const auto& s = oracle.declared_stretch();
      std::cout << "declared_stretch: mult=" << s.mult << " add=" << s.add << '\n';
      if (const auto& info = oracle.degree_info(); info && !info->conforming) {
        std::cerr << "warning: max degree " << info->max_degree << " exceeds c*n^(1/k-eps) = "
                  << info->degree_limit << "; only the generic stretch is declared\n";
      }
      return 0;
    }
    if (query->parsed()) {
      log_config("query", {{"oracle", oracle_path}, {"u", qu}, {"v", qv}}, threads);
      const ado::AdoStructure oracle = ado::load_ado(oracle_path);
      const ado::QueryResult r = oracle.query(qu, qv);
      if (ado::is_finite(r.estimate)) {
        std::cout << r.estimate;
      } else {
        std::cout << "inf";
      }
      std::cout << ' ' << ado::to_string(r.kind) << '\n';
      return 0;
    }
    if (audit->parsed()) {
      const ado::Graph g = ado::read_edge_list_file(graph_path);
      auto structure = std::make_shared<const ado::AdoStructure>(ado::load_ado(oracle_path));
      if (structure->num_vertices() != g.num_vertices()) {
        ado::fail(ado::ErrorKind::input, "oracle has " +
                                             std::to_string(structure->num_vertices()) +
                                             " vertices, graph has " +
                                             std::to_string(g.num_vertices()));
      }
      const ado::AdoOracle oracle(structure);
      ado::AuditOptions options;
      options.mult = mult.value_or(oracle.declared_stretch().mult);
      options.add = add.value_or(oracle.declared_stretch().add);
      if (pairs && !exhaustive) {
        options.pair_budget = *pairs;
      }
      options.seed = seed;
      options.threads = threads;
      log_config("audit",
                 {{"graph", graph_path},
                  {"oracle", oracle_path},
                  {"mult", options.mult},
                  {"add", options.add},
                  {"exhaustive", !pairs || exhaustive},
                  {"pairs", pairs ? json(*pairs) : json(nullptr)},
                  {"seed", seed}},
                 threads);
      const ado::StretchAudit result = ado::audit_stretch(g, oracle, options);
      std::cout << result.to_text();
      if (!json_path.empty()) {
        write_text_file(json_path, result.to_json() + "\n");
      }
      return result.passed() ? 0 : 1;
    }
    if (lemmas->parsed()) {
      log_config("lemmas", {{"graph", graph_path}, {"samples", samples}, {"seed", seed}}, threads);
      const ado::Graph g = ado::read_edge_list_file(graph_path);
      const ado::LemmaReport report = ado::check_lemma_suite(g, samples, seed);
      std::cout << report.to_text();
      if (!json_path.empty()) {
        write_text_file(json_path, report.to_json() + "\n");
      }
      return report.passed() ? 0 : 1;
    }
    if (gen_random->parsed()) {
      log_config("gen random",
                 {{"out", out_path}, {"n", n}, {"delta", delta}, {"m", m}, {"connected", connected},
                  {"seed", seed}},
                 threads);
      ado::RandomGraphOptions options{n, delta, m, seed, connected};
      const ado::Graph g = ado::gen_random_bounded_degree(options);
      ado::write_edge_list_file(out_path, g);
      std::cout << "random: n=" << g.num_vertices() << " m=" << g.num_edges()
                << " max_degree=" << ado::max_degree(g) << '\n';
      return 0;
    }
    if (gen_butterfly->parsed()) {
      log_config("gen butterfly", {{"out", out_path}, {"N", num_sets}, {"k", gk}}, threads);
      write_gadget(ado::gen_butterfly(num_sets, gk), out_path, rep_map);
      return 0;
    }
    if (gen_merged->parsed()) {
      log_config("gen merged", {{"instance", instance_path}, {"out", out_path}, {"k", gk}}, threads);
      write_gadget(ado::gen_merged(ado::read_instance_file(instance_path), gk), out_path, rep_map);
      return 0;
    }
    if (gen_split->parsed()) {
      log_config("gen split",
                 {{"instance", instance_path}, {"out", out_path}, {"k", gk}, {"eps", geps},
                  {"c", gc}},
                 threads);
      write_gadget(ado::gen_split(ado::read_instance_file(instance_path), gk, geps, gc), out_path,
                   rep_map);
      return 0;
    }
    if (gen_instance->parsed()) {
      log_config("gen instance",
                 {{"out", out_path}, {"N", num_sets}, {"X", universe}, {"density", density},
                  {"seed", seed}},
                 threads);
      ado::write_instance_file(out_path,
                               ado::gen_random_instance(num_sets, universe, density, seed));
      return 0;
    }
    if (bench->parsed()) {
      log_config("bench", {{"config", config_path}, {"out", csv_path}}, threads);
      const auto runs = ado::read_bench_config_file(config_path);
      if (csv_path.empty()) {
        ado::run_bench_sweep(runs, std::cout, threads);
      } else {
        std::ofstream out(csv_path);
        if (!out) {
          ado::fail(ado::ErrorKind::io, "cannot write " + csv_path);
        }
        ado::run_bench_sweep(runs, out, threads);
      }
      return 0;
    }
  } catch (const ado::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return static_cast<int>(ado::ErrorKind::capacity);
  }
  return 0;
}
