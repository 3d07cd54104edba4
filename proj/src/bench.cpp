#include "ado/bench.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ado/ado.hpp"
#include "ado/error.hpp"
#include "ado/generators.hpp"
#include "ado/oracle.hpp"
#include "ado/verify.hpp"
#include "json.hpp"

namespace ado {

namespace {

using nlohmann::json;

BenchRun parse_run(const json& j, std::size_t n) {
  BenchRun run;
  run.n = n;
  for (const auto& [key, value] : j.items()) {
    if (key == "n") {
      continue;
    } else if (key == "delta_max") {
      run.delta_max = value.get<std::size_t>();
    } else if (key == "edge_factor") {
      run.edge_factor = value.get<double>();
    } else if (key == "mode") {
      run.mode = value.get<std::string>();
    } else if (key == "k") {
      run.k = value.get<unsigned>();
    } else if (key == "eps") {
      run.eps = value.get<double>();
    } else if (key == "c") {
      run.c = value.get<double>();
    } else if (key == "alpha") {
      run.alpha = value.get<double>();
    } else if (key == "c_n") {
      run.c_n = value.get<double>();
    } else if (key == "c_b") {
      run.c_b = value.get<double>();
    } else if (key == "seed") {
      run.seed = value.get<std::uint64_t>();
    } else if (key == "audit_pairs") {
      run.audit_pairs = value.get<std::size_t>();
    } else {
      fail(ErrorKind::format, "bench config: unknown key '" + key + "'");
    }
  }
  if (run.mode != "theorem" && run.mode != "raw") {
    fail(ErrorKind::format, "bench config: mode must be 'theorem' or 'raw'");
  }
  return run;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (const char ch : s) {
    out += ch;
    if (ch == '"') {
      out += '"';
    }
  }
  return out + "\"";
}

}  // namespace

std::vector<BenchRun> parse_bench_config(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    return {};
  }
  std::vector<BenchRun> runs;
  try {
    const json root = json::parse(text);
    if (!root.is_object()) {
      fail(ErrorKind::format, "bench config: top level must be an object");
    }
    if (!root.contains("runs")) {
      return runs;
    }
    for (const auto& entry : root.at("runs")) {
      if (!entry.contains("n")) {
        fail(ErrorKind::format, "bench config: every run needs 'n'");
      }
      const auto& n = entry.at("n");
      if (n.is_array()) {
        for (const auto& value : n) {
          runs.push_back(parse_run(entry, value.get<std::size_t>()));
        }
      } else {
        runs.push_back(parse_run(entry, n.get<std::size_t>()));
      }
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::format, std::string("bench config: ") + e.what());
  }
  return runs;
}

std::vector<BenchRun> read_bench_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    fail(ErrorKind::io, "cannot open bench config " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_bench_config(buffer.str());
}

BenchRow run_bench(const BenchRun& run, unsigned threads) {
  BenchRow row;
  row.run = run;
  try {
    const double n = static_cast<double>(run.n);
    std::size_t delta_max = 4;
    if (run.delta_max) {
      delta_max = *run.delta_max;
    } else if (run.mode == "theorem") {
      if (run.k == 0) {
        fail(ErrorKind::input, "k must be >= 1");
      }
      delta_max = static_cast<std::size_t>(
          std::floor(run.c * std::pow(n, 1.0 / run.k - run.eps) + 1e-9));
    }
    RandomGraphOptions options;
    options.n = run.n;
    options.delta_max = delta_max;
    options.target_m = std::min(static_cast<std::size_t>(run.edge_factor * n),
                                run.n * delta_max / 2);
    options.seed = run.seed;
    options.connected = delta_max >= 2 && run.n >= 2 && options.target_m + 1 >= run.n;
    const Graph g = gen_random_bounded_degree(options);
    row.delta = max_degree(g);
    row.m = g.num_edges();

    const auto start = std::chrono::steady_clock::now();
    AdoStructure ado;
    if (run.mode == "theorem") {
      ado = build_for_degree(g, run.k, run.eps, run.c, run.seed, threads);
    } else {
      AdoParams params;
      params.alpha = run.alpha;
      params.c_n = run.c_n;
      params.c_b = run.c_b;
      params.seed = run.seed;
      params.threads = threads;
      ado = build_ado(g, params);
    }
    row.build_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    row.alpha = ado.params().alpha;
    row.c_n = ado.params().c_n;
    row.a_size = ado.centers().size();
    row.stored_entry_count = ado.stored_entry_count();
    row.entries_per_n2 = n > 0 ? static_cast<double>(row.stored_entry_count) / (n * n) : 0.0;

    if (run.audit_pairs > 0) {
      const Stretch declared = ado.declared_stretch();
      const AdoOracle oracle(std::move(ado));
      AuditOptions audit;
      audit.mult = declared.mult;
      audit.add = declared.add;
      audit.pair_budget = run.audit_pairs;
      audit.seed = run.seed;
      audit.threads = threads;
      const StretchAudit result = audit_stretch(g, oracle, audit);
      row.worst_multiplicative = result.worst_multiplicative;
      row.worst_additive_at_2x = result.pairs_checked > 0 ? result.worst_additive_at_2x : 0;
      row.violations = result.violation_count + result.exact_claim_mismatches;
      row.max_query_lookups = result.max_lookups;
      if (!result.passed()) {
        row.status = "violations";
      }
    }
  } catch (const Error& e) {
    row.status = std::string("error: ") + e.what();
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

std::string bench_csv_header() {
  return "n,delta,m,mode,alpha,c_N,c_B,k,eps,c,seed,build_ms,a_size,stored_entry_count,"
         "entries_per_n2,worst_mult,worst_additive_at_2x,violations,max_query_lookups,status";
}

std::string bench_csv_line(const BenchRow& row) {
  const bool theorem = row.run.mode == "theorem";
  std::ostringstream out;
  out.precision(10);
  out << row.run.n << ',' << row.delta << ',' << row.m << ',' << row.run.mode << ','
      << (row.status == "ok" || row.status == "violations" ? row.alpha : row.run.alpha) << ','
      << (theorem ? row.c_n : row.run.c_n) << ',' << row.run.c_b << ',';
  if (theorem) {
    out << row.run.k << ',' << row.run.eps << ',' << row.run.c;
  } else {
    out << ",,";
  }
  out << ',' << row.run.seed << ',';
  out.precision(4);
  out << std::fixed << row.build_ms << std::defaultfloat;
  out.precision(10);
  out << ',' << row.a_size << ',' << row.stored_entry_count << ',' << row.entries_per_n2 << ','
      << row.worst_multiplicative << ',' << row.worst_additive_at_2x << ',' << row.violations << ','
      << row.max_query_lookups << ',' << csv_field(row.status);
  return out.str();
}

std::vector<BenchRow> run_bench_sweep(const std::vector<BenchRun>& runs, std::ostream& csv,
                                      unsigned threads) {
  std::vector<BenchRow> rows;
  csv << bench_csv_header() << '\n';
  for (const auto& run : runs) {
    rows.push_back(run_bench(run, threads));
    csv << bench_csv_line(rows.back()) << '\n';
    csv.flush();
  }
  return rows;
}

}  // namespace ado
