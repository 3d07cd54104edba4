#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ado {

/*
 * One benchmark run: a random bounded-degree graph and one oracle build.
 * mode "theorem" uses (k, eps, c); mode "raw" uses (alpha, c_n, c_b).
 * delta_max defaults to floor(c n^{1/k - eps}) in theorem mode and 4 in raw mode.
 */
struct BenchRun {
  std::size_t n = 0;
  std::optional<std::size_t> delta_max;
  double edge_factor = 1.5;  // target edges = edge_factor * n, capped by the degree budget
  std::string mode = "theorem";
  unsigned k = 2;
  double eps = 0.25;
  double c = 1.0;
  double alpha = 0.0;
  double c_n = 1.0;
  double c_b = 4.0;
  std::uint64_t seed = 0;
  std::size_t audit_pairs = 20000;  // 0 disables the stretch audit
};

struct BenchRow {
  BenchRun run;
  std::size_t delta = 0;  // measured max degree
  std::size_t m = 0;
  double alpha = 0.0;     // resolved
  double c_n = 0.0;
  double build_ms = 0.0;
  std::size_t a_size = 0;
  std::size_t stored_entry_count = 0;
  double entries_per_n2 = 0.0;
  double worst_multiplicative = 0.0;
  long long worst_additive_at_2x = 0;
  std::size_t violations = 0;
  unsigned max_query_lookups = 0;
  std::string status = "ok";
};

/*
 * Config: {"runs": [ {...}, ... ]}. Each entry takes the BenchRun field names;
 * "n" may be a list, expanding to one run per value. An empty file, {} or an
 * empty list is a valid config with no runs.
 */
std::vector<BenchRun> parse_bench_config(const std::string& text);
std::vector<BenchRun> read_bench_config_file(const std::string& path);

/// Never throws for per-run failures; they land in row.status.
BenchRow run_bench(const BenchRun& run, unsigned threads = 0);

std::string bench_csv_header();
std::string bench_csv_line(const BenchRow& row);

/// Runs every entry in order, writing the header and one line per run.
std::vector<BenchRow> run_bench_sweep(const std::vector<BenchRun>& runs, std::ostream& csv,
                                      unsigned threads = 0);

}  // namespace ado
