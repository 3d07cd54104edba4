#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ado/graph.hpp"

namespace ado {

/// (mult, add)-stretch: d <= estimate <= max(d, mult*d + add).
struct Stretch {
  double mult = 1.0;
  double add = 0.0;

  double bound(Distance d) const;
};

struct AdoParams {
  double alpha = 0.0;  // in [0, 1/3)
  double c_n = 1.0;    // neighborhood-cap constant, >= 1
  double c_b = 4.0;    // bunch/cluster size constant, >= 1
  std::uint64_t seed = 0;
  unsigned threads = 0;  // execution hint only, not part of the oracle

  void validate() const;
  double hitting_target(std::size_t n) const;   // n^{2/3+alpha}, clamped to [1, n]
  double neighborhood_cap(std::size_t n) const; // c_n * n^{1/3+2alpha}
};

/// Parameters of a degree-driven build (k, eps, c) and whether the graph met them.
struct DegreeBuildInfo {
  unsigned k = 0;
  double eps = 0.0;
  double c = 0.0;
  double degree_limit = 0.0;  // c * n^{1/k - eps}
  std::size_t max_degree = 0;
  bool conforming = false;
};

enum class PathKind : std::uint8_t {
  same_vertex,
  exact_a,
  exact_near,
  via_pivot,
  unreachable_pair,
};

const char* to_string(PathKind kind);

struct QueryResult {
  Distance estimate = kUnreachable;
  PathKind kind = PathKind::unreachable_pair;
  unsigned lookups = 0;  // table accesses performed
};

inline constexpr unsigned kQueryLookupBudget = 8;

struct SpaceReport {
  std::size_t n = 0;
  std::size_t a_size = 0;
  std::size_t near_entries = 0;
  std::size_t stored_entry_count = 0;
  std::size_t near_max = 0;
  double near_mean = 0.0;
  /// |A| n + n * max|C(w)| * (floor(cap) + 1): the space argument with measured sizes.
  double measured_bound = 0.0;
  /// |A| n + n * (c_B n^{1/3-alpha}) * (c_N n^{1/3+2alpha} + 1): same argument, nominal constants.
  double nominal_bound = 0.0;
};

/*
 * Distance oracle over an unweighted graph. Stores, for every vertex v:
 * its pivot p(v) with d(v, p(v)), distances to every center in A, and exact
 * distances to every vertex of C(N(v, cap) + v) (the near table). Queries
 * take a constant number of table lookups and never touch the graph.
 *
 * Immutable once built; concurrent queries need no synchronization.
 */
class AdoStructure {
public:
  AdoStructure() = default;

  std::size_t num_vertices() const noexcept { return n_; }
  const AdoParams& params() const noexcept { return params_; }
  std::span<const Vertex> centers() const noexcept { return a_set_; }
  bool is_center(Vertex v) const { return a_slot_[v] != kNoVertex; }
  Vertex pivot(Vertex v) const;
  Distance pivot_distance(Vertex v) const { return pivot_dist_[v]; }
  Distance center_distance(Vertex v, Vertex center) const;
  std::span<const VertexDistance> near_table(Vertex v) const;
  /// Hash lookup in v's near table.
  std::optional<Distance> near_distance(Vertex v, Vertex u) const;

  std::size_t stored_entry_count() const;

  QueryResult query(Vertex u, Vertex v) const;

  /// Guaranteed stretch of this instance (see build notes in ado.cpp).
  const Stretch& declared_stretch() const noexcept { return declared_; }
  /// Largest c_R with (c_B' n^{1/3-a} + 1)(c_R n^{3a} + 2) <= cap, c_B' measured; 0 if none.
  double c_r() const noexcept { return c_r_; }
  /// rad(c_R n^{3 alpha}) as used in the generic stretch bound (0 when c_R n^{3a} < 1).
  Distance rad_bound() const noexcept { return rad_bound_; }
  /// min over non-center v with a pivot of ecc(v, cap) - d(v, p(v)) + 1; +inf if no such v.
  double certified_gain() const noexcept { return certified_gain_; }
  std::size_t max_bunch_size() const noexcept { return max_bunch_; }
  std::size_t max_cluster_size() const noexcept { return max_cluster_; }
  std::size_t hitting_set_rounds() const noexcept { return hitting_rounds_; }
  const std::optional<DegreeBuildInfo>& degree_info() const noexcept { return degree_info_; }

  friend AdoStructure build_ado(const Graph&, const AdoParams&,
                                std::optional<std::span<const Vertex>>);
  friend AdoStructure build_for_degree(const Graph&, unsigned, double, double, std::uint64_t,
                                       unsigned);
  friend void serialize_ado(std::ostream&, const AdoStructure&);
  friend AdoStructure deserialize_ado(std::istream&);

private:
  void set_near_tables(std::vector<std::vector<VertexDistance>> tables);
  void set_declared_stretch();
  const Distance* a_row(Vertex v) const { return a_dist_.data() + std::size_t(v) * a_set_.size(); }

  AdoParams params_;
  std::size_t n_ = 0;
  std::vector<Vertex> a_set_;
  std::vector<Vertex> a_slot_;      // vertex -> index in a_set_, or kNoVertex
  std::vector<Vertex> pivot_slot_;  // vertex -> index of p(v) in a_set_, or kNoVertex
  std::vector<Distance> pivot_dist_;
  std::vector<Distance> a_dist_;    // n x |A|, row-major

  // near tables: sorted entries plus one open-addressing hash per vertex
  std::vector<std::size_t> near_offsets_{0};
  std::vector<VertexDistance> near_entries_;
  std::vector<std::size_t> hash_offsets_{0};
  std::vector<std::uint8_t> hash_bits_;
  std::vector<VertexDistance> hash_slots_;

  Stretch declared_;
  double c_r_ = 0.0;
  double rad_argument_ = 0.0;
  Distance rad_bound_ = 0;
  double certified_gain_ = 0.0;
  std::size_t max_bunch_ = 0;
  std::size_t max_cluster_ = 0;
  std::size_t hitting_rounds_ = 0;
  std::optional<DegreeBuildInfo> degree_info_;
};

/// Builds the oracle. `centers` overrides the randomized hitting set (tests, A = V).
AdoStructure build_ado(const Graph& g, const AdoParams& params,
                       std::optional<std::span<const Vertex>> centers = std::nullopt);

/*
 * Degree-driven instantiation: alpha = (1 - k*eps)/3, c_N = 2 c^k. On graphs
 * with max degree <= c n^{1/k - eps} the declared stretch is (2, 1-k); other
 * graphs still build, with degree_info()->conforming == false and only the
 * generic bound declared.
 */
AdoStructure build_for_degree(const Graph& g, unsigned k, double eps, double c,
                              std::uint64_t seed = 0, unsigned threads = 0);

SpaceReport space_report(const AdoStructure& ado);
std::string format_space_report(const SpaceReport& report);

/*
 * Binary format, all integers little-endian:
 *   "ADO1" | u32 n | u32 |A| | u32 pivot[n] (0xFFFFFFFF = none)
 *   | u32 a_dist[n][|A|] (columns in ascending center order)
 *   | per vertex: u32 count, count x (u32 vertex, u32 distance) sorted by vertex
 *   | metadata trailer (parameters and declared stretch, see serialize.cpp)
 * Malformed or truncated input raises ErrorKind::format.
 */
void serialize_ado(std::ostream& out, const AdoStructure& ado);
AdoStructure deserialize_ado(std::istream& in);
void save_ado(const std::string& path, const AdoStructure& ado);
AdoStructure load_ado(const std::string& path);

}  // namespace ado
