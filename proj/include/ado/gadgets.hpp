#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ado/graph.hpp"

namespace ado {

/// Sets S_0..S_{N-1} over the universe [0, X). Each set sorted and duplicate-free.
struct SetIntersectionInstance {
  std::size_t universe = 0;
  std::vector<std::vector<std::uint32_t>> sets;

  std::size_t num_sets() const noexcept { return sets.size(); }
  bool contains(std::size_t set, std::uint32_t element) const;
  /// Throws ErrorKind::input when an invariant is violated.
  void validate() const;
};

enum class GadgetKind : std::uint8_t { butterfly, gx, merged, split };

const char* to_string(GadgetKind kind);

/*
 * A layered graph plus the map that locates the set representatives.
 * left_rep[i] is v_i (first layer) and right_rep[j] is u_j (last layer) for
 * every caller-visible index; padding sets added to reach b^k are hidden.
 * layer_of counts positions along the layering, so every edge joins
 * consecutive positions; after splitting the first and last layers sit at
 * 0 and 2t+k-2.
 */
struct GadgetGraph {
  Graph graph;
  GadgetKind kind = GadgetKind::butterfly;
  unsigned k = 0;
  std::size_t b = 0;         // digit base, N_padded = b^k
  std::size_t n_padded = 0;  // vertices per first/last layer
  std::size_t t = 1;         // split factor
  std::vector<Vertex> left_rep;
  std::vector<Vertex> right_rep;
  std::vector<std::uint32_t> layer_of;

  std::uint32_t last_layer() const { return static_cast<std::uint32_t>(2 * t + k - 2); }
};

/// Exact integer k-th root of N if one exists.
std::optional<std::size_t> integer_root(std::size_t value, unsigned k);

/// Smallest b >= 2 with b^k >= N.
std::size_t padded_base(std::size_t num_sets, unsigned k);

/// k base-b digits of `index`, most significant first (digit t is digits[t-1]).
std::vector<std::uint32_t> digit_label(std::size_t index, std::size_t b, unsigned k);

/*
 * Butterfly infrastructure graph: layers 0..k of N = b^k vertices; layer t-1
 * index x is adjacent to layer t index y iff their labels agree except
 * possibly on digit t. Vertex id = layer * N + index.
 */
GadgetGraph gen_butterfly(std::size_t num_vertices_per_layer, unsigned k);

/// Butterfly minus every edge touching v_i or u_i for sets S_i not containing x.
GadgetGraph gen_gx(const SetIntersectionInstance& inst, unsigned k, std::uint32_t x);

/*
 * Union of G_x over all x with the inner layers kept disjoint per x and the
 * first/last layers merged. Ids: first layer [0, N), inner copy (x, layer l,
 * index a) at N + ((x(k-1) + l - 1) N + a), last layer after that.
 */
GadgetGraph gen_merged(const SetIntersectionInstance& inst, unsigned k);

/// Split factor ceil((k + c) / (2 eps)).
std::size_t split_factor(unsigned k, double eps, double c);

/// Merged gadget with every edge at the first or last layer replaced by a path of t edges.
GadgetGraph gen_split(const SetIntersectionInstance& inst, unsigned k, double eps, double c);

// Instance text format: `N X`, then N lines of space-separated elements
// (an empty line is an empty set).
SetIntersectionInstance read_instance(std::istream& in);
SetIntersectionInstance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const SetIntersectionInstance& inst);
void write_instance_file(const std::string& path, const SetIntersectionInstance& inst);

/// Sidecar lines `i v_id u_id`.
void write_rep_map(std::ostream& out, const GadgetGraph& gadget);
void write_rep_map_file(const std::string& path, const GadgetGraph& gadget);

}  // namespace ado
