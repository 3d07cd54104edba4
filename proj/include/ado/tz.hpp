#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ado/graph.hpp"

namespace ado {

/// Nearest member of a center set A for every vertex.
struct PivotAssignment {
  std::vector<Vertex> a_set;        // ascending
  std::vector<Vertex> pivot;        // kNoVertex when no member of A is reachable
  std::vector<Distance> pivot_dist; // kUnreachable in that case

  bool in_a(Vertex v) const { return pivot[v] == v; }
};

/*
 * Bunches and clusters w.r.t. a pivot assignment:
 *   B(v) = { w : d(v, w) < d(v, p(v)) }   (contains v itself unless v is in A)
 *   C(w) = { v : d(w, v) < d(v, p(v)) }
 * Entries are sorted by vertex id.
 */
struct BunchClusterIndex {
  std::vector<std::vector<VertexDistance>> bunch;
  std::vector<std::vector<VertexDistance>> cluster;

  std::size_t max_bunch_size() const;
  std::size_t max_cluster_size() const;
};

struct HittingSetOptions {
  double target = 1.0;
  double c_b = 4.0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

struct HittingSetResult {
  std::vector<Vertex> a_set;  // ascending
  std::size_t rounds = 0;
  double size_bound = 0.0;  // c_b * n / target
};

/*
 * Randomized center picking: starting from W = V, repeatedly sample each
 * w in W into A with probability min(1, target/|W|), then reset W to the
 * vertices whose cluster or bunch still exceeds c_b*n/target. Stops when W
 * is empty. Exceeding 20*log2(n)+20 rounds raises ErrorKind::non_convergence.
 */
HittingSetResult compute_hitting_set(const Graph& g, const HittingSetOptions& options);

/// Multi-source BFS from A; ties go to the smallest pivot id.
PivotAssignment assign_pivots(const Graph& g, std::span<const Vertex> a_set);

BunchClusterIndex compute_bunches_clusters(const Graph& g, const PivotAssignment& pa,
                                           unsigned threads = 0);

/// C(S): union of the clusters of S, ascending, without distances.
std::vector<Vertex> cluster_of_set(const BunchClusterIndex& idx, std::span<const Vertex> s);

}  // namespace ado
