#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ado/graph.hpp"

namespace ado {

/*
 * The first s vertices met by a BFS from `source` (source excluded), in
 * (distance, id) order, together with the truncated eccentricity: the
 * largest radius whose whole ball fits in the prefix.
 *
 * Isolated sources have radius 0. When the prefix swallows the whole
 * component the radius is the ordinary eccentricity within the component.
 */
struct TruncatedBfsView {
  Vertex source = 0;
  std::vector<Vertex> order;
  std::vector<Distance> depth;  // depth[i] = d(source, order[i])
  Distance deepest_complete_radius = 0;

  std::optional<Distance> layer_of(Vertex u) const;
  /// Members of the prefix, ascending.
  std::vector<Vertex> members() const;
};

/// Effective prefix length for a real budget: floor(s), negatives rejected.
std::size_t truncation_budget(double s);

/// Reusable scratch space for repeated truncated scans on one graph.
class BfsWorkspace {
public:
  explicit BfsWorkspace(std::size_t n) : stamp_(n, 0) {}

  TruncatedBfsView scan(const Graph& g, Vertex source, std::size_t budget);

private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> layer_;
  std::vector<Vertex> next_;
};

TruncatedBfsView truncated_bfs(const Graph& g, Vertex v, double s);
Distance ecc_trunc(const Graph& g, Vertex v, double s);
Distance rad_trunc(const Graph& g, double s, unsigned threads = 0);

/// L(v, r): vertices at distance exactly r (r >= 1), ascending.
std::vector<Vertex> layer_set(const Graph& g, Vertex v, Distance r);
/// T(v, r): vertices at distance in [1, r], ascending.
std::vector<Vertex> ball_set(const Graph& g, Vertex v, Distance r);

/*
 * Per-vertex cumulative layer sizes, |T(v, r)| for every r. Answers
 * ecc(v, s) by counting: T(v, r) fits in N(v, s) exactly when
 * |T(v, r)| <= s, so rad(s) costs O(n log ecc) after n BFS runs.
 */
class EccentricityProfile {
public:
  explicit EccentricityProfile(const Graph& g, unsigned threads = 0);

  Distance ecc(Vertex v, double s) const;
  Distance rad(double s) const;
  /// Plain eccentricity within v's component.
  Distance eccentricity(Vertex v) const;
  /// Largest finite eccentricity (diameter of the largest-diameter component).
  Distance diameter() const;

private:
  std::vector<std::vector<std::size_t>> cumulative_;  // cumulative_[v][r-1] = |T(v, r)|
};

}  // namespace ado
