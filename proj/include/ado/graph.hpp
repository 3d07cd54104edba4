#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ado/types.hpp"

namespace ado {

using Edge = std::pair<Vertex, Vertex>;

/*
 * Immutable undirected unweighted graph in CSR form. Adjacency lists are
 * sorted ascending, which (together with layer-wise id ordering in the BFS
 * routines) makes every traversal order reproducible.
 */
class Graph {
public:
  Graph() = default;

  /// Rejects out-of-range endpoints, self-loops and duplicate pairs.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Each undirected edge once, as (min, max), in ascending order.
  std::vector<Edge> edges() const;

private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

struct DistanceRow {
  Vertex source = 0;
  std::vector<Distance> dist;
};

/// Row-major n x n distance table.
class DistanceMatrix {
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, kUnreachable) {}

  std::size_t size() const noexcept { return n_; }
  Distance at(Vertex u, Vertex v) const { return data_[std::size_t(u) * n_ + v]; }
  std::span<const Distance> row(Vertex u) const {
    return {data_.data() + std::size_t(u) * n_, n_};
  }
  std::span<Distance> row(Vertex u) { return {data_.data() + std::size_t(u) * n_, n_}; }

private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

inline constexpr std::size_t kAllPairsEntryLimit = 100'000'000;

DistanceRow bfs_full(const Graph& g, Vertex source);

/// Source first, then vertices layer by layer, ascending id within a layer.
std::vector<Vertex> bfs_order(const Graph& g, Vertex source);

std::size_t max_degree(const Graph& g);

/// Throws ErrorKind::capacity when n^2 exceeds kAllPairsEntryLimit.
DistanceMatrix all_pairs_exact(const Graph& g, unsigned threads = 0);

/// Component label per vertex; labels are dense and ordered by smallest member.
std::vector<std::size_t> connected_components(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id
};

/// Subgraph induced by `vertices`; local ids follow ascending parent id.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Vertices of v's connected component, ascending.
std::vector<Vertex> component_of(const Graph& g, Vertex v);

}  // namespace ado
