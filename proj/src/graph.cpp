#include "ado/graph.hpp"

#include <algorithm>
#include <string>

#include "ado/error.hpp"
#include "ado/parallel.hpp"

namespace ado {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n >= kNoVertex) {
    fail(ErrorKind::capacity, "vertex count " + std::to_string(n) + " exceeds 32-bit ids");
  }
  Graph g;
  g.n_ = n;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      fail(ErrorKind::input, "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") out of range for n=" + std::to_string(n));
    }
    if (u == v) {
      fail(ErrorKind::input, "self-loop at vertex " + std::to_string(u));
    }
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  }
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency_[cursor[u]++] = v;
    g.adjacency_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      fail(ErrorKind::input,
           "duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
    }
  }
  g.m_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (const Vertex v : neighbors(u)) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    fail(ErrorKind::input, "vertex " + std::to_string(v) + " out of range for n=" +
                               std::to_string(g.num_vertices()));
  }
}

// Layer-synchronous BFS; each new layer is sorted so discovery order is
// (distance, id). Calls visit(vertex, depth) in that order, source excluded.
template <class Visit>
void layered_bfs(const Graph& g, Vertex source, std::vector<Distance>& dist, Visit&& visit) {
  dist.assign(g.num_vertices(), kUnreachable);
  dist[source] = 0;
  std::vector<Vertex> layer{source};
  std::vector<Vertex> next;
  for (Distance depth = 1; !layer.empty(); ++depth) {
    next.clear();
    for (const Vertex u : layer) {
      for (const Vertex w : g.neighbors(u)) {
        if (dist[w] == kUnreachable) {
          dist[w] = depth;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (const Vertex w : next) {
      visit(w, depth);
    }
    layer.swap(next);
  }
}

}  // namespace

DistanceRow bfs_full(const Graph& g, Vertex source) {
  check_vertex(g, source);
  DistanceRow row;
  row.source = source;
  layered_bfs(g, source, row.dist, [](Vertex, Distance) {});
  return row;
}

std::vector<Vertex> bfs_order(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<Distance> dist;
  std::vector<Vertex> order{source};
  layered_bfs(g, source, dist, [&](Vertex w, Distance) { order.push_back(w); });
  return order;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

DistanceMatrix all_pairs_exact(const Graph& g, unsigned threads) {
  const std::size_t n = g.num_vertices();
  if (n != 0 && n > kAllPairsEntryLimit / n) {
    fail(ErrorKind::capacity, "all-pairs table for n=" + std::to_string(n) +
                                  " exceeds the entry limit");
  }
  DistanceMatrix matrix(n);
  parallel_for(n, threads, [&](unsigned, std::size_t s) {
    const auto row = bfs_full(g, static_cast<Vertex>(s));
    std::copy(row.dist.begin(), row.dist.end(), matrix.row(static_cast<Vertex>(s)).begin());
  });
  return matrix;
}

std::vector<std::size_t> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, kUnset);
  std::vector<Vertex> stack;
  std::size_t next_label = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kUnset) {
      continue;
    }
    label[s] = next_label;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (const Vertex w : g.neighbors(u)) {
        if (label[w] == kUnset) {
          label[w] = next_label;
          stack.push_back(w);
        }
      }
    }
    ++next_label;
  }
  return label;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph sub;
  sub.to_parent.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()), sub.to_parent.end());
  std::vector<Vertex> local(g.num_vertices(), kNoVertex);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    check_vertex(g, sub.to_parent[i]);
    local[sub.to_parent[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    for (const Vertex w : g.neighbors(sub.to_parent[i])) {
      if (local[w] != kNoVertex && local[w] > i) {
        edges.emplace_back(static_cast<Vertex>(i), local[w]);
      }
    }
  }
  sub.graph = Graph::from_edges(sub.to_parent.size(), edges);
  return sub;
}

std::vector<Vertex> component_of(const Graph& g, Vertex v) {
  const auto row = bfs_full(g, v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (is_finite(row.dist[u])) {
      out.push_back(u);
    }
  }
  return out;
}

}  // namespace ado
