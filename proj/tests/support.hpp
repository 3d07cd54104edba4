#pragma once

// Reference implementations for tests. Deliberately naive and independent of
// the library's BFS code: distances come from Floyd-Warshall over the edge list.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ado/graph.hpp"

namespace ref {

using ado::Distance;
using ado::Edge;
using ado::Graph;
using ado::Vertex;

inline constexpr Distance kInf = ado::kUnreachable;

inline Graph make(std::size_t n, std::vector<Edge> edges) {
  return Graph::from_edges(n, edges);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return make(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make(n, e);
}

// K_{1,leaves} with center 0
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make(leaves + 1, e);
}

// Random simple graph, degree-capped, built by rejection; independent of the library generator.
inline Graph random_graph(std::size_t n, std::size_t max_deg, std::size_t edges, std::uint64_t seed,
                          bool connected = true) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed * 2654435761u + 17));
  std::vector<std::size_t> deg(n, 0);
  std::set<Edge> chosen;
  auto try_add = [&](Vertex a, Vertex b) {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    if (deg[a] >= max_deg || deg[b] >= max_deg || chosen.count({a, b})) return false;
    chosen.insert({a, b});
    ++deg[a];
    ++deg[b];
    return true;
  };
  if (connected && n > 1) {
    // random tree: attach each vertex to an earlier one with spare degree
    std::vector<Vertex> perm(n);
    for (Vertex i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
      for (int attempt = 0;; ++attempt) {
        const Vertex parent = perm[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
        if (try_add(perm[i], parent)) break;
        if (attempt > 1000) {
          for (std::size_t j = 0; j < i; ++j)
            if (try_add(perm[i], perm[j])) break;
          break;
        }
      }
    }
  }
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (std::size_t attempt = 0; chosen.size() < edges && attempt < 100 * edges + 100; ++attempt) {
    try_add(pick(rng), pick(rng));
  }
  return make(n, std::vector<Edge>(chosen.begin(), chosen.end()));
}

using Matrix = std::vector<std::vector<Distance>>;

inline Matrix floyd_warshall(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Matrix d(n, std::vector<Distance>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][k] == kInf) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (d[k][j] != kInf && d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    }
  return d;
}

// N(v, s) by sorting every other reachable vertex on (distance, id).
inline std::vector<Vertex> prefix_order(const Matrix& d, Vertex v, double s) {
  std::vector<Vertex> others;
  for (Vertex u = 0; u < d.size(); ++u)
    if (u != v && d[v][u] != kInf) others.push_back(u);
  std::sort(others.begin(), others.end(), [&](Vertex a, Vertex b) {
    return d[v][a] != d[v][b] ? d[v][a] < d[v][b] : a < b;
  });
  others.resize(std::min<std::size_t>(others.size(), static_cast<std::size_t>(s)));
  return others;
}

inline std::vector<Vertex> ball(const Matrix& d, Vertex v, Distance r) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < d.size(); ++u)
    if (d[v][u] != kInf && d[v][u] > 0 && d[v][u] <= r) out.push_back(u);
  return out;
}

// ecc(v, s): largest k in [0, ecc(v)] with T(v, k) inside N(v, s).
inline Distance ecc_trunc(const Matrix& d, Vertex v, double s) {
  auto members = prefix_order(d, v, s);
  std::sort(members.begin(), members.end());
  Distance ecc = 0;
  for (const Distance x : d[v])
    if (x != kInf) ecc = std::max(ecc, x);
  Distance best = 0;
  for (Distance k = 0; k <= ecc; ++k) {
    const auto t = ball(d, v, k);
    if (std::includes(members.begin(), members.end(), t.begin(), t.end())) best = k;
  }
  return best;
}

inline Distance rad_trunc(const Matrix& d, double s) {
  Distance best = kInf;
  for (Vertex v = 0; v < d.size(); ++v) best = std::min(best, ecc_trunc(d, v, s));
  return best;
}

// Nearest member of A, smallest id on ties.
inline std::pair<Vertex, Distance> pivot_of(const Matrix& d, const std::vector<Vertex>& a, Vertex v) {
  Vertex best = ado::kNoVertex;
  Distance bd = kInf;
  for (const Vertex c : a)
    if (d[v][c] < bd || (d[v][c] == bd && bd != kInf && c < best)) {
      best = c;
      bd = d[v][c];
    }
  return {best, bd};
}

}  // namespace ref
