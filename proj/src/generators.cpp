#include "ado/generators.hpp"

#include <algorithm>
#include <unordered_set>

#include "ado/error.hpp"
#include "ado/rng.hpp"

namespace ado {

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) {
    std::swap(u, v);
  }
  return (std::uint64_t(u) << 32) | v;
}

}  // namespace

Graph gen_random_bounded_degree(const RandomGraphOptions& o) {
  const std::size_t n = o.n;
  if (o.delta_max < 1) {
    fail(ErrorKind::input, "delta_max must be >= 1");
  }
  const std::size_t max_pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (o.target_m > n * o.delta_max / 2 || o.target_m > max_pairs) {
    fail(ErrorKind::input, "target_m=" + std::to_string(o.target_m) +
                               " infeasible for n=" + std::to_string(n) +
                               ", delta_max=" + std::to_string(o.delta_max));
  }
  if (o.connected && n > 1 && (o.target_m + 1 < n || (n > 2 && o.delta_max < 2))) {
    fail(ErrorKind::input, "connected graph needs target_m >= n-1 and delta_max >= 2");
  }

  Rng rng(derive_seed(o.seed, "random-graph"));
  std::vector<std::size_t> degree(n, 0);
  std::unordered_set<std::uint64_t> present;
  std::vector<Edge> edges;
  edges.reserve(o.target_m);
  auto add = [&](Vertex u, Vertex v) {
    present.insert(edge_key(u, v));
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  };

  if (o.connected && n > 1) {
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) {
      perm[v] = v;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vertex> open{perm[0]};  // tree vertices with spare degree
    for (std::size_t i = 1; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
      const std::size_t j = pick(rng);
      const Vertex parent = open[j];
      add(parent, perm[i]);
      if (degree[parent] == o.delta_max) {
        open[j] = open.back();
        open.pop_back();
      }
      if (degree[perm[i]] < o.delta_max) {
        open.push_back(perm[i]);
      }
    }
  }

  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] < o.delta_max) {
      pool.push_back(v);
    }
  }
  const std::size_t max_attempts = 50 * o.target_m + 1000;
  for (std::size_t attempt = 0; edges.size() < o.target_m && pool.size() >= 2 && attempt < max_attempts;
       ++attempt) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    const Vertex u = pool[i];
    const Vertex v = pool[j];
    if (u == v || present.contains(edge_key(u, v))) {
      continue;
    }
    add(u, v);
    // remove saturated endpoints, larger index first so the smaller stays valid
    for (const std::size_t k : {std::max(i, j), std::min(i, j)}) {
      if (degree[pool[k]] == o.delta_max) {
        pool[k] = pool.back();
        pool.pop_back();
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_random_bounded_degree(std::size_t n, std::size_t delta_max, std::size_t target_m,
                                std::uint64_t seed) {
  return gen_random_bounded_degree(RandomGraphOptions{n, delta_max, target_m, seed, false});
}

SetIntersectionInstance gen_random_instance(std::size_t num_sets, std::size_t universe,
                                            double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    fail(ErrorKind::input, "density must lie in [0, 1]");
  }
  Rng rng(derive_seed(seed, "instance"));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  SetIntersectionInstance inst;
  inst.universe = universe;
  inst.sets.resize(num_sets);
  for (auto& set : inst.sets) {
    for (std::size_t x = 0; x < universe; ++x) {
      if (coin(rng) < density) {
        set.push_back(static_cast<std::uint32_t>(x));
      }
    }
  }
  return inst;
}

}  // namespace ado
