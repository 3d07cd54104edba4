#include "ado/tz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ado/error.hpp"
#include "ado/parallel.hpp"
#include "ado/rng.hpp"

namespace ado {

std::size_t BunchClusterIndex::max_bunch_size() const {
  std::size_t best = 0;
  for (const auto& b : bunch) {
    best = std::max(best, b.size());
  }
  return best;
}

std::size_t BunchClusterIndex::max_cluster_size() const {
  std::size_t best = 0;
  for (const auto& c : cluster) {
    best = std::max(best, c.size());
  }
  return best;
}

PivotAssignment assign_pivots(const Graph& g, std::span<const Vertex> a_set) {
  if (a_set.empty()) {
    fail(ErrorKind::input, "assign_pivots: empty center set");
  }
  const std::size_t n = g.num_vertices();
  PivotAssignment pa;
  pa.a_set.assign(a_set.begin(), a_set.end());
  std::sort(pa.a_set.begin(), pa.a_set.end());
  pa.a_set.erase(std::unique(pa.a_set.begin(), pa.a_set.end()), pa.a_set.end());
  pa.pivot.assign(n, kNoVertex);
  pa.pivot_dist.assign(n, kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (const Vertex a : pa.a_set) {
    if (a >= n) {
      fail(ErrorKind::input, "center " + std::to_string(a) + " out of range");
    }
    pa.pivot[a] = a;
    pa.pivot_dist[a] = 0;
    queue.push_back(a);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const Distance next = pa.pivot_dist[u] + 1;
    for (const Vertex w : g.neighbors(u)) {
      if (pa.pivot_dist[w] == kUnreachable) {
        pa.pivot_dist[w] = next;
        pa.pivot[w] = pa.pivot[u];
        queue.push_back(w);
      } else if (pa.pivot_dist[w] == next && pa.pivot[u] < pa.pivot[w]) {
        pa.pivot[w] = pa.pivot[u];
      }
    }
  }
  return pa;
}

namespace {

// B(v) by a BFS that stops before depth pivot_dist[v]. Result sorted by id.
class BunchScanner {
public:
  explicit BunchScanner(std::size_t n) : seen_(n, 0) {}

  void scan(const Graph& g, Vertex v, Distance limit, std::vector<VertexDistance>& out) {
    out.clear();
    if (limit == 0) {
      return;
    }
    if (++epoch_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      epoch_ = 1;
    }
    seen_[v] = epoch_;
    out.push_back({v, 0});
    for (std::size_t head = 0; head < out.size(); ++head) {
      const auto [u, du] = out[head];
      if (du + 1 >= limit) {
        continue;
      }
      for (const Vertex w : g.neighbors(u)) {
        if (seen_[w] != epoch_) {
          seen_[w] = epoch_;
          out.push_back({w, du + 1});
        }
      }
    }
    std::sort(out.begin(), out.end(),
              [](const VertexDistance& a, const VertexDistance& b) { return a.vertex < b.vertex; });
  }

private:
  std::vector<std::uint32_t> seen_;
  std::uint32_t epoch_ = 0;
};

}  // namespace

BunchClusterIndex compute_bunches_clusters(const Graph& g, const PivotAssignment& pa,
                                           unsigned threads) {
  const std::size_t n = g.num_vertices();
  BunchClusterIndex idx;
  idx.bunch.resize(n);
  idx.cluster.resize(n);
  const unsigned workers = resolve_threads(threads);
  std::vector<BunchScanner> scanners(workers, BunchScanner(n));
  parallel_for(n, workers, [&](unsigned w, std::size_t v) {
    scanners[w].scan(g, static_cast<Vertex>(v), pa.pivot_dist[v], idx.bunch[v]);
  });
  // Transpose; iterating v ascending keeps each cluster sorted by id.
  std::vector<std::size_t> sizes(n, 0);
  for (const auto& b : idx.bunch) {
    for (const auto& e : b) {
      ++sizes[e.vertex];
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    idx.cluster[w].reserve(sizes[w]);
  }
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& [w, d] : idx.bunch[v]) {
      idx.cluster[w].push_back({v, d});
    }
  }
  return idx;
}

std::vector<Vertex> cluster_of_set(const BunchClusterIndex& idx, std::span<const Vertex> s) {
  std::vector<Vertex> out;
  for (const Vertex w : s) {
    for (const auto& e : idx.cluster.at(w)) {
      out.push_back(e.vertex);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HittingSetResult compute_hitting_set(const Graph& g, const HittingSetOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n == 0) {
    return {};
  }
  if (!(options.target >= 1.0) || options.target > static_cast<double>(n)) {
    fail(ErrorKind::input, "hitting-set target must lie in [1, n]");
  }
  if (!(options.c_b >= 1.0)) {
    fail(ErrorKind::input, "hitting-set constant c_B must be >= 1");
  }
  HittingSetResult result;
  result.size_bound = options.c_b * static_cast<double>(n) / options.target;
  const auto max_rounds =
      static_cast<std::size_t>(20.0 * std::log2(static_cast<double>(n)) + 20.0);

  Rng rng(derive_seed(options.seed, "hitting-set"));
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<char> in_a(n, 0);
  std::vector<Vertex> w_set(n);
  for (Vertex v = 0; v < n; ++v) {
    w_set[v] = v;
  }
  std::size_t worst_cluster = 0;
  std::size_t worst_bunch = 0;
  while (!w_set.empty()) {
    if (result.rounds == max_rounds) {
      std::ostringstream msg;
      msg << "hitting set did not converge after " << max_rounds << " rounds: |W|="
          << w_set.size() << ", max cluster=" << worst_cluster << ", max bunch=" << worst_bunch
          << ", bound=" << result.size_bound;
      fail(ErrorKind::non_convergence, msg.str());
    }
    ++result.rounds;
    const double p = std::min(1.0, options.target / static_cast<double>(w_set.size()));
    for (const Vertex w : w_set) {
      if (coin(rng) < p) {
        in_a[w] = 1;
      }
    }
    std::vector<Vertex> a_set;
    for (Vertex v = 0; v < n; ++v) {
      if (in_a[v]) {
        a_set.push_back(v);
      }
    }
    if (a_set.empty()) {
      continue;
    }
    const auto pa = assign_pivots(g, a_set);
    const auto idx = compute_bunches_clusters(g, pa, options.threads);
    w_set.clear();
    worst_cluster = idx.max_cluster_size();
    worst_bunch = idx.max_bunch_size();
    for (Vertex v = 0; v < n; ++v) {
      if (static_cast<double>(idx.cluster[v].size()) > result.size_bound ||
          static_cast<double>(idx.bunch[v].size()) > result.size_bound) {
        w_set.push_back(v);
      }
    }
    if (w_set.empty()) {
      result.a_set = std::move(a_set);
    }
  }
  return result;
}

}  // namespace ado
