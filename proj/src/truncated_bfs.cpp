#include "ado/truncated_bfs.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ado/error.hpp"
#include "ado/parallel.hpp"

namespace ado {

std::optional<Distance> TruncatedBfsView::layer_of(Vertex u) const {
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] == u) {
      return depth[i];
    }
  }
  return std::nullopt;
}

std::vector<Vertex> TruncatedBfsView::members() const {
  std::vector<Vertex> out(order);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t truncation_budget(double s) {
  if (!(s >= 0.0)) {
    fail(ErrorKind::input, "truncation budget must be non-negative, got " + std::to_string(s));
  }
  if (s >= 1e18) {
    return static_cast<std::size_t>(1e18);
  }
  return static_cast<std::size_t>(std::floor(s));
}

TruncatedBfsView BfsWorkspace::scan(const Graph& g, Vertex source, std::size_t budget) {
  if (source >= g.num_vertices()) {
    fail(ErrorKind::input, "vertex " + std::to_string(source) + " out of range");
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  TruncatedBfsView view;
  view.source = source;
  stamp_[source] = epoch_;
  layer_.assign(1, source);
  Distance depth = 0;
  while (!layer_.empty() && view.order.size() < budget) {
    ++depth;
    next_.clear();
    for (const Vertex u : layer_) {
      for (const Vertex w : g.neighbors(u)) {
        if (stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          next_.push_back(w);
        }
      }
    }
    if (next_.empty()) {
      break;
    }
    std::sort(next_.begin(), next_.end());
    const std::size_t room = budget - view.order.size();
    const std::size_t take = std::min(room, next_.size());
    for (std::size_t i = 0; i < take; ++i) {
      view.order.push_back(next_[i]);
      view.depth.push_back(depth);
    }
    if (take < next_.size()) {
      break;  // layer `depth` only partially covered
    }
    view.deepest_complete_radius = depth;
    layer_.swap(next_);
  }
  // The budget may end exactly on a layer boundary with the component
  // already exhausted; the radius is then the full eccentricity, which the
  // loop has recorded.
  return view;
}

TruncatedBfsView truncated_bfs(const Graph& g, Vertex v, double s) {
  BfsWorkspace ws(g.num_vertices());
  return ws.scan(g, v, truncation_budget(s));
}

Distance ecc_trunc(const Graph& g, Vertex v, double s) {
  return truncated_bfs(g, v, s).deepest_complete_radius;
}

Distance rad_trunc(const Graph& g, double s, unsigned threads) {
  const std::size_t n = g.num_vertices();
  const std::size_t budget = truncation_budget(s);
  if (n == 0) {
    return 0;
  }
  const unsigned workers = resolve_threads(threads);
  std::vector<BfsWorkspace> spaces(workers, BfsWorkspace(n));
  std::vector<Distance> ecc(n);
  parallel_for(n, workers, [&](unsigned w, std::size_t v) {
    ecc[v] = spaces[w].scan(g, static_cast<Vertex>(v), budget).deepest_complete_radius;
  });
  return *std::min_element(ecc.begin(), ecc.end());
}

std::vector<Vertex> layer_set(const Graph& g, Vertex v, Distance r) {
  const auto row = bfs_full(g, v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (u != v && row.dist[u] == r) {
      out.push_back(u);
    }
  }
  return out;
}

std::vector<Vertex> ball_set(const Graph& g, Vertex v, Distance r) {
  const auto row = bfs_full(g, v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (row.dist[u] != 0 && row.dist[u] <= r) {
      out.push_back(u);
    }
  }
  return out;
}

EccentricityProfile::EccentricityProfile(const Graph& g, unsigned threads)
    : cumulative_(g.num_vertices()) {
  parallel_for(g.num_vertices(), threads, [&](unsigned, std::size_t v) {
    const auto row = bfs_full(g, static_cast<Vertex>(v));
    Distance ecc = 0;
    for (const Distance d : row.dist) {
      if (is_finite(d)) {
        ecc = std::max(ecc, d);
      }
    }
    std::vector<std::size_t> counts(ecc, 0);
    for (const Distance d : row.dist) {
      if (is_finite(d) && d > 0) {
        ++counts[d - 1];
      }
    }
    for (std::size_t r = 1; r < counts.size(); ++r) {
      counts[r] += counts[r - 1];
    }
    cumulative_[v] = std::move(counts);
  });
}

Distance EccentricityProfile::ecc(Vertex v, double s) const {
  const std::size_t budget = truncation_budget(s);
  const auto& c = cumulative_.at(v);
  // number of radii r >= 1 with |T(v, r)| <= budget
  return static_cast<Distance>(std::upper_bound(c.begin(), c.end(), budget) - c.begin());
}

Distance EccentricityProfile::rad(double s) const {
  Distance best = kUnreachable;
  for (Vertex v = 0; v < cumulative_.size(); ++v) {
    best = std::min(best, ecc(v, s));
  }
  return cumulative_.empty() ? 0 : best;
}

Distance EccentricityProfile::eccentricity(Vertex v) const {
  return static_cast<Distance>(cumulative_.at(v).size());
}

Distance EccentricityProfile::diameter() const {
  std::size_t best = 0;
  for (const auto& c : cumulative_) {
    best = std::max(best, c.size());
  }
  return static_cast<Distance>(best);
}

}  // namespace ado
