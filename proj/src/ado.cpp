#include "ado/ado.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "ado/error.hpp"
#include "ado/parallel.hpp"
#include "ado/truncated_bfs.hpp"
#include "ado/tz.hpp"

namespace ado {

double Stretch::bound(Distance d) const {
  const double dd = static_cast<double>(d);
  return std::max(dd, mult * dd + add);
}

void AdoParams::validate() const {
  if (!(alpha >= 0.0 && alpha < 1.0 / 3.0)) {
    fail(ErrorKind::input, "alpha must lie in [0, 1/3), got " + std::to_string(alpha));
  }
  if (!(c_n >= 1.0) || !std::isfinite(c_n)) {
    fail(ErrorKind::input, "c_N must be a finite value >= 1, got " + std::to_string(c_n));
  }
  if (!(c_b >= 1.0) || !std::isfinite(c_b)) {
    fail(ErrorKind::input, "c_B must be a finite value >= 1, got " + std::to_string(c_b));
  }
}

double AdoParams::hitting_target(std::size_t n) const {
  const double nn = static_cast<double>(n);
  return std::clamp(std::pow(nn, 2.0 / 3.0 + alpha), 1.0, std::max(1.0, nn));
}

double AdoParams::neighborhood_cap(std::size_t n) const {
  return c_n * std::pow(static_cast<double>(n), 1.0 / 3.0 + 2.0 * alpha);
}

const char* to_string(PathKind kind) {
  switch (kind) {
    case PathKind::same_vertex: return "SAME_VERTEX";
    case PathKind::exact_a: return "EXACT_A";
    case PathKind::exact_near: return "EXACT_NEAR";
    case PathKind::via_pivot: return "VIA_PIVOT";
    case PathKind::unreachable_pair: return "UNREACHABLE_PAIR";
  }
  return "?";
}

Vertex AdoStructure::pivot(Vertex v) const {
  const Vertex slot = pivot_slot_[v];
  return slot == kNoVertex ? kNoVertex : a_set_[slot];
}

Distance AdoStructure::center_distance(Vertex v, Vertex center) const {
  const Vertex slot = a_slot_.at(center);
  if (slot == kNoVertex) {
    fail(ErrorKind::input, std::to_string(center) + " is not a center");
  }
  return a_row(v)[slot];
}

std::span<const VertexDistance> AdoStructure::near_table(Vertex v) const {
  return {near_entries_.data() + near_offsets_[v], near_entries_.data() + near_offsets_[v + 1]};
}

namespace {

inline std::size_t hash_slot(Vertex key, unsigned bits) {
  return static_cast<std::size_t>((key * 0x9E3779B1u) >> (32 - bits));
}

}  // namespace

std::optional<Distance> AdoStructure::near_distance(Vertex v, Vertex u) const {
  const std::size_t begin = hash_offsets_[v];
  const std::size_t capacity = hash_offsets_[v + 1] - begin;
  if (capacity == 0) {
    return std::nullopt;
  }
  const unsigned bits = hash_bits_[v];
  const std::size_t mask = capacity - 1;
  for (std::size_t i = hash_slot(u, bits);; i = (i + 1) & mask) {
    const auto& slot = hash_slots_[begin + i];
    if (slot.vertex == u) {
      return slot.distance;
    }
    if (slot.vertex == kNoVertex) {
      return std::nullopt;
    }
  }
}

void AdoStructure::set_near_tables(std::vector<std::vector<VertexDistance>> tables) {
  near_offsets_.assign(n_ + 1, 0);
  hash_offsets_.assign(n_ + 1, 0);
  hash_bits_.assign(n_, 0);
  for (std::size_t v = 0; v < n_; ++v) {
    const std::size_t size = tables[v].size();
    near_offsets_[v + 1] = near_offsets_[v] + size;
    std::size_t capacity = 0;
    if (size > 0) {
      capacity = std::bit_ceil(std::max<std::size_t>(2, 2 * size));
      hash_bits_[v] = static_cast<std::uint8_t>(std::countr_zero(capacity));
    }
    hash_offsets_[v + 1] = hash_offsets_[v] + capacity;
  }
  near_entries_.clear();
  near_entries_.reserve(near_offsets_[n_]);
  hash_slots_.assign(hash_offsets_[n_], VertexDistance{kNoVertex, kUnreachable});
  for (std::size_t v = 0; v < n_; ++v) {
    const std::size_t begin = hash_offsets_[v];
    const std::size_t mask = hash_offsets_[v + 1] - begin - 1;
    for (const auto& entry : tables[v]) {
      near_entries_.push_back(entry);
      std::size_t i = hash_slot(entry.vertex, hash_bits_[v]);
      while (hash_slots_[begin + i].vertex != kNoVertex) {
        i = (i + 1) & mask;
      }
      hash_slots_[begin + i] = entry;
    }
    std::vector<VertexDistance>().swap(tables[v]);
  }
}

std::size_t AdoStructure::stored_entry_count() const {
  return a_set_.size() * n_ + near_entries_.size();
}

QueryResult AdoStructure::query(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) {
    fail(ErrorKind::input, "query (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") out of range for n=" + std::to_string(n_));
  }
  QueryResult r;
  if (u == v) {
    r.estimate = 0;
    r.kind = PathKind::same_vertex;
    return r;
  }
  auto finish = [&r](Distance d, PathKind kind) {
    r.estimate = d;
    r.kind = is_finite(d) ? kind : PathKind::unreachable_pair;
    return r;
  };

  const Vertex su = a_slot_[u];
  const Vertex sv = a_slot_[v];
  r.lookups += 2;
  if (su != kNoVertex) {
    ++r.lookups;
    return finish(a_row(v)[su], PathKind::exact_a);
  }
  if (sv != kNoVertex) {
    ++r.lookups;
    return finish(a_row(u)[sv], PathKind::exact_a);
  }

  ++r.lookups;
  if (const auto d = near_distance(u, v)) {
    return finish(*d, PathKind::exact_near);
  }
  ++r.lookups;
  if (const auto d = near_distance(v, u)) {
    return finish(*d, PathKind::exact_near);
  }

  // min{ d(u,p(u)) + d(p(u),v), d(v,p(v)) + d(p(v),u) }
  Distance best = kUnreachable;
  ++r.lookups;
  if (const Vertex pu = pivot_slot_[u]; pu != kNoVertex) {
    ++r.lookups;
    best = std::min(best, add_distances(pivot_dist_[u], a_row(v)[pu]));
  }
  ++r.lookups;
  if (const Vertex pv = pivot_slot_[v]; pv != kNoVertex) {
    ++r.lookups;
    best = std::min(best, add_distances(pivot_dist_[v], a_row(u)[pv]));
  }
  return finish(best, PathKind::via_pivot);
}

/*
 * Declared stretch. With A = V (or no vertex that can take the pivot route)
 * every answer is exact. Otherwise a non-exact answer for u, v obeys
 *   est <= d + 2 min(d(u,p(u)), d - ecc(u, cap)) <= 2d + 1 - gain,
 * where gain is the certified minimum of ecc(u, cap) - d(u,p(u)) + 1. The
 * generic term rad(s2), s2 = cap/(max|B| + 1) - 2, and the degree-driven k
 * are folded in as stated lower bounds on that gain.
 */
void AdoStructure::set_declared_stretch() {
  if (a_set_.size() == n_ || std::isinf(certified_gain_)) {
    declared_ = {1.0, 0.0};
    return;
  }
  double gain = certified_gain_;
  if (rad_argument_ >= 1.0) {
    gain = std::max(gain, static_cast<double>(rad_bound_));
  }
  if (degree_info_ && degree_info_->conforming) {
    gain = std::max(gain, static_cast<double>(degree_info_->k));
  }
  declared_ = {2.0, 1.0 - gain};
}

AdoStructure build_ado(const Graph& g, const AdoParams& params,
                       std::optional<std::span<const Vertex>> centers) {
  params.validate();
  const std::size_t n = g.num_vertices();
  const unsigned workers = resolve_threads(params.threads);

  AdoStructure ado;
  ado.params_ = params;
  ado.n_ = n;
  if (n == 0) {
    ado.declared_ = {1.0, 0.0};
    return ado;
  }

  if (centers) {
    ado.a_set_.assign(centers->begin(), centers->end());
    std::sort(ado.a_set_.begin(), ado.a_set_.end());
    ado.a_set_.erase(std::unique(ado.a_set_.begin(), ado.a_set_.end()), ado.a_set_.end());
  } else {
    HittingSetOptions hs;
    hs.target = params.hitting_target(n);
    hs.c_b = params.c_b;
    hs.seed = params.seed;
    hs.threads = workers;
    auto result = compute_hitting_set(g, hs);
    ado.a_set_ = std::move(result.a_set);
    ado.hitting_rounds_ = result.rounds;
  }
  const PivotAssignment pa = assign_pivots(g, ado.a_set_);
  const BunchClusterIndex idx = compute_bunches_clusters(g, pa, workers);
  ado.max_bunch_ = idx.max_bunch_size();
  ado.max_cluster_ = idx.max_cluster_size();

  const std::size_t a_size = ado.a_set_.size();
  ado.a_slot_.assign(n, kNoVertex);
  for (std::size_t i = 0; i < a_size; ++i) {
    ado.a_slot_[ado.a_set_[i]] = static_cast<Vertex>(i);
  }
  ado.pivot_slot_.assign(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (pa.pivot[v] != kNoVertex) {
      ado.pivot_slot_[v] = ado.a_slot_[pa.pivot[v]];
    }
  }
  ado.pivot_dist_ = pa.pivot_dist;
  ado.a_dist_.assign(n * a_size, kUnreachable);

  const std::size_t cap = truncation_budget(params.neighborhood_cap(n));
  std::vector<std::vector<VertexDistance>> tables(n);
  std::vector<double> slack(n, std::numeric_limits<double>::infinity());
  std::vector<BfsWorkspace> spaces(workers, BfsWorkspace(n));
  std::vector<std::vector<std::uint8_t>> marks(workers, std::vector<std::uint8_t>(n, 0));
  parallel_for(n, workers, [&](unsigned w, std::size_t vi) {
    const auto v = static_cast<Vertex>(vi);
    auto& mark = marks[w];
    std::vector<Vertex> keys;
    auto absorb_cluster = [&](Vertex center) {
      for (const auto& e : idx.cluster[center]) {
        if (e.vertex != v && !mark[e.vertex]) {
          mark[e.vertex] = 1;
          keys.push_back(e.vertex);
        }
      }
    };
    absorb_cluster(v);
    const TruncatedBfsView view = spaces[w].scan(g, v, cap);
    for (const Vertex x : view.order) {
      absorb_cluster(x);
    }
    if (pa.pivot_dist[v] != 0 && is_finite(pa.pivot_dist[v])) {
      slack[vi] = static_cast<double>(view.deepest_complete_radius) -
                  static_cast<double>(pa.pivot_dist[v]) + 1.0;
    }
    std::sort(keys.begin(), keys.end());

    const DistanceRow row = bfs_full(g, v);
    Distance* a_row = ado.a_dist_.data() + vi * a_size;
    for (std::size_t i = 0; i < a_size; ++i) {
      a_row[i] = row.dist[ado.a_set_[i]];
    }
    auto& table = tables[vi];
    table.reserve(keys.size());
    for (const Vertex u : keys) {
      table.push_back({u, row.dist[u]});
      mark[u] = 0;
    }
  });
  ado.set_near_tables(std::move(tables));
  ado.certified_gain_ = *std::min_element(slack.begin(), slack.end());

  const double nn = static_cast<double>(n);
  const double s2 = params.neighborhood_cap(n) / (static_cast<double>(ado.max_bunch_) + 1.0) - 2.0;
  ado.c_r_ = std::max(0.0, s2 / std::pow(nn, 3.0 * params.alpha));
  ado.rad_argument_ = std::max(0.0, s2);
  ado.rad_bound_ = s2 >= 1.0 ? rad_trunc(g, s2, workers) : 0;
  ado.set_declared_stretch();
  return ado;
}

AdoStructure build_for_degree(const Graph& g, unsigned k, double eps, double c,
                              std::uint64_t seed, unsigned threads) {
  if (k == 0) {
    fail(ErrorKind::input, "k must be a positive integer");
  }
  if (!(eps > 0.0 && eps <= 1.0 / k + 1e-12)) {
    fail(ErrorKind::input, "eps must lie in (0, 1/k]");
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    fail(ErrorKind::input, "c must be positive");
  }
  AdoParams params;
  params.alpha = std::max(0.0, (1.0 - k * eps) / 3.0);
  params.c_n = 2.0 * std::pow(c, static_cast<double>(k));
  params.seed = seed;
  params.threads = threads;
  if (params.c_n < 1.0) {
    fail(ErrorKind::input, "c too small: c_N = 2 c^k must be >= 1");
  }

  DegreeBuildInfo info;
  info.k = k;
  info.eps = eps;
  info.c = c;
  info.degree_limit =
      c * std::pow(static_cast<double>(g.num_vertices()), 1.0 / static_cast<double>(k) - eps);
  info.max_degree = max_degree(g);
  info.conforming = static_cast<double>(info.max_degree) <= info.degree_limit + 1e-9;

  AdoStructure ado = build_ado(g, params);
  ado.degree_info_ = info;
  ado.set_declared_stretch();
  return ado;
}

SpaceReport space_report(const AdoStructure& ado) {
  SpaceReport r;
  r.n = ado.num_vertices();
  r.a_size = ado.centers().size();
  for (Vertex v = 0; v < r.n; ++v) {
    const std::size_t size = ado.near_table(v).size();
    r.near_entries += size;
    r.near_max = std::max(r.near_max, size);
  }
  r.stored_entry_count = ado.stored_entry_count();
  r.near_mean = r.n == 0 ? 0.0 : static_cast<double>(r.near_entries) / static_cast<double>(r.n);

  const double nn = static_cast<double>(r.n);
  const auto& p = ado.params();
  const double a_part = static_cast<double>(r.a_size) * nn;
  const double cap = p.neighborhood_cap(r.n);
  r.measured_bound =
      a_part + nn * static_cast<double>(ado.max_cluster_size()) * (std::floor(cap) + 1.0);
  r.nominal_bound =
      a_part + nn * (p.c_b * std::pow(nn, 1.0 / 3.0 - p.alpha)) * (cap + 1.0);
  return r;
}

std::string format_space_report(const SpaceReport& r) {
  std::ostringstream out;
  out << "n=" << r.n << " |A|=" << r.a_size << " near_entries=" << r.near_entries
      << " stored_entry_count=" << r.stored_entry_count << " near_max=" << r.near_max
      << " near_mean=" << r.near_mean << " measured_bound=" << r.measured_bound
      << " nominal_bound=" << r.nominal_bound;
  return out.str();
}

}  // namespace ado
