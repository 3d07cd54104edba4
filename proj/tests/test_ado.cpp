#include <cmath>
#include <limits>
#include <thread>

#include "doctest.h"
#include "support.hpp"

#include "ado/ado.hpp"
#include "ado/error.hpp"
#include "ado/generators.hpp"
#include "ado/truncated_bfs.hpp"

using namespace ado;

namespace {

struct Reference {
  ref::Matrix d;
  std::vector<Vertex> centers;
  std::vector<std::pair<Vertex, Distance>> pivot;  // (p(v), d(v,p(v)))
  std::vector<std::vector<Vertex>> near_keys;      // C(N(v,cap) + v) minus v
};

// Everything the oracle should store, rebuilt from definitions.
Reference reference_for(const Graph& g, const AdoStructure& ado) {
  Reference r;
  r.d = ref::floyd_warshall(g);
  r.centers.assign(ado.centers().begin(), ado.centers().end());
  const std::size_t n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) r.pivot.push_back(ref::pivot_of(r.d, r.centers, v));
  const double cap = ado.params().neighborhood_cap(n);
  for (Vertex v = 0; v < n; ++v) {
    auto s = ref::prefix_order(r.d, v, cap);
    s.push_back(v);
    std::vector<Vertex> keys;
    for (Vertex x = 0; x < n; ++x) {
      if (x == v) continue;
      for (const Vertex w : s)
        if (r.d[w][x] != ref::kInf && r.d[w][x] < r.pivot[x].second) {
          keys.push_back(x);
          break;
        }
    }
    r.near_keys.push_back(keys);
  }
  return r;
}

Distance reference_query(const Reference& r, Vertex u, Vertex v) {
  if (u == v) return 0;
  auto is_center = [&](Vertex x) { return std::binary_search(r.centers.begin(), r.centers.end(), x); };
  auto near = [&](Vertex a, Vertex b) {
    return std::binary_search(r.near_keys[a].begin(), r.near_keys[a].end(), b);
  };
  if (is_center(u) || is_center(v) || near(u, v) || near(v, u)) return r.d[u][v];
  Distance best = ref::kInf;
  for (const Vertex x : {u, v}) {
    const Vertex y = x == u ? v : u;
    const auto [p, pd] = r.pivot[x];
    if (p != kNoVertex && r.d[p][y] != ref::kInf) best = std::min(best, pd + r.d[p][y]);
  }
  return best;
}

void check_against_reference(const Graph& g, const AdoStructure& ado) {
  const Reference r = reference_for(g, ado);
  const std::size_t n = g.num_vertices();
  std::size_t near_total = 0;
  for (Vertex v = 0; v < n; ++v) {
    REQUIRE(ado.pivot(v) == r.pivot[v].first);
    REQUIRE(ado.pivot_distance(v) == r.pivot[v].second);
    for (const Vertex c : r.centers) REQUIRE(ado.center_distance(v, c) == r.d[v][c]);
    const auto table = ado.near_table(v);
    std::vector<Vertex> keys;
    for (const auto& e : table) {
      keys.push_back(e.vertex);
      REQUIRE(e.distance == r.d[v][e.vertex]);
      REQUIRE(ado.near_distance(v, e.vertex) == e.distance);
    }
    REQUIRE(keys == r.near_keys[v]);
    near_total += table.size();
  }
  CHECK(ado.stored_entry_count() == r.centers.size() * n + near_total);
  double gain = std::numeric_limits<double>::infinity();
  const double cap = ado.params().neighborhood_cap(n);
  for (Vertex v = 0; v < n; ++v)
    if (r.pivot[v].second != 0 && r.pivot[v].second != ref::kInf)
      gain = std::min(gain, double(ref::ecc_trunc(r.d, v, cap)) - double(r.pivot[v].second) + 1.0);
  CHECK(ado.certified_gain() == gain);
  const Stretch s = ado.declared_stretch();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      const QueryResult q = ado.query(u, v);
      REQUIRE(q.estimate == reference_query(r, u, v));
      CHECK(q.lookups <= kQueryLookupBudget);
      const Distance d = r.d[u][v];
      if (d == ref::kInf) {
        CHECK(q.kind == PathKind::unreachable_pair);
        continue;
      }
      CHECK(q.estimate >= d);
      CHECK(static_cast<double>(q.estimate) <= s.bound(d) + 1e-9);
      if (q.kind == PathKind::exact_a || q.kind == PathKind::exact_near || q.kind == PathKind::same_vertex)
        CHECK(q.estimate == d);
    }
}

}  // namespace

TEST_SUITE("ado") {

TEST_CASE("parameter domain") {
  AdoParams p;
  p.alpha = 0.4;
  CHECK_THROWS_AS(p.validate(), Error);
  p.alpha = 1.0 / 3.0;
  CHECK_THROWS_AS(p.validate(), Error);
  p.alpha = 0.1;
  p.c_n = 0.5;
  CHECK_THROWS_AS(p.validate(), Error);
  p.c_n = 1.0;
  p.c_b = 0.9;
  CHECK_THROWS_AS(p.validate(), Error);
  p.c_b = 4.0;
  CHECK_NOTHROW(p.validate());
  CHECK(p.hitting_target(1000) == doctest::Approx(std::pow(1000.0, 2.0 / 3.0 + 0.1)));
  CHECK(p.neighborhood_cap(1000) == doctest::Approx(std::pow(1000.0, 1.0 / 3.0 + 0.2)));
}

TEST_CASE("query identities and range errors") {
  const Graph g = ref::path(10);
  const AdoStructure ado = build_ado(g, AdoParams{});
  for (Vertex x = 0; x < 10; ++x) {
    const auto q = ado.query(x, x);
    CHECK(q.estimate == 0);
    CHECK(q.kind == PathKind::same_vertex);
  }
  try {
    ado.query(0, 10);
    FAIL("expected input error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::input);
  }
}

TEST_CASE("P10 with alpha = 0 stores exact distances") {
  const Graph g = ref::path(10);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    AdoParams p;
    p.seed = seed;
    check_against_reference(g, build_ado(g, p));
  }
}

TEST_CASE("K4 within the declared stretch, exact once the cap covers the graph") {
  const Graph g = ref::complete(4);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    AdoParams p;
    p.seed = seed;
    const AdoStructure ado = build_ado(g, p);
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = 0; v < 4; ++v) {
        const Distance est = ado.query(u, v).estimate;
        CHECK(est >= (u == v ? 0u : 1u));
        CHECK(static_cast<double>(est) <= ado.declared_stretch().bound(u == v ? 0 : 1));
      }
    p.c_n = 3.0;  // cap = 3 * 4^{1/3} >= n - 1
    const AdoStructure wide = build_ado(g, p);
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = 0; v < 4; ++v) CHECK(wide.query(u, v).estimate == (u == v ? 0u : 1u));
  }
}

TEST_CASE("A = V degenerates to the exact table") {
  const Graph g = ref::random_graph(40, 4, 55, 5);
  std::vector<Vertex> all(40);
  for (Vertex v = 0; v < 40; ++v) all[v] = v;
  const AdoStructure ado = build_ado(g, AdoParams{}, all);
  CHECK(ado.stored_entry_count() == 40u * 40u);
  CHECK(ado.declared_stretch().mult == 1.0);
  CHECK(ado.declared_stretch().add == 0.0);
  const auto report = space_report(ado);
  CHECK(report.near_entries == 0);
  CHECK(report.stored_entry_count == 1600);
  const auto fw = ref::floyd_warshall(g);
  for (Vertex u = 0; u < 40; ++u)
    for (Vertex v = 0; v < 40; ++v) CHECK(ado.query(u, v).estimate == fw[u][v]);
}

TEST_CASE("random graphs match the definition-level reference") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Graph g = ref::random_graph(150, 5, 220, seed + 21, seed != 2);
    for (const double alpha : {0.0, 0.1, 0.2}) {
      AdoParams p;
      p.alpha = alpha;
      p.seed = seed;
      check_against_reference(g, build_ado(g, p));
    }
  }
}

TEST_CASE("generic stretch and Claim-1 accounting on n=500") {
  const Graph g = gen_random_bounded_degree(500, 8, 1200, 4);
  AdoParams p;
  p.alpha = 1.0 / 6.0;
  p.seed = 4;
  const AdoStructure ado = build_ado(g, p);
  const double n = 500;
  const auto report = space_report(ado);
  CHECK(report.stored_entry_count == report.a_size * 500 + report.near_entries);
  CHECK(report.stored_entry_count <= report.a_size * 500 + 500 * report.near_max);
  const double literal = report.a_size * n +
                         n * (p.c_b * std::pow(n, 1.0 / 3.0 - p.alpha)) * (p.c_n * std::pow(n, 1.0 / 3.0 + 2 * p.alpha));
  CHECK(static_cast<double>(report.stored_entry_count) <= literal);
  CHECK(static_cast<double>(report.stored_entry_count) <= report.measured_bound);
  CHECK(static_cast<double>(report.stored_entry_count) <= report.nominal_bound);

  // declared additive term follows rad(s2) with s2 from the measured bunch size
  const double s2 = p.neighborhood_cap(500) / (ado.max_bunch_size() + 1.0) - 2.0;
  const Distance expected_rad = s2 >= 1.0 ? rad_trunc(g, s2, 1) : 0;
  CHECK(ado.rad_bound() == expected_rad);
  CHECK(ado.certified_gain() >= expected_rad);
  CHECK(ado.declared_stretch().add == doctest::Approx(1.0 - ado.certified_gain()));
  CHECK(ado.c_r() == doctest::Approx(std::max(0.0, s2) / std::pow(n, 3 * p.alpha)));

  const auto apsp = all_pairs_exact(g, 1);
  for (Vertex u = 0; u < 500; ++u)
    for (Vertex v = 0; v < 500; ++v) {
      const Distance d = apsp.at(u, v);
      const Distance est = ado.query(u, v).estimate;
      REQUIRE(est >= d);
      REQUIRE(static_cast<double>(est) <= std::max<double>(d, 2.0 * d + 1.0 - expected_rad));
    }
}

TEST_CASE("pairs whose bunch meets the truncated ball are answered exactly") {
  const Graph g = gen_random_bounded_degree(300, 5, 600, 8);
  AdoParams p;
  p.alpha = 0.1;
  p.seed = 8;
  const AdoStructure ado = build_ado(g, p);
  const auto fw = ref::floyd_warshall(g);
  const double cap = p.neighborhood_cap(300);
  for (Vertex u = 0; u < 300; u += 3) {
    auto nu = ref::prefix_order(fw, u, cap);
    std::sort(nu.begin(), nu.end());
    for (Vertex v = 0; v < 300; ++v) {
      if (ado.is_center(v) || u == v) continue;
      bool meets = false;
      for (const Vertex w : nu)
        if (fw[v][w] < ado.pivot_distance(v)) meets = true;
      if (meets) CHECK(ado.query(u, v).estimate == fw[u][v]);
    }
  }
}

TEST_CASE("degree-driven build parameters") {
  const Graph g = gen_random_bounded_degree(1024, 5, 1600, 2);
  const AdoStructure ado = build_for_degree(g, 2, 0.25, 1.0, 2);
  CHECK(ado.params().alpha == doctest::Approx(1.0 / 6.0));
  CHECK(ado.params().c_n == doctest::Approx(2.0));
  REQUIRE(ado.degree_info().has_value());
  CHECK(ado.degree_info()->conforming);
  CHECK(ado.degree_info()->degree_limit == doctest::Approx(std::pow(1024.0, 0.25)));
  CHECK(ado.declared_stretch().mult == 2.0);
  CHECK(ado.declared_stretch().add <= -1.0);

  const AdoStructure baseline = build_for_degree(ref::random_graph(60, 3, 80, 1), 1, 1.0, 1.0);
  CHECK(baseline.params().alpha == doctest::Approx(0.0));

  for (const auto& [k, eps, c] : {std::tuple{0u, 0.5, 1.0}, std::tuple{2u, 0.0, 1.0},
                                  std::tuple{2u, 0.6, 1.0}, std::tuple{2u, 0.25, -1.0}, std::tuple{2u, 0.25, 0.5}}) {
    try {
      build_for_degree(g, k, eps, c);
      FAIL("expected input error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::input);
    }
  }
}

TEST_CASE("non-conforming graphs build with only the generic bound") {
  const Graph g = ref::star(80);  // degree 80 far above n^{1/4}
  const AdoStructure ado = build_for_degree(g, 2, 0.25, 1.0);
  REQUIRE(ado.degree_info().has_value());
  CHECK_FALSE(ado.degree_info()->conforming);
  CHECK(ado.declared_stretch().add ==
        doctest::Approx(1.0 - std::max(ado.certified_gain(), double(ado.rad_bound()))));
}

TEST_CASE("certified gain covers undersized caps") {
  // alpha = 0, c_N = 1: cap = n^{1/3} sits below the largest bunch, so no c_R exists
  const Graph g = gen_random_bounded_degree({1000, 6, 1500, 77, true});
  AdoParams p;
  p.seed = 77;
  const AdoStructure ado = build_ado(g, p);
  CHECK(static_cast<double>(ado.max_bunch_size()) + 1.0 > p.neighborhood_cap(1000) / 2.0);
  CHECK(ado.c_r() == 0.0);
  const Stretch s = ado.declared_stretch();
  const auto apsp = all_pairs_exact(g, 1);
  std::size_t beyond_2_1 = 0;
  for (Vertex u = 0; u < 1000; ++u)
    for (Vertex v = 0; v < 1000; ++v) {
      const Distance d = apsp.at(u, v);
      const Distance est = ado.query(u, v).estimate;
      REQUIRE(static_cast<double>(est) <= s.bound(d));
      beyond_2_1 += static_cast<double>(est) > std::max<double>(d, 2.0 * d + 1.0);
    }
  // the plain (2, 1) bound does not hold here; the certified one does
  CHECK(beyond_2_1 > 0);
  CHECK(s.add > 1.0);
}

TEST_CASE("Theorem-1 stretch on conforming graphs, k = 2 and 3") {
  for (const unsigned k : {2u, 3u}) {
    const double eps = 1.0 / (2 * k);
    const std::size_t n = 1024;
    const auto delta = static_cast<std::size_t>(std::floor(std::pow(double(n), 1.0 / k - eps)));
    const Graph g = gen_random_bounded_degree({n, delta, std::min(n * delta / 2, 3 * n / 2), k, delta >= 2});
    const AdoStructure ado = build_for_degree(g, k, eps, 1.0, k);
    REQUIRE(ado.degree_info()->conforming);
    const auto apsp = all_pairs_exact(g, 1);
    std::size_t violations = 0;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        const Distance d = apsp.at(u, v);
        if (!is_finite(d)) continue;
        const Distance est = ado.query(u, v).estimate;
        if (est < d || static_cast<double>(est) > std::max<double>(d, 2.0 * d + 1.0 - k)) ++violations;
      }
    CHECK(violations == 0);
  }
}

TEST_CASE("builds are reproducible and thread-count independent") {
  const Graph g = gen_random_bounded_degree(400, 6, 900, 12);
  AdoParams p;
  p.alpha = 0.15;
  p.seed = 31;
  p.threads = 1;
  const AdoStructure a = build_ado(g, p);
  p.threads = 4;
  const AdoStructure b = build_ado(g, p);
  CHECK(a.stored_entry_count() == b.stored_entry_count());
  CHECK(std::equal(a.centers().begin(), a.centers().end(), b.centers().begin(), b.centers().end()));
  for (Vertex u = 0; u < 400; u += 7)
    for (Vertex v = 0; v < 400; ++v) REQUIRE(a.query(u, v).estimate == b.query(u, v).estimate);
}

TEST_CASE("concurrent queries need no synchronization") {
  const Graph g = gen_random_bounded_degree(300, 5, 600, 13);
  AdoParams p;
  p.alpha = 0.1;
  const AdoStructure ado = build_ado(g, p);
  std::vector<std::vector<Distance>> results(4, std::vector<Distance>(300 * 300));
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] {
      for (Vertex u = 0; u < 300; ++u)
        for (Vertex v = 0; v < 300; ++v) results[t][u * 300 + v] = ado.query(u, v).estimate;
    });
  for (auto& th : pool) th.join();
  for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
}

TEST_CASE("disconnected graphs report unreachable pairs") {
  const Graph g = ref::make(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    AdoParams p;
    p.seed = seed;
    const AdoStructure ado = build_ado(g, p);
    check_against_reference(g, ado);
    CHECK(ado.query(0, 6).estimate == kUnreachable);
    CHECK(ado.query(0, 6).kind == PathKind::unreachable_pair);
  }
}

TEST_CASE("path kind names") {
  CHECK(std::string(to_string(PathKind::exact_a)) == "EXACT_A");
  CHECK(std::string(to_string(PathKind::exact_near)) == "EXACT_NEAR");
  CHECK(std::string(to_string(PathKind::via_pivot)) == "VIA_PIVOT");
  CHECK(std::string(to_string(PathKind::same_vertex)) == "SAME_VERTEX");
  CHECK(std::string(to_string(PathKind::unreachable_pair)) == "UNREACHABLE_PAIR");
}

}
