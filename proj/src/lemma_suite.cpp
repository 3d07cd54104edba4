#include "ado/lemma_suite.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ado/error.hpp"
#include "ado/rng.hpp"
#include "ado/truncated_bfs.hpp"
#include "json.hpp"

namespace ado {

namespace {

constexpr std::size_t kMaxRecorded = 8;

using VertexSet = std::vector<Vertex>;  // sorted

VertexSet ball_from_row(const DistanceRow& row, Distance r) {
  VertexSet out;
  for (Vertex u = 0; u < row.dist.size(); ++u) {
    if (row.dist[u] != 0 && row.dist[u] <= r) {
      out.push_back(u);
    }
  }
  return out;
}

bool subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool proper_subset(const VertexSet& a, const VertexSet& b) {
  return a.size() < b.size() && subset(a, b);
}

void record(LemmaCheck& check, bool ok, const std::string& tuple) {
  ++check.checked;
  if (!ok) {
    ++check.failures;
    if (check.counterexamples.size() < kMaxRecorded) {
      check.counterexamples.push_back(tuple);
    }
  }
}

// ecc(v, s) evaluated straight from the definition on a full BFS row.
Distance ecc_by_definition(const DistanceRow& row, const VertexSet& prefix) {
  Distance ecc = 0;
  for (const Distance d : row.dist) {
    if (is_finite(d)) {
      ecc = std::max(ecc, d);
    }
  }
  Distance best = 0;
  for (Distance k = 0; k <= ecc; ++k) {
    if (subset(ball_from_row(row, k), prefix)) {
      best = k;
    }
  }
  return best;
}

// BFS tree with parent = smallest-id neighbor one layer closer to the root.
std::vector<Vertex> bfs_parents(const Graph& g, const DistanceRow& row) {
  std::vector<Vertex> parent(g.num_vertices(), kNoVertex);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (!is_finite(row.dist[u]) || row.dist[u] == 0) {
      continue;
    }
    for (const Vertex w : g.neighbors(u)) {
      if (row.dist[w] + 1 == row.dist[u]) {
        parent[u] = w;
        break;
      }
    }
  }
  return parent;
}

VertexSet descendants(const std::vector<Vertex>& parent, Vertex root) {
  std::vector<std::vector<Vertex>> children(parent.size());
  for (Vertex u = 0; u < parent.size(); ++u) {
    if (parent[u] != kNoVertex) {
      children[parent[u]].push_back(u);
    }
  }
  VertexSet out{root};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Vertex c : children[out[i]]) {
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

long long floor_log_half(double s, std::size_t base) {
  if (base < 2 || !(s >= 1.0)) {
    fail(ErrorKind::input, "floor_log_half needs base >= 2 and s >= 1");
  }
  if (s < 2.0) {
    return -1;  // s/2 in [1/2, 1) and base >= 2
  }
  long long t = 0;
  double power = static_cast<double>(base);  // base^{t+1}
  while (2.0 * power <= s) {
    ++t;
    power *= static_cast<double>(base);
  }
  return t;
}

bool LemmaReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const LemmaCheck& c) { return c.failures == 0; });
}

const LemmaCheck& LemmaReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) {
      return c;
    }
  }
  fail(ErrorKind::input, "no lemma check named " + name);
}

std::string LemmaReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << (c.failures == 0 ? "PASS" : "FAIL") << " checked=" << c.checked
        << " failures=" << c.failures;
    if (!c.skipped_reason.empty()) {
      out << " (skipped: " << c.skipped_reason << ")";
    }
    out << '\n';
    for (const auto& ce : c.counterexamples) {
      out << "  counterexample " << ce << '\n';
    }
  }
  return out.str();
}

std::string LemmaReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : checks) {
    j.push_back({{"name", c.name},
                 {"checked", c.checked},
                 {"failures", c.failures},
                 {"passed", c.failures == 0},
                 {"skipped_reason", c.skipped_reason},
                 {"counterexamples", c.counterexamples}});
  }
  return nlohmann::json{{"passed", passed()}, {"checks", j}}.dump(2);
}

LemmaReport check_lemma_suite(const Graph& g, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  LemmaReport report;
  LemmaCheck obs1;
  obs1.name = "observation_1";
  LemmaCheck cor1;
  cor1.name = "corollary_1";
  LemmaCheck prop1;
  prop1.name = "property_1";
  LemmaCheck lem1;
  lem1.name = "lemma_1";
  LemmaCheck lem2;
  lem2.name = "lemma_2";
  LemmaCheck lem5;
  lem5.name = "lemma_5";

  const auto components = connected_components(g);
  const bool connected =
      n > 0 && *std::max_element(components.begin(), components.end()) == 0;
  std::vector<std::size_t> component_size(n, 0);
  for (const auto c : components) {
    ++component_size[c];
  }
  const EccentricityProfile profile(g, 1);
  const Distance diam = profile.diameter();
  const std::size_t delta = max_degree(g);
  std::map<std::size_t, Distance> rad_cache;
  auto rad = [&](double s) {
    const std::size_t key = truncation_budget(s);
    auto it = rad_cache.find(key);
    if (it == rad_cache.end()) {
      it = rad_cache.emplace(key, profile.rad(static_cast<double>(key))).first;
    }
    return it->second;
  };

  if (n < 2 || diam < 1) {
    for (auto* c : {&obs1, &cor1, &prop1, &lem1, &lem2, &lem5}) {
      c->skipped_reason = "graph has no edges";
    }
    report.checks = {obs1, cor1, prop1, lem1, lem2, lem5};
    return report;
  }

  Rng rng(derive_seed(seed, "lemma-suite"));
  auto uniform = [&rng](std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto vertex = [&] { return static_cast<Vertex>(uniform(0, n - 1)); };

  for (std::size_t i = 0; i < samples; ++i) {
    // Observation 1 and Corollary 1 share a tuple.
    {
      const Vertex v = vertex();
      const std::size_t s = uniform(1, n - 1);
      const Distance r = static_cast<Distance>(uniform(1, diam));
      const auto row = bfs_full(g, v);
      const VertexSet t_set = ball_from_row(row, r);
      const VertexSet n_set = truncated_bfs(g, v, static_cast<double>(s)).members();
      const int relations = int(proper_subset(t_set, n_set)) + int(proper_subset(n_set, t_set)) +
                            int(t_set == n_set);
      std::ostringstream tuple;
      tuple << "v=" << v << " s=" << s << " r=" << r << " |T|=" << t_set.size()
            << " |N|=" << n_set.size();
      record(obs1, relations == 1, tuple.str());
      bool implied = true;
      if (t_set.size() < n_set.size()) {
        implied = proper_subset(t_set, n_set);
      } else if (n_set.size() < t_set.size()) {
        implied = proper_subset(n_set, t_set);
      } else {
        implied = t_set == n_set;
      }
      record(cor1, implied, tuple.str());
    }
    // Property 1
    {
      const Vertex v = vertex();
      const std::size_t s = uniform(1, n - 1);
      const auto view = truncated_bfs(g, v, static_cast<double>(s));
      const VertexSet n_set = view.members();
      const auto row = bfs_full(g, v);
      const Distance e = view.deepest_complete_radius;
      bool ok = subset(ball_from_row(row, e), n_set);
      if (s + 1 < component_size[components[v]]) {
        ok = ok && !subset(ball_from_row(row, e + 1), n_set);
      }
      const Distance by_definition = ecc_by_definition(row, n_set);
      ok = ok && by_definition == e;
      std::ostringstream tuple;
      tuple << "v=" << v << " s=" << s << " ecc=" << e << " definition=" << by_definition;
      record(prop1, ok, tuple.str());
    }
    // Lemma 1: alternate random induced subgraphs and BFS-subtree subgraphs,
    // redrawing until v's component in G[V'] has at least two vertices.
    for (std::size_t attempt = 0; attempt < 64; ++attempt) {
      const Vertex v = vertex();
      VertexSet chosen;
      if ((i + attempt) % 2 == 0) {
        std::vector<Vertex> perm(n);
        for (Vertex u = 0; u < n; ++u) {
          perm[u] = u;
        }
        std::shuffle(perm.begin(), perm.end(), rng);
        const std::size_t size = uniform(2, n);
        chosen.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(size));
        if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) {
          chosen[0] = v;
        }
      } else {
        const Vertex root = vertex();
        const auto row = bfs_full(g, root);
        chosen = descendants(bfs_parents(g, row), v);
      }
      // restrict to v's component inside G[chosen]; still an induced subgraph of G
      const auto sub = induced_subgraph(g, chosen);
      const auto local_v = static_cast<Vertex>(
          std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), v) - sub.to_parent.begin());
      const auto comp = component_of(sub.graph, local_v);
      if (comp.size() < 2) {
        continue;
      }
      VertexSet comp_parent;
      for (const Vertex u : comp) {
        comp_parent.push_back(sub.to_parent[u]);
      }
      const auto g_prime = induced_subgraph(g, comp_parent);
      const auto v_prime = static_cast<Vertex>(
          std::lower_bound(g_prime.to_parent.begin(), g_prime.to_parent.end(), v) -
          g_prime.to_parent.begin());
      const std::size_t s = uniform(1, comp_parent.size() - 1);
      const Distance in_g = ecc_trunc(g, v, static_cast<double>(s));
      const Distance in_sub = ecc_trunc(g_prime.graph, v_prime, static_cast<double>(s));
      std::ostringstream tuple;
      tuple << "v=" << v << " |V'|=" << comp_parent.size() << " s=" << s << " ecc_G=" << in_g
            << " ecc_G'=" << in_sub;
      record(lem1, in_g <= in_sub, tuple.str());
      break;
    }
    // Lemma 2
    if (connected && n >= 4) {
      const Vertex v = vertex();
      const std::size_t s1 = uniform(1, (n - 2) / 2);
      const std::size_t s2 = uniform(1, (n - 2) / s1 - 1);
      const std::size_t s12 = s1 * (s2 + 1);
      const Distance lhs = ecc_trunc(g, v, static_cast<double>(s12));
      const Distance first = ecc_trunc(g, v, static_cast<double>(s1));
      const Distance second = rad(static_cast<double>(s2));
      std::ostringstream tuple;
      tuple << "v=" << v << " s1=" << s1 << " s2=" << s2 << " ecc(v,s1(s2+1))=" << lhs
            << " ecc(v,s1)=" << first << " rad(s2)=" << second;
      record(lem2, lhs >= first + second, tuple.str());
    }
    // Lemma 5
    if (connected && delta >= 2) {
      double s = static_cast<double>(uniform(1, n - 1));
      if (i % 2 == 1) {
        s = std::min(s + std::uniform_real_distribution<double>(0.0, 1.0)(rng),
                     static_cast<double>(n) - 1e-6);
      }
      const long long bound = floor_log_half(s, delta);
      const Distance r = rad(s);
      std::ostringstream tuple;
      tuple << "s=" << s << " Delta=" << delta << " rad(s)=" << r << " bound=" << bound;
      record(lem5, static_cast<long long>(r) >= bound, tuple.str());
    }
  }
  if (!connected) {
    lem2.skipped_reason = lem5.skipped_reason = "graph is not connected";
  } else if (n < 4) {
    lem2.skipped_reason = "n < 4 leaves no valid (s1, s2)";
  }
  if (delta < 2) {
    lem5.skipped_reason = "max degree < 2";
  }
  report.checks = {obs1, cor1, prop1, lem1, lem2, lem5};
  return report;
}

}  // namespace ado
