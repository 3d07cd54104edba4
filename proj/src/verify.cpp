#include "ado/verify.hpp"

#include <algorithm>
#include <sstream>

#include "ado/error.hpp"
#include "ado/parallel.hpp"
#include "ado/rng.hpp"
#include "json.hpp"

namespace ado {

namespace {

struct SourceBatch {
  Vertex source = 0;
  std::vector<Vertex> targets;  // empty with `all` set means every vertex
  bool all = false;
};

void merge_into(StretchAudit& total, const StretchAudit& part, std::size_t max_recorded) {
  total.pairs_checked += part.pairs_checked;
  total.unreachable_skipped += part.unreachable_skipped;
  total.violation_count += part.violation_count;
  for (const auto& v : part.violations) {
    if (total.violations.size() < max_recorded) {
      total.violations.push_back(v);
    }
  }
  total.exact_claim_mismatches += part.exact_claim_mismatches;
  total.max_lookups = std::max(total.max_lookups, part.max_lookups);
  total.worst_multiplicative = std::max(total.worst_multiplicative, part.worst_multiplicative);
  total.worst_additive_at_2x = std::max(total.worst_additive_at_2x, part.worst_additive_at_2x);
  for (const auto& [key, count] : part.histogram) {
    total.histogram[key] += count;
  }
}

}  // namespace

StretchAudit audit_stretch(const Graph& g, const DistanceOracle& oracle, const AuditOptions& o) {
  const std::size_t n = g.num_vertices();
  if (oracle.num_vertices() != n) {
    fail(ErrorKind::input, "oracle and graph disagree on vertex count");
  }
  StretchAudit total;
  total.mult = o.mult;
  total.add = o.add;
  const Stretch bound{o.mult, o.add};

  std::vector<SourceBatch> batches;
  if (n > 0 && o.pair_budget / n >= n) {
    batches.resize(n);
    for (Vertex u = 0; u < n; ++u) {
      batches[u].source = u;
      batches[u].all = true;
    }
  } else if (n > 0) {
    Rng rng(derive_seed(o.seed, "audit-pairs"));
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<std::pair<Vertex, Vertex>> pairs(o.pair_budget);
    for (auto& p : pairs) {
      p.first = pick(rng);
      p.second = pick(rng);
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [u, v] : pairs) {
      if (batches.empty() || batches.back().source != u) {
        batches.push_back({u, {}, false});
      }
      batches.back().targets.push_back(v);
    }
  }

  std::vector<StretchAudit> parts(batches.size());
  parallel_for(batches.size(), o.threads, [&](unsigned, std::size_t bi) {
    const SourceBatch& batch = batches[bi];
    StretchAudit& part = parts[bi];
    const DistanceRow row = bfs_full(g, batch.source);
    auto check = [&](Vertex v) {
      const Vertex u = batch.source;
      const Distance d = row.dist[v];
      if (!is_finite(d)) {
        ++part.unreachable_skipped;
        return;
      }
      const Estimate e = oracle.estimate(u, v);
      const Distance est = o.perturb ? o.perturb(u, v, e.value) : e.value;
      ++part.pairs_checked;
      part.max_lookups = std::max(part.max_lookups, e.lookups);
      if (e.claimed_exact && est != d) {
        ++part.exact_claim_mismatches;
      }
      const bool ok = is_finite(est) && est >= d &&
                      static_cast<double>(est) <= bound.bound(d) + 1e-9;
      if (!ok) {
        ++part.violation_count;
        if (part.violations.size() < o.max_recorded_violations) {
          part.violations.push_back({u, v, d, est});
        }
      }
      if (!is_finite(est)) {
        return;
      }
      const long long diff = static_cast<long long>(est) - static_cast<long long>(d);
      ++part.histogram[diff];
      part.worst_additive_at_2x =
          std::max(part.worst_additive_at_2x, static_cast<long long>(est) - 2ll * d);
      if (d > 0) {
        part.worst_multiplicative =
            std::max(part.worst_multiplicative, static_cast<double>(est) / d);
      }
    };
    if (batch.all) {
      for (Vertex v = 0; v < n; ++v) {
        check(v);
      }
    } else {
      for (const Vertex v : batch.targets) {
        check(v);
      }
    }
  });
  for (const auto& part : parts) {
    merge_into(total, part, o.max_recorded_violations);
  }
  return total;
}

std::string StretchAudit::to_text() const {
  std::ostringstream out;
  out << "stretch audit (" << mult << ", " << add << "): " << (passed() ? "PASS" : "FAIL") << '\n'
      << "  pairs_checked " << pairs_checked << '\n'
      << "  unreachable_skipped " << unreachable_skipped << '\n'
      << "  violations " << violation_count << '\n'
      << "  exact_claim_mismatches " << exact_claim_mismatches << '\n'
      << "  max_lookups " << max_lookups << '\n'
      << "  worst_multiplicative " << worst_multiplicative << '\n'
      << "  worst_additive_at_2x ";
  if (pairs_checked == 0) {
    out << "n/a";
  } else {
    out << worst_additive_at_2x;
  }
  out << '\n';
  for (const auto& [diff, count] : histogram) {
    out << "  excess " << diff << ": " << count << '\n';
  }
  for (const auto& v : violations) {
    out << "  violation u=" << v.u << " v=" << v.v << " d=" << v.d << " estimate="
        << (is_finite(v.estimate) ? std::to_string(v.estimate) : "inf") << '\n';
  }
  return out.str();
}

std::string StretchAudit::to_json() const {
  nlohmann::json j;
  j["mult"] = mult;
  j["add"] = add;
  j["passed"] = passed();
  j["pairs_checked"] = pairs_checked;
  j["unreachable_skipped"] = unreachable_skipped;
  j["violation_count"] = violation_count;
  j["exact_claim_mismatches"] = exact_claim_mismatches;
  j["max_lookups"] = max_lookups;
  j["worst_multiplicative"] = worst_multiplicative;
  j["worst_additive_at_2x"] =
      pairs_checked == 0 ? nlohmann::json(nullptr) : nlohmann::json(worst_additive_at_2x);
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [diff, count] : histogram) {
    hist[std::to_string(diff)] = count;
  }
  j["histogram"] = hist;
  nlohmann::json list = nlohmann::json::array();
  for (const auto& v : violations) {
    list.push_back({{"u", v.u},
                    {"v", v.v},
                    {"d", v.d},
                    {"estimate", is_finite(v.estimate) ? nlohmann::json(v.estimate)
                                                       : nlohmann::json("inf")}});
  }
  j["violations"] = list;
  return j.dump(2);
}

const char* to_string(DistinguisherVerdict verdict) {
  return verdict == DistinguisherVerdict::at_most_a ? "AT_MOST_A" : "AT_LEAST_B";
}

DistinguisherVerdict distinguisher(const DistanceOracle& oracle, Vertex u, Vertex v, Distance a,
                                   Distance b) {
  const Stretch s = oracle.declared_stretch();
  const double threshold = s.bound(a);
  if (!(threshold < static_cast<double>(b))) {
    std::ostringstream msg;
    msg << "declared stretch (" << s.mult << ", " << s.add << ") cannot separate a=" << a
        << " from b=" << b << " (threshold " << threshold << ")";
    fail(ErrorKind::input, msg.str());
  }
  const Estimate e = oracle.estimate(u, v);
  return is_finite(e.value) && static_cast<double>(e.value) <= threshold
             ? DistinguisherVerdict::at_most_a
             : DistinguisherVerdict::at_least_b;
}

BoolMatrix brute_force_intersections(const SetIntersectionInstance& inst) {
  const std::size_t n = inst.num_sets();
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = inst.sets[i];
      const auto& b = inst.sets[j];
      std::size_t x = 0;
      std::size_t y = 0;
      bool hit = false;
      while (x < a.size() && y < b.size() && !hit) {
        if (a[x] == b[y]) {
          hit = true;
        } else if (a[x] < b[y]) {
          ++x;
        } else {
          ++y;
        }
      }
      m.set(i, j, hit);
    }
  }
  return m;
}

OracleBuilder exact_oracle_builder(unsigned threads) {
  return [threads](const Graph& g) -> std::unique_ptr<DistanceOracle> {
    return std::make_unique<ExactOracle>(g, threads);
  };
}

BoolMatrix solve_set_intersection(const SetIntersectionInstance& inst, unsigned k,
                                  const OracleBuilder& builder) {
  const GadgetGraph gadget = gen_merged(inst, k);
  const auto oracle = builder(gadget.graph);
  const std::size_t n = inst.num_sets();
  BoolMatrix answer(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto verdict =
          distinguisher(*oracle, gadget.left_rep[i], gadget.right_rep[j], k, k + 2);
      answer.set(i, j, verdict == DistinguisherVerdict::at_most_a);
    }
  }
  return answer;
}

}  // namespace ado
