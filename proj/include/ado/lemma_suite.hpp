#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ado/graph.hpp"

namespace ado {

struct LemmaCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few, verbatim tuples
  std::string skipped_reason;                // non-empty when the graph is outside the domain
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;

  bool passed() const;
  const LemmaCheck& find(const std::string& name) const;
  std::string to_text() const;
  std::string to_json() const;
};

/*
 * Samples `samples` random tuples per property and evaluates each literally:
 *   observation_1  exactly one of T(v,r) < N(v,s), N(v,s) < T(v,r), equal
 *   corollary_1    the cardinality order of T(v,r), N(v,s) implies the set relation
 *   property_1     T(v, ecc(v,s)) within N(v,s); T(v, ecc(v,s)+1) not, when s < |comp|-1;
 *                  ecc(v,s) also matches the definition evaluated from a full BFS
 *   lemma_1        ecc_G(v,s) <= ecc_G'(v,s) for induced connected G' containing v
 *   lemma_2        ecc(v, s1(s2+1)) >= ecc(v, s1) + rad(s2) when s1(s2+1) < n-1
 *   lemma_5        rad(s) >= floor(log_Delta(s/2)) for 1 <= s < n
 * Lemmas 2 and 5 are skipped on disconnected graphs.
 */
LemmaReport check_lemma_suite(const Graph& g, std::size_t samples, std::uint64_t seed);

/// floor(log_base(s/2)) computed exactly for base >= 2 and s >= 1.
long long floor_log_half(double s, std::size_t base);

}  // namespace ado
