#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ado/gadgets.hpp"
#include "ado/oracle.hpp"

namespace ado {

struct StretchViolation {
  Vertex u = 0;
  Vertex v = 0;
  Distance d = 0;
  Distance estimate = 0;
};

/*
 * Result of checking d <= estimate <= max(d, mult*d + add) against BFS
 * ground truth. Pairs with unreachable true distance are skipped. Also
 * tracks whether answers the oracle claims to be exact really are, and the
 * largest per-query lookup count seen.
 */
struct StretchAudit {
  double mult = 1.0;
  double add = 0.0;
  std::size_t pairs_checked = 0;
  std::size_t unreachable_skipped = 0;
  std::size_t violation_count = 0;
  std::vector<StretchViolation> violations;  // first few, in (u, v) order
  std::size_t exact_claim_mismatches = 0;
  unsigned max_lookups = 0;
  double worst_multiplicative = 1.0;  // max estimate/d over d > 0
  long long worst_additive_at_2x = std::numeric_limits<long long>::min();  // max estimate - 2d
  std::map<long long, std::size_t> histogram;  // estimate - d -> count

  bool passed() const { return violation_count == 0 && exact_claim_mismatches == 0; }
  std::string to_text() const;
  std::string to_json() const;
};

struct AuditOptions {
  double mult = 1.0;
  double add = 0.0;
  /// Ordered pairs to sample; at least n^2 means every ordered pair.
  std::size_t pair_budget = std::numeric_limits<std::size_t>::max();
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::size_t max_recorded_violations = 64;
  /// Test hook: rewrites each estimate before it is checked.
  std::function<Distance(Vertex, Vertex, Distance)> perturb;
};

StretchAudit audit_stretch(const Graph& g, const DistanceOracle& oracle, const AuditOptions& options);

enum class DistinguisherVerdict : std::uint8_t { at_most_a, at_least_b };

const char* to_string(DistinguisherVerdict verdict);

/*
 * (a, b)-distinguisher on top of an oracle's declared stretch: answers
 * at_most_a iff estimate <= max(a, mult*a + add). Requires that threshold to
 * be < b, otherwise the oracle cannot separate the two cases
 * (ErrorKind::input).
 */
DistinguisherVerdict distinguisher(const DistanceOracle& oracle, Vertex u, Vertex v, Distance a,
                                   Distance b);

class BoolMatrix {
public:
  BoolMatrix() = default;
  explicit BoolMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool at(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool value) { bits_[i * n_ + j] = value ? 1 : 0; }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Pairwise S_i and S_j intersect, by sorted merge.
BoolMatrix brute_force_intersections(const SetIntersectionInstance& inst);

using OracleBuilder = std::function<std::unique_ptr<DistanceOracle>(const Graph&)>;

/// Default builder: exact all-pairs oracle.
OracleBuilder exact_oracle_builder(unsigned threads = 0);

/// Builds the merged gadget, then answers every (i, j) with a (k, k+2)-distinguisher.
BoolMatrix solve_set_intersection(const SetIntersectionInstance& inst, unsigned k,
                                  const OracleBuilder& builder = exact_oracle_builder());

}  // namespace ado
