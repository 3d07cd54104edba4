#pragma once

#include <cstdint>

#include "ado/gadgets.hpp"
#include "ado/graph.hpp"

namespace ado {

struct RandomGraphOptions {
  std::size_t n = 0;
  std::size_t delta_max = 1;
  std::size_t target_m = 0;
  std::uint64_t seed = 0;
  /// Start from a random degree-capped spanning tree (needs delta_max >= 2, target_m >= n-1).
  bool connected = false;
};

/// Random simple graph with max degree <= delta_max and about target_m edges.
Graph gen_random_bounded_degree(const RandomGraphOptions& options);
Graph gen_random_bounded_degree(std::size_t n, std::size_t delta_max, std::size_t target_m,
                                std::uint64_t seed);

/// Each (set, element) membership drawn independently with probability density.
SetIntersectionInstance gen_random_instance(std::size_t num_sets, std::size_t universe,
                                            double density, std::uint64_t seed);

}  // namespace ado
