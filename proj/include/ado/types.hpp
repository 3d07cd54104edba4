#pragma once

#include <cstdint>
#include <limits>

namespace ado {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
/// Compares greater than every finite hop count.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

constexpr bool is_finite(Distance d) noexcept { return d != kUnreachable; }

/// Saturating sum: anything plus kUnreachable is kUnreachable.
constexpr Distance add_distances(Distance a, Distance b) noexcept {
  if (!is_finite(a) || !is_finite(b)) {
    return kUnreachable;
  }
  return a + b;
}

struct VertexDistance {
  Vertex vertex;
  Distance distance;

  friend bool operator==(const VertexDistance&, const VertexDistance&) = default;
};

}  // namespace ado
