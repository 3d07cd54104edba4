#include "ado/oracle.hpp"

#include "ado/error.hpp"

namespace ado {

ExactOracle::ExactOracle(const Graph& g, unsigned threads) : table_(all_pairs_exact(g, threads)) {}

Estimate ExactOracle::estimate(Vertex u, Vertex v) const {
  if (u >= table_.size() || v >= table_.size()) {
    fail(ErrorKind::input, "vertex out of range");
  }
  return {table_.at(u, v), true, 1};
}

Estimate AdoOracle::estimate(Vertex u, Vertex v) const {
  const QueryResult r = ado_->query(u, v);
  const bool exact = r.kind == PathKind::same_vertex || r.kind == PathKind::exact_a ||
                     r.kind == PathKind::exact_near;
  return {r.estimate, exact, r.lookups};
}

}  // namespace ado
