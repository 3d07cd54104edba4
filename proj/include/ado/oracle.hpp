#pragma once

#include <memory>

#include "ado/ado.hpp"
#include "ado/graph.hpp"

namespace ado {

struct Estimate {
  Distance value = kUnreachable;
  bool claimed_exact = false;
  unsigned lookups = 0;
};

/// Anything that answers distance estimates under a declared stretch.
class DistanceOracle {
public:
  virtual ~DistanceOracle() = default;

  virtual std::size_t num_vertices() const = 0;
  virtual Estimate estimate(Vertex u, Vertex v) const = 0;
  virtual Stretch declared_stretch() const = 0;
};

/// Exact distances from a precomputed all-pairs table.
class ExactOracle final : public DistanceOracle {
public:
  explicit ExactOracle(const Graph& g, unsigned threads = 0);

  std::size_t num_vertices() const override { return table_.size(); }
  Estimate estimate(Vertex u, Vertex v) const override;
  Stretch declared_stretch() const override { return {1.0, 0.0}; }

private:
  DistanceMatrix table_;
};

class AdoOracle final : public DistanceOracle {
public:
  explicit AdoOracle(std::shared_ptr<const AdoStructure> ado) : ado_(std::move(ado)) {}
  explicit AdoOracle(AdoStructure ado)
      : ado_(std::make_shared<const AdoStructure>(std::move(ado))) {}

  std::size_t num_vertices() const override { return ado_->num_vertices(); }
  Estimate estimate(Vertex u, Vertex v) const override;
  Stretch declared_stretch() const override { return ado_->declared_stretch(); }

  const AdoStructure& structure() const { return *ado_; }

private:
  std::shared_ptr<const AdoStructure> ado_;
};

}  // namespace ado
