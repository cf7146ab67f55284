#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "hermin/functions.hpp"
#include "hermin/oracles.hpp"
#include "hermin/validate.hpp"

namespace hermin {

/// |S| <= k.
class CardinalityFamily final : public HereditaryFamily {
 public:
  CardinalityFamily(GroundSet universe, int k);

  bool contains(const Subset& s) const override { return s.count() <= k_; }
  int k() const { return k_; }

 private:
  int k_;
};

/// Total weight of S at most the budget (the classic normalization is 1).
class KnapsackFamily final : public HereditaryFamily {
 public:
  KnapsackFamily(GroundSet universe, std::vector<Value> weights, Value budget = Value(1));

  bool contains(const Subset& s) const override;

 private:
  std::vector<Value> weights_;
  Value budget_;
};

/// Independent sets of the uniform matroid U(n, k); identical membership to
/// CardinalityFamily but kept as a matroid kind.
class UniformMatroidFamily final : public HereditaryFamily {
 public:
  UniformMatroidFamily(GroundSet universe, int k);

  bool contains(const Subset& s) const override { return s.count() <= k_; }

 private:
  int k_;
};

/// Blocks partition the universe; S is independent when it meets block i in
/// at most capacity[i] elements.
class PartitionMatroidFamily final : public HereditaryFamily {
 public:
  PartitionMatroidFamily(GroundSet universe, std::vector<Subset> blocks,
                         std::vector<int> capacities);

  bool contains(const Subset& s) const override;

 private:
  std::vector<Subset> blocks_;
  std::vector<int> capacities_;
};

/// Ground elements are the edges of a graph, in list order; S is independent
/// when the corresponding edge set is acyclic.
class GraphicMatroidFamily final : public HereditaryFamily {
 public:
  /// graph.vertex_count vertices; universe size must equal graph.edges size.
  GraphicMatroidFamily(GroundSet universe, WeightedGraph graph);

  bool contains(const Subset& s) const override;

 private:
  WeightedGraph graph_;
};

/// S is in the family when no obstruction is a subset of S. Encodes
/// hereditary graph families and matching families through their minimal
/// obstructions.
class ForbiddenSubsetsFamily final : public HereditaryFamily {
 public:
  ForbiddenSubsetsFamily(GroundSet universe, std::vector<Subset> obstructions);

  bool contains(const Subset& s) const override;
  const std::vector<Subset>& obstructions() const { return obstructions_; }

 private:
  std::vector<Subset> obstructions_;
};

/// Sets avoiding one designated element. With this family the hereditary
/// solver reduces to unconstrained symmetric minimization.
class ExcludeElementFamily final : public HereditaryFamily {
 public:
  ExcludeElementFamily(GroundSet universe, int excluded);

  bool contains(const Subset& s) const override { return !s.test(excluded_); }
  int excluded() const { return excluded_; }

 private:
  int excluded_;
};

class IntersectionFamily final : public HereditaryFamily {
 public:
  IntersectionFamily(GroundSet universe,
                     std::vector<std::shared_ptr<const HereditaryFamily>> parts);

  bool contains(const Subset& s) const override;

 private:
  std::vector<std::shared_ptr<const HereditaryFamily>> parts_;
};

/// Elements whose expansion is not in the family. The expander maps a current
/// element id to the set of original elements contracted into it.
std::vector<int> loops_of(const HereditaryFamily& family, std::span<const int> elements,
                          const std::function<Subset(int)>& expander);

/// Hereditary family of complements of a union-closed family:
/// contains(S) iff (V \ S) is in the union-closed family. Throws
/// DegenerateFamilyError when V itself is not (the complement family would
/// miss the empty set).
std::shared_ptr<HereditaryFamily> complement_family(
    std::function<bool(const Subset&)> union_closed_contains, GroundSet universe);

/// Matroid exchange axiom by enumeration: independent A, B with |A| < |B|
/// admit x in B \ A with A + x independent.
ValidationResult validate_matroid_exchange(const HereditaryFamily& family,
                                           ValidationOptions opts = {});

}  // namespace hermin
