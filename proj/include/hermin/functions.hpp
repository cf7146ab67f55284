#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hermin/oracles.hpp"
#include "hermin/validate.hpp"

namespace hermin {

/// Undirected weighted graph. Parallel edges are allowed; their weights add.
struct WeightedGraph {
  struct Edge {
    int u;
    int v;
    Value weight;
  };

  int vertex_count = 0;
  std::vector<Edge> edges;

  /// Throws std::invalid_argument on self-loops, bad endpoints, or negative
  /// weights.
  void validate() const;
};

struct WeightedHypergraph {
  struct Hyperedge {
    Subset members;  // at least 2 elements
    Value weight;
  };

  int vertex_count = 0;
  std::vector<Hyperedge> hyperedges;

  void validate() const;
};

/// Complete value table over a small universe; index is the subset bitmask.
struct ExplicitTable {
  int universe_size = 0;  // at most 20
  std::vector<Value> values;

  void validate() const;
};

/// f(S) = total weight of edges with exactly one endpoint in S.
std::shared_ptr<SetFunction> graph_cut(WeightedGraph graph,
                                       std::optional<GroundSet> universe = std::nullopt);

/// f(S) = total weight of hyperedges straddling S.
std::shared_ptr<SetFunction> hypergraph_cut(WeightedHypergraph hypergraph,
                                            std::optional<GroundSet> universe = std::nullopt);

std::shared_ptr<SetFunction> table_function(ExplicitTable table,
                                            std::optional<GroundSet> universe = std::nullopt);

/// g(S) = f(S) + sum of weights over S.
std::shared_ptr<SetFunction> add_modular(std::shared_ptr<const SetFunction> f,
                                         std::vector<Value> weights);

/// Symmetric, monotone, consistent map on pairs of disjoint nonempty sets.
/// Each query bumps a counter, the oracle-complexity currency for the
/// max-back route.
class DistanceMap {
 public:
  explicit DistanceMap(GroundSet universe) : universe_(std::move(universe)) {}
  virtual ~DistanceMap() = default;

  /// Requires a, b nonempty and disjoint.
  Value between(const Subset& a, const Subset& b) const;

  const GroundSet& universe() const { return universe_; }
  std::uint64_t queries() const { return queries_; }
  void reset_queries() const { queries_ = 0; }

 private:
  virtual Value eval_pair(const Subset& a, const Subset& b) const = 0;

  GroundSet universe_;
  mutable std::uint64_t queries_ = 0;
};

/// d(A,B) = max over u in A, v in B of the shortest-path distance. All-pairs
/// distances are computed once at construction; queries never re-run graph
/// search. Throws on disconnected graphs (infinite distances unsupported).
std::shared_ptr<DistanceMap> shortest_path_distance_map(
    const WeightedGraph& graph, std::optional<GroundSet> universe = std::nullopt);

/// d(A,B) = (f(A) + f(B) - f(A|B)) / 2 for disjoint A, B. Symmetric, monotone
/// and consistent whenever f is symmetric crossing submodular.
std::shared_ptr<DistanceMap> map_from_function(std::shared_ptr<const SetFunction> f);

/// Distance map backed by an arbitrary callable (validation targets, tests).
class CallbackDistanceMap final : public DistanceMap {
 public:
  CallbackDistanceMap(GroundSet universe,
                      std::function<Value(const Subset&, const Subset&)> fn)
      : DistanceMap(std::move(universe)), fn_(std::move(fn)) {}

 private:
  Value eval_pair(const Subset& a, const Subset& b) const override { return fn_(a, b); }

  std::function<Value(const Subset&, const Subset&)> fn_;
};

/// f(S) = d(S, V \ S), with f(empty) = f(V) = 0 (d is undefined on empty
/// arguments; the solver only evaluates nonempty proper subsets).
std::shared_ptr<SetFunction> boundary_function(std::shared_ptr<const DistanceMap> d);

struct DistanceMapValidation {
  bool valid = true;
  std::string detail;  // description of the first violation

  explicit operator bool() const { return valid; }
};

/// Checks symmetry, monotonicity and consistency over all pairwise-disjoint
/// nonempty pairs and triples.
DistanceMapValidation validate_distance_map(const DistanceMap& d, ValidationOptions opts = {});

}  // namespace hermin
