#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hermin/contraction.hpp"
#include "hermin/families.hpp"
#include "hermin/functions.hpp"

namespace hermin {

/// Exhaustive ground truth for the constrained minimization problem. The
/// scan shares nothing with the solver path: separate subset iteration,
/// separate minimum tracking.
struct BruteForceReport {
  Value min_value;
  std::vector<Subset> minimizers;          // all nonempty feasible argmins, ascending by mask
  std::vector<Subset> minimal_minimizers;  // the inclusionwise-minimal ones
};

/// Scans all nonempty members of the family; universe capped at 20 elements.
/// Throws InfeasibleError when the family has no nonempty member.
BruteForceReport brute_force(const SetFunction& f, const HereditaryFamily& family);

/// Checks the pendant-pair contract by enumeration over the current elements:
/// f'({u}) must be minimum among all current sets containing u but not t.
bool certify_pendant_pair(const ContractedSystem& sys, int t, int u);

enum class FunctionClass {
  GraphCut,
  HypergraphCut,
  CutPlusModular,  // posimodular, to be solved through the antirestriction
};

enum class FamilyClass {
  Cardinality,
  Knapsack,
  PartitionMatroid,
  ForbiddenSubsets,
  Intersection,  // cardinality and knapsack combined
};

/// A seeded random instance: the built oracles plus the plain data they were
/// built from (so campaigns can serialize what they solved).
struct RandomInstance {
  FunctionClass function_class;
  FamilyClass family_class;
  GroundSet universe;

  WeightedGraph graph;                // GraphCut / CutPlusModular
  WeightedHypergraph hypergraph;      // HypergraphCut
  std::vector<Value> modular_weights; // CutPlusModular

  int cardinality_k = 0;                  // Cardinality / Intersection
  std::vector<Value> knapsack_weights;    // Knapsack / Intersection
  Value knapsack_budget;                  // Knapsack / Intersection
  std::vector<Subset> partition_blocks;   // PartitionMatroid
  std::vector<int> partition_capacities;  // PartitionMatroid
  std::vector<Subset> obstructions;       // ForbiddenSubsets

  std::shared_ptr<SetFunction> function;
  std::shared_ptr<HereditaryFamily> family;
};

/// Deterministic in the seed. The family is guaranteed nontrivial (V outside)
/// with at least one feasible singleton.
RandomInstance random_instance(std::uint64_t seed, int n, FunctionClass function_class,
                               FamilyClass family_class);

/// Random weighted graph with about `edge_target` edges (possibly
/// disconnected); used directly by benchmarks.
WeightedGraph random_weighted_graph(std::uint64_t seed, int n, int edge_target,
                                    bool integer_weights = false);

/// Random tree plus extra edges, so shortest-path distance maps are total.
WeightedGraph random_connected_weighted_graph(std::uint64_t seed, int n);

}  // namespace hermin
