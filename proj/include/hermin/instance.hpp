#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hermin/families.hpp"
#include "hermin/functions.hpp"
#include "hermin/reference.hpp"

namespace hermin {

/// Plain-data description of a problem instance, mirroring the JSON schema
/// one-to-one. Parsing and serialization live in instance_io; this layer only
/// knows how to build oracles.

struct GraphCutSpec {
  WeightedGraph graph;
};

struct HypergraphCutSpec {
  WeightedHypergraph hypergraph;
};

struct TableSpec {
  ExplicitTable table;
};

struct FunctionSpec;

struct ModularOffsetSpec {
  std::unique_ptr<FunctionSpec> base;
  std::vector<Value> weights;
};

struct DistanceBoundarySpec {
  WeightedGraph graph;
};

struct FunctionSpec {
  std::variant<GraphCutSpec, HypergraphCutSpec, TableSpec, ModularOffsetSpec,
               DistanceBoundarySpec>
      data;
};

struct CardinalityFamilySpec {
  int k = 0;
};

struct KnapsackFamilySpec {
  std::vector<Value> weights;
  Value budget;
};

struct UniformMatroidSpec {
  int k = 0;
};

struct PartitionMatroidSpec {
  std::vector<std::vector<int>> blocks;
  std::vector<int> capacities;
};

struct GraphicMatroidSpec {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // ground element i is edge i
};

struct MatroidFamilySpec {
  std::variant<UniformMatroidSpec, PartitionMatroidSpec, GraphicMatroidSpec> kind;
};

struct ForbiddenFamilySpec {
  std::vector<std::vector<int>> obstructions;
};

struct ExcludeFamilySpec {
  int element = 0;
};

struct FamilySpec;

struct IntersectionFamilySpec {
  std::vector<FamilySpec> parts;
};

struct FamilySpec {
  std::variant<CardinalityFamilySpec, KnapsackFamilySpec, MatroidFamilySpec,
               ForbiddenFamilySpec, ExcludeFamilySpec, IntersectionFamilySpec>
      data;
};

/// Optional reference answer carried by fixture files; `verify` cross-checks
/// it against both the solver and the brute-force scan.
struct ExpectedSpec {
  std::optional<Value> value;
  std::optional<std::vector<std::vector<std::string>>> sets;  // labels
};

struct BuiltInstance {
  GroundSet universe;
  std::shared_ptr<SetFunction> function;
  std::shared_ptr<HereditaryFamily> family;
  /// Set for distance_boundary instances; the rizzi adapter orders by it.
  std::shared_ptr<DistanceMap> distance;
  /// True when the function is posimodular rather than symmetric
  /// (modular_offset): solving must go through the antirestriction.
  bool posimodular = false;
};

struct InstanceSpec {
  int n = 0;
  std::optional<std::vector<std::string>> labels;
  FunctionSpec function;
  FamilySpec family;
  std::optional<ExpectedSpec> expected;

  GroundSet ground_set() const;
  BuiltInstance build() const;
};

/// The serializable form of a generated random instance.
InstanceSpec to_instance_spec(const RandomInstance& instance);

}  // namespace hermin
