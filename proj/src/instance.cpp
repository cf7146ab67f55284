#include "hermin/instance.hpp"

#include <stdexcept>

#include "hermin/check.hpp"

namespace hermin {

GroundSet InstanceSpec::ground_set() const {
  if (labels.has_value()) return GroundSet(n, *labels);
  return GroundSet(n);
}

namespace {

struct FunctionBuild {
  std::shared_ptr<SetFunction> function;
  std::shared_ptr<DistanceMap> distance;
  bool posimodular = false;
};

FunctionBuild build_function(const FunctionSpec& spec, const GroundSet& universe, bool nested) {
  FunctionBuild out;
  if (const auto* g = std::get_if<GraphCutSpec>(&spec.data)) {
    WeightedGraph graph = g->graph;
    graph.vertex_count = universe.size();
    out.function = graph_cut(std::move(graph), universe);
  } else if (const auto* h = std::get_if<HypergraphCutSpec>(&spec.data)) {
    WeightedHypergraph hg = h->hypergraph;
    hg.vertex_count = universe.size();
    out.function = hypergraph_cut(std::move(hg), universe);
  } else if (const auto* t = std::get_if<TableSpec>(&spec.data)) {
    ExplicitTable table = t->table;
    table.universe_size = universe.size();
    out.function = table_function(std::move(table), universe);
  } else if (const auto* m = std::get_if<ModularOffsetSpec>(&spec.data)) {
    HERMIN_ASSERT(m->base != nullptr);
    if (std::holds_alternative<DistanceBoundarySpec>(m->base->data)) {
      throw std::invalid_argument(
          "modular_offset over a distance_boundary base is not supported");
    }
    FunctionBuild base = build_function(*m->base, universe, true);
    out.function = add_modular(base.function, m->weights);
    out.posimodular = true;
  } else if (const auto* d = std::get_if<DistanceBoundarySpec>(&spec.data)) {
    if (nested) {
      throw std::invalid_argument("distance_boundary cannot be nested");
    }
    WeightedGraph graph = d->graph;
    graph.vertex_count = universe.size();
    out.distance = shortest_path_distance_map(graph, universe);
    out.function = boundary_function(out.distance);
  } else {
    HERMIN_ASSERT(false);
  }
  return out;
}

std::shared_ptr<HereditaryFamily> build_family(const FamilySpec& spec, const GroundSet& universe) {
  if (const auto* c = std::get_if<CardinalityFamilySpec>(&spec.data)) {
    return std::make_shared<CardinalityFamily>(universe, c->k);
  }
  if (const auto* k = std::get_if<KnapsackFamilySpec>(&spec.data)) {
    return std::make_shared<KnapsackFamily>(universe, k->weights, k->budget);
  }
  if (const auto* m = std::get_if<MatroidFamilySpec>(&spec.data)) {
    if (const auto* u = std::get_if<UniformMatroidSpec>(&m->kind)) {
      return std::make_shared<UniformMatroidFamily>(universe, u->k);
    }
    if (const auto* p = std::get_if<PartitionMatroidSpec>(&m->kind)) {
      std::vector<Subset> blocks;
      blocks.reserve(p->blocks.size());
      for (const auto& raw : p->blocks) {
        Subset b = Subset::empty(universe.size());
        for (int e : raw) {
          if (e < 0 || e >= universe.size()) {
            throw std::invalid_argument("partition matroid block element out of range");
          }
          b.set(e);
        }
        blocks.push_back(b);
      }
      return std::make_shared<PartitionMatroidFamily>(universe, std::move(blocks),
                                                      p->capacities);
    }
    const auto& g = std::get<GraphicMatroidSpec>(m->kind);
    WeightedGraph graph;
    graph.vertex_count = g.vertices;
    for (const auto& [u, v] : g.edges) graph.edges.push_back({u, v, Value(1)});
    return std::make_shared<GraphicMatroidFamily>(universe, std::move(graph));
  }
  if (const auto* f = std::get_if<ForbiddenFamilySpec>(&spec.data)) {
    std::vector<Subset> obstructions;
    obstructions.reserve(f->obstructions.size());
    for (const auto& raw : f->obstructions) {
      Subset o = Subset::empty(universe.size());
      for (int e : raw) {
        if (e < 0 || e >= universe.size()) {
          throw std::invalid_argument("obstruction element out of range");
        }
        o.set(e);
      }
      obstructions.push_back(o);
    }
    return std::make_shared<ForbiddenSubsetsFamily>(universe, std::move(obstructions));
  }
  if (const auto* e = std::get_if<ExcludeFamilySpec>(&spec.data)) {
    return std::make_shared<ExcludeElementFamily>(universe, e->element);
  }
  const auto& inter = std::get<IntersectionFamilySpec>(spec.data);
  std::vector<std::shared_ptr<const HereditaryFamily>> parts;
  parts.reserve(inter.parts.size());
  for (const auto& part : inter.parts) parts.push_back(build_family(part, universe));
  return std::make_shared<IntersectionFamily>(universe, std::move(parts));
}

}  // namespace

BuiltInstance InstanceSpec::build() const {
  GroundSet universe = ground_set();
  FunctionBuild fn = build_function(function, universe, false);
  return BuiltInstance{universe, fn.function, build_family(family, universe), fn.distance,
                       fn.posimodular};
}

InstanceSpec to_instance_spec(const RandomInstance& instance) {
  InstanceSpec spec;
  spec.n = instance.universe.size();

  switch (instance.function_class) {
    case FunctionClass::GraphCut:
      spec.function.data = GraphCutSpec{instance.graph};
      break;
    case FunctionClass::HypergraphCut:
      spec.function.data = HypergraphCutSpec{instance.hypergraph};
      break;
    case FunctionClass::CutPlusModular: {
      ModularOffsetSpec mo;
      mo.base = std::make_unique<FunctionSpec>();
      mo.base->data = GraphCutSpec{instance.graph};
      mo.weights = instance.modular_weights;
      spec.function.data = std::move(mo);
      break;
    }
  }

  switch (instance.family_class) {
    case FamilyClass::Cardinality:
      spec.family.data = CardinalityFamilySpec{instance.cardinality_k};
      break;
    case FamilyClass::Knapsack:
      spec.family.data =
          KnapsackFamilySpec{instance.knapsack_weights, instance.knapsack_budget};
      break;
    case FamilyClass::PartitionMatroid: {
      PartitionMatroidSpec pm;
      for (const Subset& b : instance.partition_blocks) pm.blocks.push_back(b.elements());
      pm.capacities = instance.partition_capacities;
      spec.family.data = MatroidFamilySpec{std::move(pm)};
      break;
    }
    case FamilyClass::ForbiddenSubsets: {
      ForbiddenFamilySpec fs;
      for (const Subset& o : instance.obstructions) fs.obstructions.push_back(o.elements());
      spec.family.data = std::move(fs);
      break;
    }
    case FamilyClass::Intersection: {
      IntersectionFamilySpec inter;
      FamilySpec card;
      card.data = CardinalityFamilySpec{instance.cardinality_k};
      FamilySpec knap;
      knap.data = KnapsackFamilySpec{instance.knapsack_weights, instance.knapsack_budget};
      inter.parts.push_back(std::move(card));
      inter.parts.push_back(std::move(knap));
      spec.family.data = std::move(inter);
      break;
    }
  }
  return spec;
}

}  // namespace hermin
