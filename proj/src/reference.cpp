#include "hermin/reference.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "hermin/check.hpp"
#include "hermin/errors.hpp"

namespace hermin {

BruteForceReport brute_force(const SetFunction& f, const HereditaryFamily& family) {
  int n = f.universe().size();
  if (family.universe().size() != n) {
    throw std::invalid_argument("function and family universes differ");
  }
  if (n > 20) {
    throw EnumerationCapExceeded("brute_force supports at most 20 elements, got " +
                                 std::to_string(n));
  }
  std::uint64_t total = std::uint64_t{1} << n;
  bool found = false;
  Value best;
  std::vector<std::uint64_t> arg_masks;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    Subset s = Subset::from_mask(n, mask);
    if (!family.contains(s)) continue;
    Value v = f(s);
    if (!found || v < best) {
      found = true;
      best = v;
      arg_masks.clear();
      arg_masks.push_back(mask);
    } else if (v == best) {
      arg_masks.push_back(mask);
    }
  }
  if (!found) {
    throw InfeasibleError("the family has no nonempty member");
  }

  BruteForceReport report;
  report.min_value = best;
  for (std::uint64_t mask : arg_masks) report.minimizers.push_back(Subset::from_mask(n, mask));
  for (std::uint64_t mask : arg_masks) {
    bool minimal = true;
    for (std::uint64_t other : arg_masks) {
      if (other != mask && (other & ~mask) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) report.minimal_minimizers.push_back(Subset::from_mask(n, mask));
  }
  return report;
}

bool certify_pendant_pair(const ContractedSystem& sys, int t, int u) {
  std::vector<int> elements = sys.current_elements();
  int m = static_cast<int>(elements.size());
  if (m > 20) {
    throw EnumerationCapExceeded("certify_pendant_pair supports at most 20 current elements");
  }
  int t_pos = -1;
  int u_pos = -1;
  for (int i = 0; i < m; ++i) {
    if (elements[i] == t) t_pos = i;
    if (elements[i] == u) u_pos = i;
  }
  HERMIN_ASSERT(t_pos >= 0 && u_pos >= 0 && t_pos != u_pos);

  const std::array u_only{u};
  Value u_value = sys.evaluate(u_only);
  std::uint64_t total = std::uint64_t{1} << m;
  std::vector<int> picked;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (((mask >> u_pos) & 1) == 0 || ((mask >> t_pos) & 1) != 0) continue;
    picked.clear();
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1) picked.push_back(elements[i]);
    }
    if (sys.evaluate(picked) < u_value) return false;
  }
  return true;
}

namespace {

Value random_weight(std::mt19937_64& rng, bool integer_only) {
  std::uniform_int_distribution<int> num(0, 6);
  if (integer_only) return Value(num(rng));
  std::uniform_int_distribution<int> den(1, 4);
  return Value(num(rng), den(rng));
}

Value random_positive_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return Value(num(rng), den(rng));
}

}  // namespace

WeightedGraph random_weighted_graph(std::uint64_t seed, int n, int edge_target,
                                    bool integer_weights) {
  HERMIN_ASSERT(n >= 2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  WeightedGraph g;
  g.vertex_count = n;
  long long complete = static_cast<long long>(n) * (n - 1) / 2;
  int m = static_cast<int>(std::min<long long>(edge_target, complete));
  for (int i = 0; i < m; ++i) {
    int u = vertex(rng);
    int v = vertex(rng);
    if (u == v) continue;  // skipped draws keep the stream deterministic
    g.edges.push_back({u, v, random_weight(rng, integer_weights)});
  }
  return g;
}

WeightedGraph random_connected_weighted_graph(std::uint64_t seed, int n) {
  HERMIN_ASSERT(n >= 2);
  std::mt19937_64 rng(seed);
  WeightedGraph g;
  g.vertex_count = n;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> earlier(0, v - 1);
    g.edges.push_back({earlier(rng), v, random_positive_weight(rng)});
  }
  std::uniform_int_distribution<int> extra_count(0, n);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  int extras = extra_count(rng);
  for (int i = 0; i < extras; ++i) {
    int u = vertex(rng);
    int v = vertex(rng);
    if (u == v) continue;
    g.edges.push_back({u, v, random_positive_weight(rng)});
  }
  return g;
}

namespace {

WeightedHypergraph random_hypergraph(std::mt19937_64& rng, int n) {
  WeightedHypergraph h;
  h.vertex_count = n;
  std::uniform_int_distribution<int> count(1, std::max(2, n));
  std::uniform_int_distribution<int> size(2, std::max(2, std::min(n, 4)));
  std::uniform_int_distribution<int> vertex(0, n - 1);
  int m = count(rng);
  for (int i = 0; i < m; ++i) {
    int k = size(rng);
    Subset members = Subset::empty(n);
    while (members.count() < k) members.set(vertex(rng));
    h.hyperedges.push_back({members, random_weight(rng, false)});
  }
  return h;
}

void fill_family(RandomInstance& inst, std::mt19937_64& rng, int n) {
  const GroundSet& u = inst.universe;
  switch (inst.family_class) {
    case FamilyClass::Cardinality: {
      std::uniform_int_distribution<int> k(1, n - 1);
      inst.cardinality_k = k(rng);
      inst.family = std::make_shared<CardinalityFamily>(u, inst.cardinality_k);
      return;
    }
    case FamilyClass::Knapsack: {
      // Budget at least the lightest element and below the total, so a
      // singleton is feasible and V is not.
      for (int i = 0; i < n; ++i) inst.knapsack_weights.push_back(random_positive_weight(rng));
      Value lightest = inst.knapsack_weights.front();
      Value total;
      for (const Value& w : inst.knapsack_weights) {
        if (w < lightest) lightest = w;
        total += w;
      }
      std::uniform_int_distribution<int> num(1, 7);
      Value mix(num(rng), 8);
      inst.knapsack_budget = lightest + (total - lightest - Value(1, 100)) * mix;
      if (inst.knapsack_budget < lightest) inst.knapsack_budget = lightest;
      inst.family =
          std::make_shared<KnapsackFamily>(u, inst.knapsack_weights, inst.knapsack_budget);
      return;
    }
    case FamilyClass::PartitionMatroid: {
      std::uniform_int_distribution<int> block_count(1, std::max(1, n / 2));
      int b = block_count(rng);
      std::vector<Subset> blocks(b, Subset::empty(n));
      std::uniform_int_distribution<int> which(0, b - 1);
      for (int e = 0; e < n; ++e) blocks[which(rng)].set(e);
      std::erase_if(blocks, [](const Subset& s) { return s.none(); });
      b = static_cast<int>(blocks.size());
      std::vector<int> caps(b);
      for (int i = 0; i < b; ++i) {
        std::uniform_int_distribution<int> cap(0, blocks[i].count());
        caps[i] = cap(rng);
      }
      // At least one feasible singleton, and V infeasible.
      std::uniform_int_distribution<int> pick(0, b - 1);
      int open = pick(rng);
      if (caps[open] == 0) caps[open] = 1;
      int tight = pick(rng);
      if (blocks[tight].count() >= 2) {
        caps[tight] = std::min(caps[tight], blocks[tight].count() - 1);
      } else if (blocks[(tight + 1) % b].count() >= 2) {
        tight = (tight + 1) % b;
        caps[tight] = std::min(caps[tight], blocks[tight].count() - 1);
      } else {
        caps[tight == open ? (tight + 1) % b : tight] = 0;
      }
      inst.partition_blocks = blocks;
      inst.partition_capacities = caps;
      inst.family = std::make_shared<PartitionMatroidFamily>(u, blocks, caps);
      return;
    }
    case FamilyClass::ForbiddenSubsets: {
      std::uniform_int_distribution<int> count(1, std::max(1, n / 2));
      std::uniform_int_distribution<int> vertex(0, n - 1);
      int m = count(rng);
      for (int i = 0; i < m; ++i) {
        Subset o = Subset::empty(n);
        int target = 2 + static_cast<int>(rng() % 2);
        target = std::min(target, n);
        while (o.count() < target) o.set(vertex(rng));
        inst.obstructions.push_back(o);
      }
      inst.family = std::make_shared<ForbiddenSubsetsFamily>(u, inst.obstructions);
      return;
    }
    case FamilyClass::Intersection: {
      std::uniform_int_distribution<int> k(1, n - 1);
      inst.cardinality_k = k(rng);
      for (int i = 0; i < n; ++i) inst.knapsack_weights.push_back(random_positive_weight(rng));
      Value lightest = inst.knapsack_weights.front();
      for (const Value& w : inst.knapsack_weights) {
        if (w < lightest) lightest = w;
      }
      inst.knapsack_budget = lightest * Value(3, 2);
      std::vector<std::shared_ptr<const HereditaryFamily>> parts;
      parts.push_back(std::make_shared<CardinalityFamily>(u, inst.cardinality_k));
      parts.push_back(
          std::make_shared<KnapsackFamily>(u, inst.knapsack_weights, inst.knapsack_budget));
      inst.family = std::make_shared<IntersectionFamily>(u, std::move(parts));
      return;
    }
  }
  HERMIN_ASSERT(false);
}

}  // namespace

RandomInstance random_instance(std::uint64_t seed, int n, FunctionClass function_class,
                               FamilyClass family_class) {
  if (n < 2) throw std::invalid_argument("random_instance needs n >= 2");
  std::mt19937_64 rng(seed);
  RandomInstance inst{function_class, family_class, GroundSet(n), {},      {}, {}, 0,
                      {},             Value(0),     {},           {},      {}, nullptr,
                      nullptr};

  switch (function_class) {
    case FunctionClass::GraphCut: {
      std::uniform_int_distribution<int> edges(n - 1, 3 * n);
      inst.graph = random_weighted_graph(rng(), n, edges(rng), false);
      inst.function = graph_cut(inst.graph, inst.universe);
      break;
    }
    case FunctionClass::HypergraphCut: {
      inst.hypergraph = random_hypergraph(rng, n);
      inst.function = hypergraph_cut(inst.hypergraph, inst.universe);
      break;
    }
    case FunctionClass::CutPlusModular: {
      std::uniform_int_distribution<int> edges(n - 1, 3 * n);
      inst.graph = random_weighted_graph(rng(), n, edges(rng), false);
      for (int i = 0; i < n; ++i) inst.modular_weights.push_back(random_weight(rng, false));
      inst.function =
          add_modular(graph_cut(inst.graph, inst.universe), inst.modular_weights);
      break;
    }
  }

  fill_family(inst, rng, n);

  // The constructions above keep V infeasible and some singleton feasible;
  // trust nothing, re-check.
  HERMIN_ASSERT(!inst.family->contains(Subset::full(n)));
  bool feasible_singleton = false;
  for (int i = 0; i < n && !feasible_singleton; ++i) {
    feasible_singleton = inst.family->contains(Subset::singleton(n, i));
  }
  HERMIN_ASSERT(feasible_singleton);
  return inst;
}

}  // namespace hermin
