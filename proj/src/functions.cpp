#include "hermin/functions.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "hermin/check.hpp"
#include "hermin/errors.hpp"

namespace hermin {

namespace {

GroundSet resolve_universe(int n, std::optional<GroundSet>&& universe, const char* what) {
  if (!universe.has_value()) return GroundSet(n);
  if (universe->size() != n) {
    throw std::invalid_argument(std::string(what) + ": universe size does not match instance");
  }
  return std::move(*universe);
}

}  // namespace

void WeightedGraph::validate() const {
  if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (const auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("graph edge endpoints must differ");
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw std::invalid_argument("graph edge endpoint out of range");
    }
    if (e.weight.is_negative()) throw std::invalid_argument("graph edge weight must be >= 0");
  }
}

void WeightedHypergraph::validate() const {
  if (vertex_count < 1) throw std::invalid_argument("hypergraph needs at least one vertex");
  for (const auto& h : hyperedges) {
    if (h.members.universe_size() != vertex_count) {
      throw std::invalid_argument("hyperedge member set over wrong universe");
    }
    if (h.members.count() < 2) {
      throw std::invalid_argument("hyperedges need at least two members");
    }
    if (h.weight.is_negative()) throw std::invalid_argument("hyperedge weight must be >= 0");
  }
}

void ExplicitTable::validate() const {
  if (universe_size < 1 || universe_size > 20) {
    throw std::invalid_argument("explicit tables support 1..20 elements");
  }
  if (values.size() != (std::size_t{1} << universe_size)) {
    throw std::invalid_argument("explicit table must list all 2^n values");
  }
}

namespace {

class GraphCutFunction final : public SetFunction {
 public:
  GraphCutFunction(GroundSet universe, WeightedGraph graph)
      : SetFunction(std::move(universe)), graph_(std::move(graph)) {}

  Value evaluate(const Subset& s) const override {
    count_call();
    Value total;
    for (const auto& e : graph_.edges) {
      if (s.test(e.u) != s.test(e.v)) total += e.weight;
    }
    return total;
  }

 private:
  WeightedGraph graph_;
};

class HypergraphCutFunction final : public SetFunction {
 public:
  HypergraphCutFunction(GroundSet universe, WeightedHypergraph hypergraph)
      : SetFunction(std::move(universe)), hypergraph_(std::move(hypergraph)) {}

  Value evaluate(const Subset& s) const override {
    count_call();
    Value total;
    for (const auto& h : hypergraph_.hyperedges) {
      if (h.members.intersects(s) && !s.contains_all(h.members)) total += h.weight;
    }
    return total;
  }

 private:
  WeightedHypergraph hypergraph_;
};

class TableFunction final : public SetFunction {
 public:
  TableFunction(GroundSet universe, ExplicitTable table)
      : SetFunction(std::move(universe)), table_(std::move(table)) {}

  Value evaluate(const Subset& s) const override {
    count_call();
    return table_.values[s.to_mask()];
  }

 private:
  ExplicitTable table_;
};

class ModularOffsetFunction final : public SetFunction {
 public:
  ModularOffsetFunction(std::shared_ptr<const SetFunction> base, std::vector<Value> weights)
      : SetFunction(base->universe()), base_(std::move(base)), weights_(std::move(weights)) {}

  Value evaluate(const Subset& s) const override {
    count_call();
    Value total = base_->evaluate(s);
    for (int e : s.elements()) total += weights_[e];
    return total;
  }

 private:
  std::shared_ptr<const SetFunction> base_;
  std::vector<Value> weights_;
};

}  // namespace

std::shared_ptr<SetFunction> graph_cut(WeightedGraph graph, std::optional<GroundSet> universe) {
  graph.validate();
  GroundSet u = resolve_universe(graph.vertex_count, std::move(universe), "graph_cut");
  return std::make_shared<GraphCutFunction>(std::move(u), std::move(graph));
}

std::shared_ptr<SetFunction> hypergraph_cut(WeightedHypergraph hypergraph,
                                            std::optional<GroundSet> universe) {
  hypergraph.validate();
  GroundSet u =
      resolve_universe(hypergraph.vertex_count, std::move(universe), "hypergraph_cut");
  return std::make_shared<HypergraphCutFunction>(std::move(u), std::move(hypergraph));
}

std::shared_ptr<SetFunction> table_function(ExplicitTable table,
                                            std::optional<GroundSet> universe) {
  table.validate();
  GroundSet u = resolve_universe(table.universe_size, std::move(universe), "table_function");
  return std::make_shared<TableFunction>(std::move(u), std::move(table));
}

std::shared_ptr<SetFunction> add_modular(std::shared_ptr<const SetFunction> f,
                                         std::vector<Value> weights) {
  if (static_cast<int>(weights.size()) != f->universe().size()) {
    throw std::invalid_argument("add_modular needs one weight per element");
  }
  return std::make_shared<ModularOffsetFunction>(std::move(f), std::move(weights));
}

Value DistanceMap::between(const Subset& a, const Subset& b) const {
  HERMIN_ASSERT(!a.none() && !b.none());
  HERMIN_ASSERT(a.disjoint_from(b));
  ++queries_;
  return eval_pair(a, b);
}

namespace {

class ShortestPathDistanceMap final : public DistanceMap {
 public:
  ShortestPathDistanceMap(GroundSet universe, std::vector<std::vector<Value>> dist)
      : DistanceMap(std::move(universe)), dist_(std::move(dist)) {}

 private:
  Value eval_pair(const Subset& a, const Subset& b) const override {
    Value best;
    bool first = true;
    for (int u : a.elements()) {
      for (int v : b.elements()) {
        const Value& d = dist_[u][v];
        if (first || d > best) {
          best = d;
          first = false;
        }
      }
    }
    return best;
  }

  std::vector<std::vector<Value>> dist_;
};

class FunctionDistanceMap final : public DistanceMap {
 public:
  explicit FunctionDistanceMap(std::shared_ptr<const SetFunction> f)
      : DistanceMap(f->universe()), f_(std::move(f)) {}

 private:
  Value eval_pair(const Subset& a, const Subset& b) const override {
    return ((*f_)(a) + (*f_)(b) - (*f_)(a | b)) / Value(2);
  }

  std::shared_ptr<const SetFunction> f_;
};

class BoundaryFunction final : public SetFunction {
 public:
  explicit BoundaryFunction(std::shared_ptr<const DistanceMap> d)
      : SetFunction(d->universe()), d_(std::move(d)) {}

  Value evaluate(const Subset& s) const override {
    count_call();
    if (s.none() || s.is_full()) return Value(0);
    return d_->between(s, s.complemented());
  }

 private:
  std::shared_ptr<const DistanceMap> d_;
};

}  // namespace

std::shared_ptr<DistanceMap> shortest_path_distance_map(const WeightedGraph& graph,
                                                        std::optional<GroundSet> universe) {
  graph.validate();
  int n = graph.vertex_count;
  GroundSet u = resolve_universe(n, std::move(universe), "shortest_path_distance_map");

  // Floyd-Warshall on exact rationals; nullopt marks unreachable.
  std::vector<std::vector<std::optional<Value>>> dist(
      n, std::vector<std::optional<Value>>(n));
  for (int i = 0; i < n; ++i) dist[i][i] = Value(0);
  for (const auto& e : graph.edges) {
    if (!dist[e.u][e.v].has_value() || e.weight < *dist[e.u][e.v]) {
      dist[e.u][e.v] = e.weight;
      dist[e.v][e.u] = e.weight;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!dist[i][k].has_value()) continue;
      for (int j = 0; j < n; ++j) {
        if (!dist[k][j].has_value()) continue;
        Value through = *dist[i][k] + *dist[k][j];
        if (!dist[i][j].has_value() || through < *dist[i][j]) dist[i][j] = through;
      }
    }
  }

  std::vector<std::vector<Value>> out(n, std::vector<Value>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!dist[i][j].has_value()) {
        throw std::invalid_argument(
            "shortest_path_distance_map requires a connected graph");
      }
      out[i][j] = *dist[i][j];
    }
  }
  return std::make_shared<ShortestPathDistanceMap>(std::move(u), std::move(out));
}

std::shared_ptr<DistanceMap> map_from_function(std::shared_ptr<const SetFunction> f) {
  return std::make_shared<FunctionDistanceMap>(std::move(f));
}

std::shared_ptr<SetFunction> boundary_function(std::shared_ptr<const DistanceMap> d) {
  return std::make_shared<BoundaryFunction>(std::move(d));
}

DistanceMapValidation validate_distance_map(const DistanceMap& d, ValidationOptions opts) {
  int n = d.universe().size();
  if (n > opts.max_universe) {
    throw EnumerationCapExceeded("validate_distance_map: universe of size " + std::to_string(n) +
                                 " is too large to enumerate (cap " +
                                 std::to_string(opts.max_universe) + ")");
  }
  std::uint64_t total = std::uint64_t{1} << n;
  auto sub = [n](std::uint64_t m) { return Subset::from_mask(n, m); };

  for (std::uint64_t a = 1; a < total; ++a) {
    for (std::uint64_t b = 1; b < total; ++b) {
      if ((a & b) != 0 || b < a) continue;
      if (d.between(sub(a), sub(b)) != d.between(sub(b), sub(a))) {
        return {false, "symmetry fails for A=" + sub(a).str(d.universe()) +
                           ", B=" + sub(b).str(d.universe())};
      }
    }
  }
  for (std::uint64_t a = 1; a < total; ++a) {
    for (std::uint64_t b = 1; b < total; ++b) {
      if ((a & b) != 0) continue;
      for (std::uint64_t w = 1; w < total; ++w) {
        if ((w & (a | b)) != 0) continue;
        if (d.between(sub(a), sub(b)) > d.between(sub(a), sub(b | w))) {
          return {false, "monotonicity fails for A=" + sub(a).str(d.universe()) +
                             ", B=" + sub(b).str(d.universe()) +
                             ", W=" + sub(w).str(d.universe())};
        }
        if (d.between(sub(a), sub(w)) >= d.between(sub(b), sub(w)) &&
            d.between(sub(a), sub(w | b)) < d.between(sub(b), sub(w | a))) {
          return {false, "consistency fails for A=" + sub(a).str(d.universe()) +
                             ", B=" + sub(b).str(d.universe()) +
                             ", W=" + sub(w).str(d.universe())};
        }
      }
    }
  }
  return {};
}

}  // namespace hermin
