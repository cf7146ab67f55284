#include "hermin/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hermin {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InstanceParseError(where + ": " + what);
}

Value parse_value(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Value(j.get<long long>());
  if (j.is_string()) {
    try {
      return Value::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or a \"p/q\" string");
}

int parse_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

const json& require(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::vector<int> parse_index_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of element indices");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(parse_int(e, where));
  return out;
}

WeightedGraph parse_graph_edges(const json& j, const std::string& where) {
  WeightedGraph g;
  const json& edges = require(j, "edges", where);
  if (!edges.is_array()) fail(where + ".edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    std::string ew = where + ".edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 3) fail(ew, "expected [u, v, w]");
    g.edges.push_back({parse_int(e[0], ew), parse_int(e[1], ew), parse_value(e[2], ew)});
  }
  return g;
}

FunctionSpec parse_function(const json& j, int n, const std::string& where);

FunctionSpec parse_function(const json& j, int n, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  std::string type = require(j, "type", where).get<std::string>();
  FunctionSpec out;
  if (type == "graph_cut") {
    GraphCutSpec s;
    s.graph = parse_graph_edges(j, where);
    s.graph.vertex_count = n;
    out.data = std::move(s);
  } else if (type == "hypergraph_cut") {
    HypergraphCutSpec s;
    s.hypergraph.vertex_count = n;
    const json& hedges = require(j, "hyperedges", where);
    if (!hedges.is_array()) fail(where + ".hyperedges", "expected an array");
    for (std::size_t i = 0; i < hedges.size(); ++i) {
      std::string hw = where + ".hyperedges[" + std::to_string(i) + "]";
      const json& h = hedges[i];
      if (!h.is_object()) fail(hw, "expected {members, w}");
      Subset members = Subset::empty(n);
      for (int e : parse_index_list(require(h, "members", hw), hw + ".members")) {
        if (e < 0 || e >= n) fail(hw + ".members", "element out of range");
        members.set(e);
      }
      s.hypergraph.hyperedges.push_back({members, parse_value(require(h, "w", hw), hw + ".w")});
    }
    out.data = std::move(s);
  } else if (type == "table") {
    TableSpec s;
    s.table.universe_size = n;
    const json& values = require(j, "values", where);
    if (!values.is_array()) fail(where + ".values", "expected an array");
    for (std::size_t i = 0; i < values.size(); ++i) {
      s.table.values.push_back(parse_value(values[i], where + ".values"));
    }
    out.data = std::move(s);
  } else if (type == "modular_offset") {
    ModularOffsetSpec s;
    s.base = std::make_unique<FunctionSpec>(
        parse_function(require(j, "base", where), n, where + ".base"));
    const json& weights = require(j, "weights", where);
    if (!weights.is_array() || static_cast<int>(weights.size()) != n) {
      fail(where + ".weights", "expected one weight per element");
    }
    for (const auto& w : weights) s.weights.push_back(parse_value(w, where + ".weights"));
    out.data = std::move(s);
  } else if (type == "distance_boundary") {
    DistanceBoundarySpec s;
    const json& graph = require(j, "graph", where);
    s.graph = parse_graph_edges(graph, where + ".graph");
    s.graph.vertex_count = n;
    out.data = std::move(s);
  } else {
    fail(where + ".type", "unknown function type '" + type + "'");
  }
  return out;
}

FamilySpec parse_family(const json& j, int n, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  std::string type = require(j, "type", where).get<std::string>();
  FamilySpec out;
  if (type == "cardinality") {
    out.data = CardinalityFamilySpec{parse_int(require(j, "k", where), where + ".k")};
  } else if (type == "knapsack") {
    KnapsackFamilySpec s;
    const json& weights = require(j, "weights", where);
    if (!weights.is_array() || static_cast<int>(weights.size()) != n) {
      fail(where + ".weights", "expected one weight per element");
    }
    for (const auto& w : weights) s.weights.push_back(parse_value(w, where + ".weights"));
    s.budget = parse_value(require(j, "budget", where), where + ".budget");
    out.data = std::move(s);
  } else if (type == "matroid") {
    std::string kind = require(j, "kind", where).get<std::string>();
    MatroidFamilySpec m;
    if (kind == "uniform") {
      m.kind = UniformMatroidSpec{parse_int(require(j, "k", where), where + ".k")};
    } else if (kind == "partition") {
      PartitionMatroidSpec p;
      const json& blocks = require(j, "blocks", where);
      if (!blocks.is_array()) fail(where + ".blocks", "expected an array");
      for (const auto& b : blocks) p.blocks.push_back(parse_index_list(b, where + ".blocks"));
      const json& caps = require(j, "capacities", where);
      if (!caps.is_array()) fail(where + ".capacities", "expected an array");
      for (const auto& c : caps) {
        p.capacities.push_back(parse_int(c, where + ".capacities"));
      }
      m.kind = std::move(p);
    } else if (kind == "graphic") {
      GraphicMatroidSpec g;
      g.vertices = parse_int(require(j, "vertices", where), where + ".vertices");
      const json& edges = require(j, "edges", where);
      if (!edges.is_array()) fail(where + ".edges", "expected an array");
      for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2) fail(where + ".edges", "expected [u, v] pairs");
        g.edges.emplace_back(parse_int(e[0], where + ".edges"),
                             parse_int(e[1], where + ".edges"));
      }
      m.kind = std::move(g);
    } else {
      fail(where + ".kind", "unknown matroid kind '" + kind + "'");
    }
    out.data = std::move(m);
  } else if (type == "forbidden") {
    ForbiddenFamilySpec s;
    const json& obstructions = require(j, "obstructions", where);
    if (!obstructions.is_array()) fail(where + ".obstructions", "expected an array");
    for (const auto& o : obstructions) {
      s.obstructions.push_back(parse_index_list(o, where + ".obstructions"));
    }
    out.data = std::move(s);
  } else if (type == "exclude") {
    out.data = ExcludeFamilySpec{parse_int(require(j, "s", where), where + ".s")};
  } else if (type == "intersection") {
    IntersectionFamilySpec s;
    const json& parts = require(j, "parts", where);
    if (!parts.is_array() || parts.empty()) {
      fail(where + ".parts", "expected a nonempty array of families");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
      s.parts.push_back(parse_family(parts[i], n, where + ".parts[" + std::to_string(i) + "]"));
    }
    out.data = std::move(s);
  } else {
    fail(where + ".type", "unknown family type '" + type + "'");
  }
  return out;
}

}  // namespace

InstanceSpec parse_instance_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InstanceParseError(e.what());
  }
  try {
    if (!j.is_object()) fail("instance", "expected a JSON object");

    InstanceSpec spec;
    const json& ground = require(j, "ground_set", "instance");
    spec.n = parse_int(require(ground, "n", "ground_set"), "ground_set.n");
    if (spec.n < 1) fail("ground_set.n", "ground set must have at least one element");
    if (auto it = ground.find("labels"); it != ground.end()) {
      if (!it->is_array() || static_cast<int>(it->size()) != spec.n) {
        fail("ground_set.labels", "expected one label per element");
      }
      std::vector<std::string> labels;
      for (const auto& l : *it) labels.push_back(l.get<std::string>());
      spec.labels = std::move(labels);
    }
    spec.function = parse_function(require(j, "function", "instance"), spec.n, "function");
    spec.family = parse_family(require(j, "family", "instance"), spec.n, "family");

    if (auto it = j.find("expected"); it != j.end()) {
      ExpectedSpec expected;
      if (auto v = it->find("value"); v != it->end()) {
        expected.value = parse_value(*v, "expected.value");
      }
      if (auto s = it->find("sets"); s != it->end()) {
        if (!s->is_array()) fail("expected.sets", "expected an array of label arrays");
        std::vector<std::vector<std::string>> sets;
        for (const auto& one : *s) {
          std::vector<std::string> labels;
          for (const auto& l : one) labels.push_back(l.get<std::string>());
          sets.push_back(std::move(labels));
        }
        expected.sets = std::move(sets);
      }
      spec.expected = std::move(expected);
    }
    return spec;
  } catch (const json::exception& e) {
    throw InstanceParseError(std::string("instance: ") + e.what());
  }
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InstanceParseError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance_text(buf.str());
}

namespace {

json value_to_json(const Value& v) { return v.str(); }

json graph_edges_to_json(const WeightedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back(json::array({e.u, e.v, value_to_json(e.weight)}));
  }
  return edges;
}

json function_to_json(const FunctionSpec& spec) {
  json out;
  if (const auto* g = std::get_if<GraphCutSpec>(&spec.data)) {
    out["type"] = "graph_cut";
    out["edges"] = graph_edges_to_json(g->graph);
  } else if (const auto* h = std::get_if<HypergraphCutSpec>(&spec.data)) {
    out["type"] = "hypergraph_cut";
    json hedges = json::array();
    for (const auto& he : h->hypergraph.hyperedges) {
      json one;
      one["members"] = he.members.elements();
      one["w"] = value_to_json(he.weight);
      hedges.push_back(std::move(one));
    }
    out["hyperedges"] = std::move(hedges);
  } else if (const auto* t = std::get_if<TableSpec>(&spec.data)) {
    out["type"] = "table";
    json values = json::array();
    for (const auto& v : t->table.values) values.push_back(value_to_json(v));
    out["values"] = std::move(values);
  } else if (const auto* m = std::get_if<ModularOffsetSpec>(&spec.data)) {
    out["type"] = "modular_offset";
    out["base"] = function_to_json(*m->base);
    json weights = json::array();
    for (const auto& w : m->weights) weights.push_back(value_to_json(w));
    out["weights"] = std::move(weights);
  } else if (const auto* d = std::get_if<DistanceBoundarySpec>(&spec.data)) {
    out["type"] = "distance_boundary";
    out["graph"] = json{{"edges", graph_edges_to_json(d->graph)}};
  }
  return out;
}

json family_to_json(const FamilySpec& spec) {
  json out;
  if (const auto* c = std::get_if<CardinalityFamilySpec>(&spec.data)) {
    out["type"] = "cardinality";
    out["k"] = c->k;
  } else if (const auto* k = std::get_if<KnapsackFamilySpec>(&spec.data)) {
    out["type"] = "knapsack";
    json weights = json::array();
    for (const auto& w : k->weights) weights.push_back(value_to_json(w));
    out["weights"] = std::move(weights);
    out["budget"] = value_to_json(k->budget);
  } else if (const auto* m = std::get_if<MatroidFamilySpec>(&spec.data)) {
    out["type"] = "matroid";
    if (const auto* u = std::get_if<UniformMatroidSpec>(&m->kind)) {
      out["kind"] = "uniform";
      out["k"] = u->k;
    } else if (const auto* p = std::get_if<PartitionMatroidSpec>(&m->kind)) {
      out["kind"] = "partition";
      out["blocks"] = p->blocks;
      out["capacities"] = p->capacities;
    } else {
      const auto& g = std::get<GraphicMatroidSpec>(m->kind);
      out["kind"] = "graphic";
      out["vertices"] = g.vertices;
      json edges = json::array();
      for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
      out["edges"] = std::move(edges);
    }
  } else if (const auto* f = std::get_if<ForbiddenFamilySpec>(&spec.data)) {
    out["type"] = "forbidden";
    out["obstructions"] = f->obstructions;
  } else if (const auto* e = std::get_if<ExcludeFamilySpec>(&spec.data)) {
    out["type"] = "exclude";
    out["s"] = e->element;
  } else if (const auto* inter = std::get_if<IntersectionFamilySpec>(&spec.data)) {
    out["type"] = "intersection";
    json parts = json::array();
    for (const auto& part : inter->parts) parts.push_back(family_to_json(part));
    out["parts"] = std::move(parts);
  }
  return out;
}

}  // namespace

std::string serialize_instance(const InstanceSpec& spec) {
  json out;
  json ground;
  ground["n"] = spec.n;
  if (spec.labels.has_value()) ground["labels"] = *spec.labels;
  out["ground_set"] = std::move(ground);
  out["function"] = function_to_json(spec.function);
  out["family"] = family_to_json(spec.family);
  if (spec.expected.has_value()) {
    json expected;
    if (spec.expected->value.has_value()) expected["value"] = spec.expected->value->str();
    if (spec.expected->sets.has_value()) expected["sets"] = *spec.expected->sets;
    out["expected"] = std::move(expected);
  }
  return out.dump(2) + "\n";
}

}  // namespace hermin
