#include <doctest.h>

#include "hermin/instance_io.hpp"
#include "hermin/validate.hpp"

using namespace hermin;

namespace {
const std::string kFixtures = HERMIN_FIXTURE_DIR;
}

TEST_CASE("parsing the path fixture") {
  InstanceSpec spec = load_instance(kFixtures + "/path_card2.json");
  CHECK(spec.n == 3);
  REQUIRE(spec.labels.has_value());
  CHECK((*spec.labels)[0] == "a");
  REQUIRE(spec.expected.has_value());
  CHECK(spec.expected->value == Value(1));

  BuiltInstance built = spec.build();
  CHECK((*built.function)(Subset::of(3, {1})) == Value(2));
  CHECK(built.family->contains(Subset::of(3, {0, 2})));
  CHECK_FALSE(built.posimodular);
  CHECK(built.distance == nullptr);
}

TEST_CASE("parsing a modular offset instance flags the posimodular route") {
  InstanceSpec spec = load_instance(kFixtures + "/triangle_modular_knapsack.json");
  BuiltInstance built = spec.build();
  CHECK(built.posimodular);
  // f({a}) = cut 2 + weight 1
  CHECK((*built.function)(Subset::of(3, {0})) == Value(3));
  CHECK_FALSE(built.family->contains(Subset::of(3, {0, 2})));  // 5/4 > 1
}

TEST_CASE("parsing a distance boundary instance") {
  InstanceSpec spec = load_instance(kFixtures + "/fourcycle_distance.json");
  BuiltInstance built = spec.build();
  REQUIRE(built.distance != nullptr);
  CHECK((*built.function)(Subset::of(4, {0, 2})) == Value(1));
  CHECK(validate_symmetric(*built.function).valid);
}

TEST_CASE("malformed files raise parse errors") {
  CHECK_THROWS_AS(load_instance(kFixtures + "/bad_syntax.json"), InstanceParseError);
  CHECK_THROWS_AS(load_instance(kFixtures + "/does_not_exist.json"), InstanceParseError);
  CHECK_THROWS_AS(parse_instance_text("{\"ground_set\": {\"n\": 2}}"), InstanceParseError);
  CHECK_THROWS_AS(
      parse_instance_text(R"({"ground_set": {"n": 2},
        "function": {"type": "mystery"},
        "family": {"type": "cardinality", "k": 1}})"),
      InstanceParseError);
  CHECK_THROWS_AS(
      parse_instance_text(R"({"ground_set": {"n": 2},
        "function": {"type": "graph_cut", "edges": [[0, 1, "1.5"]]},
        "family": {"type": "cardinality", "k": 1}})"),
      InstanceParseError);
  // wrong JSON type in a field surfaces as a parse error, not a raw throw
  CHECK_THROWS_AS(
      parse_instance_text(R"({"ground_set": {"n": 2},
        "function": {"type": 7},
        "family": {"type": "cardinality", "k": 1}})"),
      InstanceParseError);
}

TEST_CASE("all family kinds parse and build") {
  auto parse_family_text = [](const std::string& family) {
    std::string text = R"({"ground_set": {"n": 4},
      "function": {"type": "graph_cut", "edges": [[0, 1, "1"], [2, 3, "2"]]},
      "family": )" + family + "}";
    return parse_instance_text(text).build();
  };
  CHECK(parse_family_text(R"({"type": "cardinality", "k": 2})").family->contains(
      Subset::of(4, {0, 1})));
  CHECK(parse_family_text(
            R"({"type": "knapsack", "weights": ["1/2", "1/2", "1", 1], "budget": 1})")
            .family->contains(Subset::of(4, {0, 1})));
  CHECK(parse_family_text(R"({"type": "matroid", "kind": "uniform", "k": 1})")
            .family->contains(Subset::of(4, {3})));
  CHECK(parse_family_text(
            R"({"type": "matroid", "kind": "partition",
                "blocks": [[0, 1], [2, 3]], "capacities": [1, 1]})")
            .family->contains(Subset::of(4, {0, 2})));
  CHECK(parse_family_text(
            R"({"type": "matroid", "kind": "graphic", "vertices": 3,
                "edges": [[0, 1], [1, 2], [2, 0], [0, 2]]})")
            .family->contains(Subset::of(4, {0, 1})));
  CHECK(parse_family_text(R"({"type": "forbidden", "obstructions": [[0, 1]]})")
            .family->contains(Subset::of(4, {0, 2})));
  CHECK(parse_family_text(R"({"type": "exclude", "s": 3})")
            .family->contains(Subset::of(4, {0, 1, 2})));
  CHECK(parse_family_text(
            R"({"type": "intersection", "parts": [
                {"type": "cardinality", "k": 2},
                {"type": "exclude", "s": 0}]})")
            .family->contains(Subset::of(4, {1, 2})));
}

TEST_CASE("gen output round-trips byte for byte") {
  for (auto fc : {FunctionClass::GraphCut, FunctionClass::HypergraphCut,
                  FunctionClass::CutPlusModular}) {
    for (auto famc : {FamilyClass::Cardinality, FamilyClass::Knapsack,
                      FamilyClass::PartitionMatroid, FamilyClass::ForbiddenSubsets,
                      FamilyClass::Intersection}) {
      RandomInstance inst = random_instance(321, 6, fc, famc);
      std::string once = serialize_instance(to_instance_spec(inst));
      InstanceSpec parsed = parse_instance_text(once);
      std::string twice = serialize_instance(parsed);
      CHECK(once == twice);

      // the serialized instance builds oracles equivalent to the originals
      BuiltInstance built = parsed.build();
      for (std::uint64_t mask = 0; mask < 64; ++mask) {
        Subset s = Subset::from_mask(6, mask);
        CHECK((*built.function)(s) == (*inst.function)(s));
        CHECK(built.family->contains(s) == inst.family->contains(s));
      }
    }
  }
}
