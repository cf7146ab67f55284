#include <doctest.h>

#include <random>

#include "hermin/errors.hpp"
#include "hermin/families.hpp"
#include "hermin/functions.hpp"
#include "hermin/validate.hpp"

using namespace hermin;

namespace {

WeightedGraph unit_triangle() {
  return {3, {{0, 1, Value(1)}, {1, 2, Value(1)}, {2, 0, Value(1)}}};
}

WeightedGraph unit_four_cycle() {
  return {4, {{0, 1, Value(1)}, {1, 2, Value(1)}, {2, 3, Value(1)}, {3, 0, Value(1)}}};
}

}  // namespace

TEST_CASE("symmetry validator") {
  auto triangle = graph_cut(unit_triangle());
  CHECK(validate_symmetric(*triangle).valid);

  CallbackFunction size(GroundSet(3), [](const Subset& s) { return Value(s.count()); });
  auto res = validate_symmetric(size);
  CHECK_FALSE(res.valid);
  REQUIRE(res.witness.has_value());
  CHECK(size(res.witness->a) != size(res.witness->b));

  auto boundary = boundary_function(shortest_path_distance_map(unit_four_cycle()));
  CHECK(validate_symmetric(*boundary).valid);
}

TEST_CASE("crossing submodularity validator") {
  for (int n = 2; n <= 5; ++n) {
    std::mt19937_64 rng(n);
    WeightedGraph g;
    g.vertex_count = n;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        g.edges.push_back({u, v, Value(static_cast<long long>(rng() % 5))});
      }
    }
    CHECK(validate_crossing_submodular(*graph_cut(g)).valid);
  }

  // The distance-boundary of the unit 4-cycle is not crossing submodular:
  // f({a,c}) + f({a,d}) = 3 < 4 = f({a,c,d}) + f({a}).
  auto boundary = boundary_function(shortest_path_distance_map(unit_four_cycle()));
  auto res = validate_crossing_submodular(*boundary);
  CHECK_FALSE(res.valid);
  REQUIRE(res.witness.has_value());
  const Subset& a = res.witness->a;
  const Subset& b = res.witness->b;
  CHECK((*boundary)(a | b) + (*boundary)(a & b) > (*boundary)(a) + (*boundary)(b));

  CallbackFunction modular(GroundSet(4), [](const Subset& s) { return Value(3 * s.count()); });
  CHECK(validate_crossing_submodular(modular).valid);
  CHECK(validate_submodular(modular).valid);
}

TEST_CASE("submodularity and posimodularity validators") {
  auto triangle = graph_cut(unit_triangle());
  CHECK(validate_submodular(*triangle).valid);
  CHECK(validate_intersecting_posimodular(*triangle).valid);

  auto offset = add_modular(triangle, {Value(1), Value(0), Value(2)});
  CHECK(validate_intersecting_posimodular(*offset).valid);
  CHECK_FALSE(validate_symmetric(*offset).valid);

  CallbackFunction negsize(GroundSet(3), [](const Subset& s) { return Value(-s.count()); });
  auto res = validate_intersecting_posimodular(negsize);
  CHECK_FALSE(res.valid);
  // e.g. A={a,b}, B={b,c}: f(A\B)+f(B\A) = -2 > -4 = f(A)+f(B)
  REQUIRE(res.witness.has_value());
}

TEST_CASE("hereditary validator") {
  CardinalityFamily card(GroundSet(4), 2);
  CHECK(validate_hereditary(card).valid);

  // {∅, {a}, {a,b}} misses {b}
  CallbackFunction dummy(GroundSet(2), [](const Subset&) { return Value(0); });
  struct Explicit final : HereditaryFamily {
    explicit Explicit(GroundSet g) : HereditaryFamily(std::move(g)) {}
    bool contains(const Subset& s) const override {
      auto m = s.to_mask();
      return m == 0b00 || m == 0b01 || m == 0b11;
    }
  } not_closed{GroundSet(2)};
  auto res = validate_hereditary(not_closed);
  CHECK_FALSE(res.valid);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->a.to_mask() == 0b10);  // the missing subset {b}
  CHECK(res.witness->b.to_mask() == 0b11);

  GroundSet u(4);
  auto knap = std::make_shared<KnapsackFamily>(
      u, std::vector<Value>{Value(1, 2), Value(1, 2), Value(3, 4), Value(1)}, Value(1));
  auto uniform = std::make_shared<UniformMatroidFamily>(u, 2);
  IntersectionFamily inter(u, {knap, uniform});
  CHECK(validate_hereditary(inter).valid);
}

TEST_CASE("union-closed validator") {
  GroundSet u(4);
  auto supersets_of_0 = [](const Subset& s) { return s.test(0); };
  CHECK(validate_union_closed(supersets_of_0, u).valid);
  auto at_most_one = [](const Subset& s) { return s.count() <= 1; };
  CHECK_FALSE(validate_union_closed(at_most_one, u).valid);
}

TEST_CASE("validators refuse universes beyond the cap") {
  CallbackFunction wide(GroundSet(18), [](const Subset& s) { return Value(s.count()); });
  CHECK_THROWS_AS(validate_symmetric(wide), EnumerationCapExceeded);
  CHECK_NOTHROW(validate_symmetric(wide, {.max_universe = 18}));
  CardinalityFamily card(GroundSet(21), 2);
  CHECK_THROWS_AS(validate_hereditary(card), EnumerationCapExceeded);
}
