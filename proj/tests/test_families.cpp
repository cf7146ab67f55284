#include <doctest.h>

#include <stdexcept>

#include <random>

#include "hermin/errors.hpp"
#include "hermin/families.hpp"
#include "hermin/validate.hpp"

using namespace hermin;

TEST_CASE("cardinality and knapsack membership") {
  GroundSet u3(3);
  CardinalityFamily card(u3, 2);
  CHECK(card.contains(Subset::of(3, {0, 1})));
  CHECK_FALSE(card.contains(Subset::full(3)));

  KnapsackFamily knap(u3, {Value(1, 2), Value(1, 2), Value(3, 4)}, Value(1));
  CHECK(knap.contains(Subset::of(3, {0, 1})));       // 1 <= 1
  CHECK_FALSE(knap.contains(Subset::of(3, {0, 2})));  // 5/4 > 1
  CHECK(knap.contains(Subset::empty(3)));

  CHECK_THROWS_AS(KnapsackFamily(u3, {Value(1), Value(1), Value(1)}, Value(-1)),
                  DegenerateFamilyError);
}

TEST_CASE("graphic matroid on the unit triangle") {
  // Ground elements are the three edges; all three together form a cycle.
  GroundSet edges(3);
  WeightedGraph triangle{3, {{0, 1, Value(1)}, {1, 2, Value(1)}, {2, 0, Value(1)}}};
  GraphicMatroidFamily graphic(edges, triangle);
  CHECK(graphic.contains(Subset::of(3, {0, 1})));
  CHECK_FALSE(graphic.contains(Subset::full(3)));
  CHECK(graphic.contains(Subset::empty(3)));
}

TEST_CASE("partition matroid membership and construction checks") {
  GroundSet u4(4);
  PartitionMatroidFamily pm(u4, {Subset::of(4, {0, 1}), Subset::of(4, {2, 3})}, {1, 2});
  CHECK(pm.contains(Subset::of(4, {0, 2, 3})));
  CHECK_FALSE(pm.contains(Subset::of(4, {0, 1})));
  CHECK_THROWS_AS(
      PartitionMatroidFamily(u4, {Subset::of(4, {0, 1}), Subset::of(4, {1, 2, 3})}, {1, 1}),
      std::invalid_argument);
  CHECK_THROWS_AS(PartitionMatroidFamily(u4, {Subset::of(4, {0, 1})}, {1}),
                  std::invalid_argument);
}

TEST_CASE("forbidden subsets and exclusion families") {
  GroundSet u4(4);
  ForbiddenSubsetsFamily forb(u4, {Subset::of(4, {0, 1}), Subset::of(4, {2, 3})});
  CHECK(forb.contains(Subset::of(4, {0, 2})));
  CHECK_FALSE(forb.contains(Subset::of(4, {0, 1, 2})));
  CHECK_THROWS_AS(ForbiddenSubsetsFamily(u4, {Subset::empty(4)}), DegenerateFamilyError);

  ExcludeElementFamily excl(u4, 2);
  CHECK(excl.contains(Subset::of(4, {0, 1, 3})));
  CHECK_FALSE(excl.contains(Subset::of(4, {2})));
}

TEST_CASE("intersection family is the conjunction of its parts") {
  GroundSet u(5);
  auto card = std::make_shared<CardinalityFamily>(u, 3);
  auto excl = std::make_shared<ExcludeElementFamily>(u, 0);
  IntersectionFamily inter(u, {card, excl});
  std::mt19937_64 rng(17);
  for (int round = 0; round < 50; ++round) {
    Subset s = Subset::from_mask(5, rng() % 32);
    CHECK(inter.contains(s) == (card->contains(s) && excl->contains(s)));
  }
}

TEST_CASE("loops are the elements whose expansion left the family") {
  GroundSet u(4);
  CardinalityFamily card0(u, 0);
  auto identity = [](int v) { return Subset::singleton(4, v); };
  std::vector<int> all{0, 1, 2, 3};
  CHECK(loops_of(card0, all, identity) == all);

  CardinalityFamily card2(u, 2);
  auto expander = [](int v) {
    // element 1 carries a block of size 3, the others are singletons
    if (v == 1) return Subset::of(4, {1, 2, 3});
    return Subset::singleton(4, v);
  };
  std::vector<int> current{0, 1};
  CHECK(loops_of(card2, current, expander) == std::vector<int>{1});

  ExcludeElementFamily excl(u, 3);
  CHECK(loops_of(excl, current, expander) == std::vector<int>{1});
}

TEST_CASE("complement family of a union-closed family") {
  GroundSet u3(3);
  auto supersets_of_a = [](const Subset& s) { return s.test(0); };
  auto fam = complement_family(supersets_of_a, u3);
  // complements of supersets of {a} are exactly the subsets of {b, c}
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    Subset s = Subset::from_mask(3, mask);
    CHECK(fam->contains(s) == !s.test(0));
  }
  CHECK(validate_hereditary(*fam).valid);

  GroundSet u4(4);
  auto size_ge_2 = [](const Subset& s) { return s.count() >= 2; };
  auto fam2 = complement_family(size_ge_2, u4);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    Subset s = Subset::from_mask(4, mask);
    CHECK(fam2->contains(s) == (s.count() <= 2));
  }

  // complement of the complement restores membership
  auto inner = [&fam2](const Subset& s) { return fam2->contains(s.complemented()); };
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    Subset s = Subset::from_mask(4, mask);
    CHECK(inner(s.complemented()) == fam2->contains(s));
  }

  auto empty_missing = [](const Subset& s) { return s.count() == 1; };
  CHECK_THROWS_AS(complement_family(empty_missing, u3), DegenerateFamilyError);
}

TEST_CASE("shipped families stay hereditary under random parameters") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 80; ++round) {
    int n = 2 + static_cast<int>(rng() % 9);  // up to 10
    GroundSet u(n);
    std::shared_ptr<HereditaryFamily> family;
    switch (rng() % 7) {
      case 0:
        family = std::make_shared<CardinalityFamily>(u, static_cast<int>(rng() % (n + 1)));
        break;
      case 1: {
        std::vector<Value> w;
        for (int i = 0; i < n; ++i) w.push_back(Value(static_cast<long long>(rng() % 5), 2));
        family = std::make_shared<KnapsackFamily>(u, w, Value(static_cast<long long>(rng() % 6), 2));
        break;
      }
      case 2: {
        std::vector<Subset> obstructions;
        int m = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < m; ++i) {
          Subset o = Subset::empty(n);
          o.set(static_cast<int>(rng() % n));
          o.set(static_cast<int>(rng() % n));
          obstructions.push_back(o);
        }
        family = std::make_shared<ForbiddenSubsetsFamily>(u, obstructions);
        break;
      }
      case 3:
        family = std::make_shared<ExcludeElementFamily>(u, static_cast<int>(rng() % n));
        break;
      case 4: {
        int b = 1 + static_cast<int>(rng() % 3);
        std::vector<Subset> blocks(b, Subset::empty(n));
        for (int e = 0; e < n; ++e) blocks[rng() % b].set(e);
        std::erase_if(blocks, [](const Subset& s) { return s.none(); });
        std::vector<int> caps;
        for (const Subset& blk : blocks) {
          caps.push_back(static_cast<int>(rng() % (blk.count() + 1)));
        }
        family = std::make_shared<PartitionMatroidFamily>(u, blocks, caps);
        break;
      }
      case 5: {
        // random graph with n edges over up to n vertices
        WeightedGraph g;
        g.vertex_count = std::max(2, n);
        for (int e = 0; e < n; ++e) {
          int a = static_cast<int>(rng() % g.vertex_count);
          int b = static_cast<int>(rng() % g.vertex_count);
          if (a == b) b = (b + 1) % g.vertex_count;
          g.edges.push_back({a, b, Value(1)});
        }
        family = std::make_shared<GraphicMatroidFamily>(u, g);
        break;
      }
      default: {
        auto a = std::make_shared<CardinalityFamily>(u, static_cast<int>(rng() % (n + 1)));
        auto b = std::make_shared<ExcludeElementFamily>(u, static_cast<int>(rng() % n));
        family = std::make_shared<IntersectionFamily>(
            u, std::vector<std::shared_ptr<const HereditaryFamily>>{a, b});
        break;
      }
    }
    CHECK(validate_hereditary(*family).valid);
  }
}

TEST_CASE("matroid families satisfy the exchange axiom") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 15; ++round) {
    int n = 2 + static_cast<int>(rng() % 5);  // up to 6 ground elements
    GroundSet u(n);
    UniformMatroidFamily uniform(u, static_cast<int>(rng() % (n + 1)));
    CHECK(validate_matroid_exchange(uniform).valid);
    CHECK(validate_hereditary(uniform).valid);

    int b = 1 + static_cast<int>(rng() % 2);
    std::vector<Subset> blocks(b, Subset::empty(n));
    for (int e = 0; e < n; ++e) blocks[rng() % b].set(e);
    std::erase_if(blocks, [](const Subset& s) { return s.none(); });
    std::vector<int> caps;
    for (const Subset& blk : blocks) caps.push_back(static_cast<int>(rng() % (blk.count() + 1)));
    PartitionMatroidFamily pm(u, blocks, caps);
    CHECK(validate_matroid_exchange(pm).valid);
    CHECK(validate_hereditary(pm).valid);
  }

  // graphic matroid over a multigraph with a triangle and a pendant edge
  GroundSet edges(4);
  WeightedGraph g{4, {{0, 1, Value(1)}, {1, 2, Value(1)}, {2, 0, Value(1)}, {2, 3, Value(1)}}};
  GraphicMatroidFamily graphic(edges, g);
  CHECK(validate_matroid_exchange(graphic).valid);
  CHECK(validate_hereditary(graphic).valid);

  // a non-matroid hereditary family fails the exchange check:
  // {2} cannot be extended from the independent pair {0, 1}
  GroundSet u3(3);
  ForbiddenSubsetsFamily forb(u3, {Subset::of(3, {0, 2}), Subset::of(3, {1, 2})});
  CHECK(validate_hereditary(forb).valid);
  CHECK_FALSE(validate_matroid_exchange(forb).valid);
}
