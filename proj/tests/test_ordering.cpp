#include <doctest.h>

#include <stdexcept>

#include <array>
#include <random>

#include "hermin/contraction.hpp"
#include "hermin/families.hpp"
#include "hermin/ordering.hpp"
#include "hermin/reference.hpp"

using namespace hermin;

namespace {

WeightedGraph unit_path3() { return {3, {{0, 1, Value(1)}, {1, 2, Value(1)}}}; }

WeightedGraph unit_four_cycle() {
  return {4, {{0, 1, Value(1)}, {1, 2, Value(1)}, {2, 3, Value(1)}, {3, 0, Value(1)}}};
}

// Direct recheck of the legal-order inequality: the key of the element chosen
// at step i is no larger than any later element's key at the same prefix.
void check_minlex(const ContractedSystem& sys, const LegalOrder& ord) {
  const auto& seq = ord.sequence;
  Subset prefix = sys.block(seq[0]);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    Value chosen = sys.evaluate_expanded(prefix | sys.block(seq[i])) -
                   sys.evaluate_expanded(sys.block(seq[i]));
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      Value later = sys.evaluate_expanded(prefix | sys.block(seq[j])) -
                    sys.evaluate_expanded(sys.block(seq[j]));
      CHECK(chosen <= later);
    }
    prefix |= sys.block(seq[i]);
  }
}

}  // namespace

TEST_CASE("legal order on the unit path") {
  auto f = graph_cut(unit_path3());
  CardinalityFamily family(f->universe(), 2);
  ContractedSystem sys(*f, family);
  LegalOrder ord = legal_order(sys, 0);
  CHECK(ord.sequence == std::vector<int>{0, 1, 2});
  check_minlex(sys, ord);
}

TEST_CASE("legal order on the unit 4-cycle breaks ties to the smallest id") {
  auto f = graph_cut(unit_four_cycle());
  CardinalityFamily family(f->universe(), 3);
  ContractedSystem sys(*f, family);
  LegalOrder ord = legal_order(sys, 0);
  CHECK(ord.sequence == std::vector<int>{0, 1, 2, 3});
  check_minlex(sys, ord);
}

TEST_CASE("two current elements produce the forced order") {
  auto f = graph_cut({2, {{0, 1, Value(3)}}});
  CardinalityFamily family(f->universe(), 1);
  ContractedSystem sys(*f, family);
  CHECK(legal_order(sys, 1).sequence == std::vector<int>{1, 0});
  PendantPair pair = pendant_pair(sys);
  CHECK(pair.t == 0);
  CHECK(pair.u == 1);
  CHECK(pair.u_value == Value(3));
}

TEST_CASE("pendant pairs on the unit path and 4-cycle") {
  auto path = graph_cut(unit_path3());
  CardinalityFamily fam2(path->universe(), 2);
  ContractedSystem sys(*path, fam2);
  PendantPair pair = pendant_pair(sys);
  CHECK(pair.t == 1);
  CHECK(pair.u == 2);
  CHECK(pair.u_value == Value(1));  // min over {c}, {a,c}: values 1, 2
  CHECK(certify_pendant_pair(sys, pair.t, pair.u));
  CHECK_FALSE(certify_pendant_pair(sys, 0, 1));  // f({b}) = 2 > f({b,c}) = 1

  auto cyc = graph_cut(unit_four_cycle());
  CardinalityFamily fam3(cyc->universe(), 3);
  ContractedSystem sys2(*cyc, fam3);
  PendantPair pair2 = pendant_pair(sys2);
  CHECK(pair2.t == 2);
  CHECK(pair2.u == 3);
  CHECK(pair2.u_value == Value(2));  // min over {d},{a,d},{b,d},{a,b,d}: 2,2,4,2
  CHECK(certify_pendant_pair(sys2, pair2.t, pair2.u));
}

TEST_CASE("pendant pair avoiding an element with three current elements is forced") {
  auto path = graph_cut(unit_path3());
  CardinalityFamily family(path->universe(), 2);
  ContractedSystem sys(*path, family);
  PendantPair pair = pendant_pair(sys, std::optional<int>(1));
  CHECK(pair.t != 1);
  CHECK(pair.u != 1);
  CHECK_THROWS_AS(pendant_pair(sys, std::optional<int>(9)), std::invalid_argument);
}

TEST_CASE("avoiding needs at least three current elements") {
  auto f = graph_cut({2, {{0, 1, Value(1)}}});
  CardinalityFamily family(f->universe(), 1);
  ContractedSystem sys(*f, family);
  CHECK_THROWS_AS(pendant_pair(sys, std::optional<int>(0)), std::invalid_argument);
}

TEST_CASE("max-back order on the 4-cycle distance map") {
  auto graph = unit_four_cycle();
  auto d = shortest_path_distance_map(graph);
  auto f = boundary_function(d);
  CardinalityFamily family(f->universe(), 3);
  ContractedSystem sys(*f, family);

  LegalOrder ord = max_back_order(sys, *d, 0);
  CHECK(ord.sequence == std::vector<int>{0, 2, 1, 3});

  RizziFinder finder(*d);
  PendantPair pair = pendant_pair(sys, finder);
  CHECK(pair.t == 1);
  CHECK(pair.u == 3);
  CHECK(pair.u_value == Value(2));  // min over {d},{a,d},{c,d},{a,c,d}: all 2
  CHECK(certify_pendant_pair(sys, pair.t, pair.u));
}

TEST_CASE("queyranne pendant pairs certify on random contracted instances") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 60; ++round) {
    int n = 3 + static_cast<int>(rng() % 6);  // up to 8
    auto klass = (round % 2 == 0) ? FunctionClass::GraphCut : FunctionClass::HypergraphCut;
    RandomInstance inst = random_instance(rng(), n, klass, FamilyClass::Cardinality);
    ContractedSystem sys(*inst.function, *inst.family);
    int contractions = static_cast<int>(rng() % (n - 2));
    for (int c = 0; c < contractions; ++c) {
      const auto& active = sys.active();
      if (active.size() < 3) break;
      int a = active[rng() % active.size()];
      int b = active[rng() % active.size()];
      if (a == b) continue;
      sys.contract_into(std::array{a, b}, a);
    }
    PendantPair pair = pendant_pair(sys);
    CHECK(certify_pendant_pair(sys, pair.t, pair.u));
    check_minlex(sys, legal_order(sys, sys.active().front()));
  }
}

TEST_CASE("max-back pendant pairs certify on random distance maps") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 40; ++round) {
    int n = 3 + static_cast<int>(rng() % 5);  // up to 7
    auto graph = random_connected_weighted_graph(rng(), n);
    auto d = shortest_path_distance_map(graph);
    auto f = boundary_function(d);
    CardinalityFamily family(f->universe(), std::max(1, n - 1));
    ContractedSystem sys(*f, family);
    int contractions = static_cast<int>(rng() % (n - 2));
    for (int c = 0; c < contractions; ++c) {
      const auto& active = sys.active();
      if (active.size() < 3) break;
      int a = active[rng() % active.size()];
      int b = active[rng() % active.size()];
      if (a == b) continue;
      sys.contract_into(std::array{a, b}, a);
    }
    RizziFinder finder(*d);
    PendantPair pair = pendant_pair(sys, finder);
    CHECK(certify_pendant_pair(sys, pair.t, pair.u));
  }
}

TEST_CASE("one legal order costs at most m^2 + m oracle calls") {
  std::mt19937_64 rng(47);
  for (int n : {3, 5, 8, 12}) {
    RandomInstance inst = random_instance(rng(), n, FunctionClass::GraphCut,
                                          FamilyClass::Cardinality);
    ContractedSystem sys(*inst.function, *inst.family);
    std::uint64_t before = inst.function->calls();
    legal_order(sys, 0);
    std::uint64_t used = inst.function->calls() - before;
    CHECK(used <= static_cast<std::uint64_t>(n) * n + n);
  }
}
