#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "hermin/errors.hpp"
#include "hermin/reference.hpp"
#include "hermin/solver.hpp"

using namespace hermin;

namespace {

// A hereditary family given by an explicit membership bitmap over 2^n masks.
class BitmapFamily final : public HereditaryFamily {
 public:
  BitmapFamily(GroundSet universe, std::vector<bool> member)
      : HereditaryFamily(std::move(universe)), member_(std::move(member)) {}

  bool contains(const Subset& s) const override { return member_[s.to_mask()]; }

 private:
  std::vector<bool> member_;
};

// All downward-closed membership bitmaps on n elements that contain the
// empty set, exclude the full set, and keep at least one singleton.
std::vector<std::vector<bool>> all_solvable_families(int n) {
  int subsets = 1 << n;
  std::vector<std::vector<bool>> out;
  for (std::uint64_t bitmap = 0; bitmap < (std::uint64_t{1} << subsets); ++bitmap) {
    auto member = [&](int mask) { return ((bitmap >> mask) & 1) != 0; };
    if (!member(0) || member(subsets - 1)) continue;
    bool closed = true;
    for (int mask = 0; mask < subsets && closed; ++mask) {
      if (!member(mask)) continue;
      for (int b = 0; b < n; ++b) {
        if ((mask >> b) & 1) {
          if (!member(mask & ~(1 << b))) {
            closed = false;
            break;
          }
        }
      }
    }
    if (!closed) continue;
    bool feasible = false;
    for (int b = 0; b < n; ++b) feasible = feasible || member(1 << b);
    if (!feasible) continue;
    std::vector<bool> bits(subsets);
    for (int mask = 0; mask < subsets; ++mask) bits[mask] = member(mask);
    out.push_back(std::move(bits));
  }
  return out;
}

std::vector<Subset> sorted_sets(std::vector<Subset> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

void check_against_brute(const SetFunction& f, const HereditaryFamily& family) {
  BruteForceReport truth = brute_force(f, family);
  Solution sol = find_optimal(f, family);
  SolutionFamily fam = find_minimals(f, family);
  CHECK(sol.value == truth.min_value);
  CHECK(std::find(truth.minimal_minimizers.begin(), truth.minimal_minimizers.end(), sol.set) !=
        truth.minimal_minimizers.end());
  CHECK(sorted_sets(fam.sets) == sorted_sets(truth.minimal_minimizers));
}

}  // namespace

// Every hereditary family on 3 and 4 elements (there are finitely many),
// against a handful of symmetric submodular functions. Nothing is sampled;
// this covers the whole constraint space at small n.
TEST_CASE("solver is exact for every hereditary family on 3 and 4 elements") {
  for (int n : {3, 4}) {
    std::vector<std::shared_ptr<SetFunction>> functions;
    std::mt19937_64 rng(1234 + n);
    for (int i = 0; i < 3; ++i) {
      functions.push_back(graph_cut(random_weighted_graph(rng(), n, 3 * n, false)));
    }
    WeightedHypergraph h;
    h.vertex_count = n;
    h.hyperedges.push_back({Subset::full(n), Value(2)});
    h.hyperedges.push_back({Subset::of(n, {0, 1}), Value(1, 2)});
    functions.push_back(hypergraph_cut(h));

    auto families = all_solvable_families(n);
    CHECK(families.size() > 10);
    for (const auto& bits : families) {
      BitmapFamily family(GroundSet(n), bits);
      for (const auto& f : functions) {
        check_against_brute(*f, family);
      }
    }
  }
}

// The distance-map route at the solver level: random connected graphs with
// random hereditary families, max-back orders end to end.
TEST_CASE("rizzi route matches brute force on random distance instances") {
  std::mt19937_64 rng(4321);
  const FamilyClass kinds[] = {FamilyClass::Cardinality, FamilyClass::Knapsack,
                               FamilyClass::ForbiddenSubsets};
  for (int round = 0; round < 50; ++round) {
    int n = 3 + static_cast<int>(rng() % 5);  // up to 7
    auto graph = random_connected_weighted_graph(rng(), n);
    auto d = shortest_path_distance_map(graph);
    auto f = boundary_function(d);
    RandomInstance shell = random_instance(rng(), n, FunctionClass::GraphCut,
                                           kinds[round % 3]);
    const HereditaryFamily& family = *shell.family;

    BruteForceReport truth = brute_force(*f, family);
    RizziFinder finder(*d);
    Solution sol = find_optimal(*f, family, finder);
    SolutionFamily fam = find_minimals(*f, family, finder);
    CHECK(sol.value == truth.min_value);
    CHECK(std::find(truth.minimal_minimizers.begin(), truth.minimal_minimizers.end(),
                    sol.set) != truth.minimal_minimizers.end());
    CHECK(sorted_sets(fam.sets) == sorted_sets(truth.minimal_minimizers));
    for (std::size_t a = 0; a < fam.sets.size(); ++a) {
      for (std::size_t b = a + 1; b < fam.sets.size(); ++b) {
        CHECK(fam.sets[a].disjoint_from(fam.sets[b]));
      }
    }
  }
}

TEST_CASE("value arithmetic refuses to wrap around") {
  Value big(std::numeric_limits<long long>::max() / 2);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(big + big + big, std::overflow_error);
  // large but representable operands stay exact
  Value a(1ll << 40, 3);
  Value b(1ll << 40, 7);
  CHECK((a + b) - b == a);
  CHECK((a * Value(21)) / Value(21) == a);
}
