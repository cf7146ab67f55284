#include "hermin/families.hpp"

#include <numeric>
#include <stdexcept>

#include "hermin/errors.hpp"

namespace hermin {

CardinalityFamily::CardinalityFamily(GroundSet universe, int k)
    : HereditaryFamily(std::move(universe)), k_(k) {
  if (k < 0) throw std::invalid_argument("cardinality bound must be >= 0");
}

KnapsackFamily::KnapsackFamily(GroundSet universe, std::vector<Value> weights, Value budget)
    : HereditaryFamily(std::move(universe)), weights_(std::move(weights)), budget_(budget) {
  if (static_cast<int>(weights_.size()) != this->universe().size()) {
    throw std::invalid_argument("knapsack needs one weight per element");
  }
  for (const auto& w : weights_) {
    if (w.is_negative()) throw std::invalid_argument("knapsack weights must be >= 0");
  }
  if (budget_.is_negative()) {
    throw DegenerateFamilyError("knapsack budget < 0 excludes the empty set");
  }
}

bool KnapsackFamily::contains(const Subset& s) const {
  Value total;
  for (int e : s.elements()) {
    total += weights_[e];
    if (total > budget_) return false;
  }
  return true;
}

UniformMatroidFamily::UniformMatroidFamily(GroundSet universe, int k)
    : HereditaryFamily(std::move(universe)), k_(k) {
  if (k < 0) throw std::invalid_argument("uniform matroid rank must be >= 0");
}

PartitionMatroidFamily::PartitionMatroidFamily(GroundSet universe, std::vector<Subset> blocks,
                                               std::vector<int> capacities)
    : HereditaryFamily(std::move(universe)),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)) {
  if (blocks_.size() != capacities_.size()) {
    throw std::invalid_argument("partition matroid needs one capacity per block");
  }
  Subset covered = Subset::empty(this->universe().size());
  for (const auto& b : blocks_) {
    if (b.universe_size() != this->universe().size()) {
      throw std::invalid_argument("partition matroid block over wrong universe");
    }
    if (b.none()) throw std::invalid_argument("partition matroid blocks must be nonempty");
    if (covered.intersects(b)) {
      throw std::invalid_argument("partition matroid blocks must be disjoint");
    }
    covered |= b;
  }
  if (!covered.is_full()) {
    throw std::invalid_argument("partition matroid blocks must cover the universe");
  }
  for (int c : capacities_) {
    if (c < 0) throw std::invalid_argument("partition matroid capacities must be >= 0");
  }
}

bool PartitionMatroidFamily::contains(const Subset& s) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if ((s & blocks_[i]).count() > capacities_[i]) return false;
  }
  return true;
}

GraphicMatroidFamily::GraphicMatroidFamily(GroundSet universe, WeightedGraph graph)
    : HereditaryFamily(std::move(universe)), graph_(std::move(graph)) {
  graph_.validate();
  if (static_cast<int>(graph_.edges.size()) != this->universe().size()) {
    throw std::invalid_argument("graphic matroid: ground set size must equal edge count");
  }
}

bool GraphicMatroidFamily::contains(const Subset& s) const {
  // Acyclicity via union-find over the picked edges.
  std::vector<int> parent(graph_.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int e : s.elements()) {
    int ru = find(graph_.edges[e].u);
    int rv = find(graph_.edges[e].v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

ForbiddenSubsetsFamily::ForbiddenSubsetsFamily(GroundSet universe, std::vector<Subset> obstructions)
    : HereditaryFamily(std::move(universe)), obstructions_(std::move(obstructions)) {
  for (const auto& o : obstructions_) {
    if (o.universe_size() != this->universe().size()) {
      throw std::invalid_argument("obstruction over wrong universe");
    }
    if (o.none()) {
      throw DegenerateFamilyError("an empty obstruction excludes every set");
    }
  }
}

bool ForbiddenSubsetsFamily::contains(const Subset& s) const {
  for (const auto& o : obstructions_) {
    if (s.contains_all(o)) return false;
  }
  return true;
}

ExcludeElementFamily::ExcludeElementFamily(GroundSet universe, int excluded)
    : HereditaryFamily(std::move(universe)), excluded_(excluded) {
  if (excluded < 0 || excluded >= this->universe().size()) {
    throw std::invalid_argument("excluded element out of range");
  }
}

IntersectionFamily::IntersectionFamily(GroundSet universe,
                                       std::vector<std::shared_ptr<const HereditaryFamily>> parts)
    : HereditaryFamily(std::move(universe)), parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("intersection needs at least one part");
  for (const auto& p : parts_) {
    if (p->universe().size() != this->universe().size()) {
      throw std::invalid_argument("intersection parts must share the universe");
    }
  }
}

bool IntersectionFamily::contains(const Subset& s) const {
  for (const auto& p : parts_) {
    if (!p->contains(s)) return false;
  }
  return true;
}

std::vector<int> loops_of(const HereditaryFamily& family, std::span<const int> elements,
                          const std::function<Subset(int)>& expander) {
  std::vector<int> out;
  for (int v : elements) {
    if (!family.contains(expander(v))) out.push_back(v);
  }
  return out;
}

namespace {

class ComplementFamily final : public HereditaryFamily {
 public:
  ComplementFamily(GroundSet universe, std::function<bool(const Subset&)> co_contains)
      : HereditaryFamily(std::move(universe)), co_contains_(std::move(co_contains)) {}

  bool contains(const Subset& s) const override { return co_contains_(s.complemented()); }

 private:
  std::function<bool(const Subset&)> co_contains_;
};

}  // namespace

std::shared_ptr<HereditaryFamily> complement_family(
    std::function<bool(const Subset&)> union_closed_contains, GroundSet universe) {
  if (!union_closed_contains(Subset::full(universe.size()))) {
    throw DegenerateFamilyError(
        "complement_family: the union-closed family must contain the full set");
  }
  return std::make_shared<ComplementFamily>(std::move(universe), std::move(union_closed_contains));
}

ValidationResult validate_matroid_exchange(const HereditaryFamily& family,
                                           ValidationOptions opts) {
  int n = family.universe().size();
  if (n > opts.max_universe) {
    throw EnumerationCapExceeded("validate_matroid_exchange: universe of size " +
                                 std::to_string(n) + " is too large to enumerate (cap " +
                                 std::to_string(opts.max_universe) + ")");
  }
  std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> indep(total);
  for (std::uint64_t m = 0; m < total; ++m) indep[m] = family.contains(Subset::from_mask(n, m));
  for (std::uint64_t a = 0; a < total; ++a) {
    if (!indep[a]) continue;
    for (std::uint64_t b = 0; b < total; ++b) {
      if (!indep[b] || std::popcount(a) >= std::popcount(b)) continue;
      bool extended = false;
      std::uint64_t candidates = b & ~a;
      while (candidates != 0) {
        std::uint64_t bit = candidates & (~candidates + 1);
        candidates &= candidates - 1;
        if (indep[a | bit]) {
          extended = true;
          break;
        }
      }
      if (!extended) {
        return {false, PairWitness{Subset::from_mask(n, a), Subset::from_mask(n, b)}};
      }
    }
  }
  return {};
}

}  // namespace hermin
