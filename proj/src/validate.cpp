#include "hermin/validate.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "hermin/errors.hpp"

namespace hermin {

namespace {

void require_cap(int n, const ValidationOptions& opts, const char* what) {
  if (n > opts.max_universe) {
    throw EnumerationCapExceeded(std::string(what) + ": universe of size " + std::to_string(n) +
                                 " is too large to enumerate (cap " +
                                 std::to_string(opts.max_universe) + ")");
  }
}

}  // namespace

ValidationResult validate_symmetric(const SetFunction& f, ValidationOptions opts) {
  int n = f.universe().size();
  require_cap(n, opts, "validate_symmetric");
  std::uint64_t total = std::uint64_t{1} << n;
  // Tabulate once; symmetry pairs each mask with its complement.
  std::vector<Value> table(total);
  for (std::uint64_t m = 0; m < total; ++m) table[m] = f(Subset::from_mask(n, m));
  std::uint64_t full = total - 1;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (table[m] != table[full & ~m]) {
      return {false, PairWitness{Subset::from_mask(n, m), Subset::from_mask(n, full & ~m)}};
    }
  }
  return {};
}

namespace {

enum class PairKind { All, Crossing, Intersecting };

ValidationResult check_pairs(const SetFunction& f, PairKind kind, bool posimodular,
                             const ValidationOptions& opts, const char* what) {
  int n = f.universe().size();
  require_cap(n, opts, what);
  std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t full = total - 1;
  std::vector<Value> table(total);
  for (std::uint64_t m = 0; m < total; ++m) table[m] = f(Subset::from_mask(n, m));
  for (std::uint64_t a = 0; a < total; ++a) {
    for (std::uint64_t b = a + 1; b < total; ++b) {
      std::uint64_t only_a = a & ~b;
      std::uint64_t only_b = b & ~a;
      std::uint64_t both = a & b;
      std::uint64_t outside = full & ~(a | b);
      if (kind == PairKind::Crossing &&
          (only_a == 0 || only_b == 0 || both == 0 || outside == 0)) {
        continue;
      }
      if (kind == PairKind::Intersecting && (only_a == 0 || only_b == 0 || both == 0)) {
        continue;
      }
      Value lhs = posimodular ? table[only_a] + table[only_b] : table[a | b] + table[both];
      Value rhs = table[a] + table[b];
      if (lhs > rhs) {
        return {false, PairWitness{Subset::from_mask(n, a), Subset::from_mask(n, b)}};
      }
    }
  }
  return {};
}

}  // namespace

ValidationResult validate_submodular(const SetFunction& f, ValidationOptions opts) {
  return check_pairs(f, PairKind::All, false, opts, "validate_submodular");
}

ValidationResult validate_crossing_submodular(const SetFunction& f, ValidationOptions opts) {
  return check_pairs(f, PairKind::Crossing, false, opts, "validate_crossing_submodular");
}

ValidationResult validate_intersecting_posimodular(const SetFunction& f, ValidationOptions opts) {
  return check_pairs(f, PairKind::Intersecting, true, opts, "validate_intersecting_posimodular");
}

ValidationResult validate_hereditary(const HereditaryFamily& family, ValidationOptions opts) {
  int n = family.universe().size();
  require_cap(n, opts, "validate_hereditary");
  std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> member(total);
  for (std::uint64_t m = 0; m < total; ++m) member[m] = family.contains(Subset::from_mask(n, m));
  for (std::uint64_t s = 0; s < total; ++s) {
    if (!member[s]) continue;
    // Drop one element at a time; closure under single deletions is closure.
    std::uint64_t rest = s;
    while (rest != 0) {
      std::uint64_t bit = rest & (~rest + 1);
      rest &= rest - 1;
      if (!member[s & ~bit]) {
        return {false, PairWitness{Subset::from_mask(n, s & ~bit), Subset::from_mask(n, s)}};
      }
    }
  }
  return {};
}

ValidationResult validate_union_closed(const std::function<bool(const Subset&)>& contains,
                                       const GroundSet& universe, ValidationOptions opts) {
  int n = universe.size();
  require_cap(n, opts, "validate_union_closed");
  std::uint64_t total = std::uint64_t{1} << n;
  std::vector<bool> member(total);
  for (std::uint64_t m = 0; m < total; ++m) member[m] = contains(Subset::from_mask(n, m));
  for (std::uint64_t a = 0; a < total; ++a) {
    if (!member[a]) continue;
    for (std::uint64_t b = a + 1; b < total; ++b) {
      if (member[b] && !member[a | b]) {
        return {false, PairWitness{Subset::from_mask(n, a), Subset::from_mask(n, b)}};
      }
    }
  }
  return {};
}

}  // namespace hermin
