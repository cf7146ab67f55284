#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hermin/contraction.hpp"
#include "hermin/functions.hpp"

namespace hermin {

/// Permutation of the current elements of a ContractedSystem; the first entry
/// is the designated start, the last two form the produced pendant pair.
struct LegalOrder {
  std::vector<int> sequence;

  std::pair<int, int> last_two() const;
};

struct PendantPair {
  int t;
  int u;
  Value u_value;  // f'({u}), the candidate value
};

/// Order rule: either Queyranne's greedy key over the contracted function, or
/// the max-back key over a distance map. Both work on the blocks of a
/// ContractedSystem, so they apply to any fusion of the underlying function.
class PendantPairFinder {
 public:
  virtual ~PendantPairFinder() = default;
  virtual LegalOrder order(const ContractedSystem& sys, int first) const = 0;
};

/// Greedy order minimizing f'(W + v) - f'({v}) at each step; the last two
/// elements form a pendant pair whenever the underlying function is symmetric
/// and crossing submodular. Ties break to the smallest element id. Costs at
/// most m^2 + m underlying evaluations for m current elements; singleton
/// values are cached within one order construction only.
class QueyranneFinder final : public PendantPairFinder {
 public:
  LegalOrder order(const ContractedSystem& sys, int first) const override;
};

/// Greedy order maximizing d(W, {v}) at each step, for a symmetric, monotone
/// and consistent distance map; the last two elements form a pendant pair for
/// f(S) = d(S, complement). Ties break to the smallest element id.
class RizziFinder final : public PendantPairFinder {
 public:
  explicit RizziFinder(const DistanceMap& d) : d_(&d) {}

  LegalOrder order(const ContractedSystem& sys, int first) const override;

 private:
  const DistanceMap* d_;
};

/// Convenience wrapper building a Queyranne legal order.
LegalOrder legal_order(const ContractedSystem& sys, int first);

/// Max-back order for a distance map.
LegalOrder max_back_order(const ContractedSystem& sys, const DistanceMap& d, int first);

/// Pendant pair from a legal order starting at `avoid` (so neither returned
/// element is the avoided one; requires at least three current elements), or
/// at the smallest current element when no avoidance is requested.
PendantPair pendant_pair(const ContractedSystem& sys, const PendantPairFinder& finder,
                         std::optional<int> avoid = std::nullopt);
PendantPair pendant_pair(const ContractedSystem& sys, std::optional<int> avoid = std::nullopt);

}  // namespace hermin
