#pragma once

#include <functional>
#include <optional>

#include "hermin/oracles.hpp"

namespace hermin {

/// Exhaustive validators for the structural properties the solver assumes.
/// These are test and verification tools, never solver dependencies, so they
/// enumerate the full powerset and refuse universes beyond the cap.
struct ValidationOptions {
  int max_universe = 16;
};

/// A pair of sets violating the checked inequality, when any.
struct PairWitness {
  Subset a;
  Subset b;
};

struct ValidationResult {
  bool valid = true;
  std::optional<PairWitness> witness;

  explicit operator bool() const { return valid; }
};

/// f(A) == f(V \ A) for every A. Witness: (A, V \ A).
ValidationResult validate_symmetric(const SetFunction& f, ValidationOptions opts = {});

/// f(A|B) + f(A&B) <= f(A) + f(B) for every pair.
ValidationResult validate_submodular(const SetFunction& f, ValidationOptions opts = {});

/// The submodular inequality over crossing pairs only
/// (A\B, B\A, A&B, V\(A|B) all nonempty).
ValidationResult validate_crossing_submodular(const SetFunction& f, ValidationOptions opts = {});

/// f(A\B) + f(B\A) <= f(A) + f(B) over intersecting pairs
/// (A\B, B\A, A&B all nonempty).
ValidationResult validate_intersecting_posimodular(const SetFunction& f,
                                                   ValidationOptions opts = {});

/// Downward closure: S in I and T subseteq S imply T in I.
/// Witness: (T, S) with S contained and T missing.
ValidationResult validate_hereditary(const HereditaryFamily& family, ValidationOptions opts = {});

/// A and B in the family imply A|B in the family. Witness: (A, B).
ValidationResult validate_union_closed(const std::function<bool(const Subset&)>& contains,
                                       const GroundSet& universe, ValidationOptions opts = {});

}  // namespace hermin
