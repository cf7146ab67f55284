#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "hermin/families.hpp"
#include "hermin/ordering.hpp"

namespace hermin {

/// A feasible set recorded during the contraction loop, with its value and
/// insertion rank ("added first" breaks value ties).
struct Candidate {
  Subset set;
  Value value;
  std::size_t order_index;
};

struct Solution {
  Subset set;
  Value value;
  std::uint64_t oracle_calls;
};

/// All minimal optimal solutions; they are pairwise disjoint.
struct SolutionFamily {
  std::vector<Subset> sets;
  Value value;  // the common optimum
  std::uint64_t oracle_calls;
};

/// One inclusionwise-minimal minimizer of f over the nonempty members of the
/// family, for symmetric crossing-submodular f (default finder) or for the
/// boundary function of a distance map (RizziFinder). O(n^3) underlying
/// oracle calls.
///
/// Throws TrivialFamilyError when V itself is feasible (the termination
/// argument needs a nontrivial family; see unconstrained_min),
/// DegenerateFamilyError when the empty set is not, and InfeasibleError when
/// every singleton is a loop.
Solution find_optimal(const SetFunction& f, const HereditaryFamily& family,
                      const PendantPairFinder& finder = QueyranneFinder{});

/// The collection of all minimal optimal solutions, in O(n^3) oracle calls.
SolutionFamily find_minimals(const SetFunction& f, const HereditaryFamily& family,
                             const PendantPairFinder& finder = QueyranneFinder{});

/// Symmetric extension of an intersecting-submodular, intersecting-posimodular
/// function to a universe with one extra element e:
/// g(X) = f(X) when e is outside X, and g(X) = f(V \ X) otherwise. The result
/// is symmetric and crossing submodular, and minimizing it over any hereditary
/// family on V yields exactly the minimizers of f.
std::shared_ptr<SetFunction> antirestriction(std::shared_ptr<const SetFunction> f);

/// Hereditary family on V+e whose members are the f-universe members not
/// containing the extra element.
std::shared_ptr<HereditaryFamily> extend_family(std::shared_ptr<const HereditaryFamily> family);

/// Solve (V, f, I) for posimodular (not necessarily symmetric) f through the
/// antirestriction; results are reported over the original universe.
Solution find_optimal_via_antirestriction(std::shared_ptr<const SetFunction> f,
                                          std::shared_ptr<const HereditaryFamily> family);
SolutionFamily find_minimals_via_antirestriction(std::shared_ptr<const SetFunction> f,
                                                 std::shared_ptr<const HereditaryFamily> family);

/// All inclusionwise-maximal minimizers of the contraction
/// f(X) = h(X | (V \ T)) - h(V \ T), X subseteq T, over the members of a
/// co-hereditary family on T other than T itself. Realized by minimizing
/// h(X) - h(V \ T) over the hereditary family of complements within T, via
/// the antirestriction. `co_contains` receives subsets of T as subsets of
/// h's universe.
///
/// The family must be closed under supersets within T (which implies closure
/// under union); mere union-closure does not make the complement family
/// hereditary and voids the solver contract.
SolutionFamily maximal_minimizers_of_contraction(
    const SetFunction& h, const Subset& t_set,
    const std::function<bool(const Subset&)>& co_contains);

/// Minimum of f over nontrivial sets (empty and V excluded), for symmetric
/// crossing-submodular f: by symmetry either a minimizer or its complement
/// avoids element 0, so one constrained run suffices. Requires |V| >= 2.
Solution unconstrained_min(const SetFunction& f,
                           const PendantPairFinder& finder = QueyranneFinder{});

}  // namespace hermin
