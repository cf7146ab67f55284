#include "hermin/solver.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "hermin/check.hpp"
#include "hermin/errors.hpp"

namespace hermin {

namespace {

void require_solvable(const SetFunction& f, const HereditaryFamily& family) {
  int n = f.universe().size();
  if (family.universe().size() != n) {
    throw std::invalid_argument("function and family universes differ");
  }
  if (!family.contains(Subset::empty(n))) {
    throw DegenerateFamilyError("the family does not contain the empty set");
  }
  if (family.contains(Subset::full(n))) {
    throw TrivialFamilyError(
        "the family contains the whole ground set; the constrained algorithm "
        "needs a nontrivial family (unconstrained_min may be what you want)");
  }
}

struct CandidatePool {
  std::vector<Candidate> items;
  const HereditaryFamily* family;

  void add(Subset set, Value value) {
    HERMIN_ASSERT(!set.none());
    HERMIN_ASSERT(family->contains(set));
    items.push_back(Candidate{std::move(set), std::move(value), items.size()});
  }

  const Candidate& best() const {
    HERMIN_ASSERT(!items.empty());
    const Candidate* best = &items.front();
    for (const Candidate& c : items) {
      if (c.value < best->value) best = &c;  // strict: earliest insertion wins ties
    }
    return *best;
  }
};

}  // namespace

Solution find_optimal(const SetFunction& f, const HereditaryFamily& family,
                      const PendantPairFinder& finder) {
  require_solvable(f, family);
  std::uint64_t calls_before = f.calls();

  ContractedSystem sys(f, family);
  std::vector<int> loops = sys.active_loops();
  if (static_cast<int>(loops.size()) == f.universe().size()) {
    throw InfeasibleError("every element is a loop: the family has no nonempty member");
  }

  CandidatePool pool{{}, &family};

  if (loops.empty()) {
    // Loopless phase: plain pendant pairs until a contraction creates a loop.
    for (;;) {
      PendantPair pair = pendant_pair(sys, finder, std::nullopt);
      pool.add(sys.block(pair.u), pair.u_value);
      std::array merged{pair.t, pair.u};
      sys.contract_into(merged, pair.t);
      // Only the fresh block can have become infeasible.
      if (sys.is_loop(pair.t)) break;
      HERMIN_ASSERT(sys.active().size() >= 2);
    }
  }
  sys.absorb_loops();

  // Sink phase: pendant pairs avoiding the sink; infeasible merges fall in.
  while (sys.active().size() >= 2) {
    HERMIN_ASSERT(sys.active_loops().empty());
    PendantPair pair = pendant_pair(sys, finder, sys.sink());
    pool.add(sys.block(pair.u), pair.u_value);
    std::array merged{pair.t, pair.u};
    if (sys.member(merged)) {
      sys.contract_into(merged, pair.t);
    } else {
      sys.absorb_into_sink(merged);
    }
  }
  if (sys.active().size() == 1) {
    int last = sys.active().front();
    const std::array only{last};
    pool.add(sys.block(last), sys.evaluate(only));
  }

  const Candidate& best = pool.best();
  return Solution{best.set, best.value, f.calls() - calls_before};
}

SolutionFamily find_minimals(const SetFunction& f, const HereditaryFamily& family,
                             const PendantPairFinder& finder) {
  std::uint64_t calls_before = f.calls();
  Solution opt = find_optimal(f, family, finder);
  const Value& best_value = opt.value;

  ContractedSystem sys(f, family);
  std::vector<int> into_sink = sys.active_loops();
  for (int v : opt.set.elements()) into_sink.push_back(v);  // disjoint from the loops
  sys.absorb_into_sink(into_sink);
  sys.force_sink_loop();

  std::vector<Subset> found{opt.set};
  // Remaining optimal singletons join the output and fall into the sink.
  for (int v : std::vector<int>(sys.active())) {
    const std::array only{v};
    if (sys.evaluate(only) == best_value) {
      found.push_back(sys.block(v));
      sys.absorb_into_sink(only);
    }
  }

  // Invariant from here on: f'({v}) > best_value for all active v, and the
  // sink is the only loop.
  while (sys.active().size() >= 2) {
    HERMIN_ASSERT(sys.active_loops().empty());
    PendantPair pair = pendant_pair(sys, finder, sys.sink());
    std::array merged{pair.t, pair.u};
    if (sys.member(merged)) {
      Value pair_value = sys.evaluate(merged);
      if (pair_value < best_value) {
        // A feasible set below the optimum means the pendant-pair contract
        // was violated: the function does not match the chosen order rule.
        throw std::logic_error(
            "pendant-pair contract violated; the function is not symmetric "
            "crossing submodular (or the adapter does not fit it)");
      }
      if (pair_value == best_value) {
        found.push_back(sys.expand(merged));
        sys.absorb_into_sink(merged);
      } else {
        sys.contract_into(merged, pair.t);
      }
    } else {
      sys.absorb_into_sink(merged);
    }
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = i + 1; j < found.size(); ++j) {
      if (!found[i].disjoint_from(found[j])) {
        throw std::logic_error(
            "overlapping minimal solutions; the function does not fit the "
            "chosen order rule");
      }
    }
  }
  return SolutionFamily{std::move(found), best_value, f.calls() - calls_before};
}

namespace {

class AntirestrictionFunction final : public SetFunction {
 public:
  AntirestrictionFunction(GroundSet extended, std::shared_ptr<const SetFunction> base)
      : SetFunction(std::move(extended)), base_(std::move(base)) {}

  Value evaluate(const Subset& s) const override {
    count_call();
    int extra = universe().size() - 1;
    int n = base_->universe().size();
    Subset inner = Subset::empty(n);
    for (int e : s.elements()) {
      if (e != extra) inner.set(e);
    }
    if (s.test(extra)) inner = inner.complemented();
    return base_->evaluate(inner);
  }

 private:
  std::shared_ptr<const SetFunction> base_;
};

GroundSet extended_universe(const GroundSet& base) {
  int n = base.size();
  if (!base.has_labels()) return GroundSet(n + 1);
  std::vector<std::string> labels;
  labels.reserve(n + 1);
  for (int i = 0; i < n; ++i) labels.push_back(base.label(i));
  std::string extra = "+";
  while (std::find(labels.begin(), labels.end(), extra) != labels.end()) extra += "+";
  labels.push_back(extra);
  return GroundSet(n + 1, std::move(labels));
}

class ExtendedFamily final : public HereditaryFamily {
 public:
  ExtendedFamily(GroundSet extended, std::shared_ptr<const HereditaryFamily> base)
      : HereditaryFamily(std::move(extended)), base_(std::move(base)) {}

  bool contains(const Subset& s) const override {
    int extra = universe().size() - 1;
    if (s.test(extra)) return false;
    Subset inner = Subset::empty(base_->universe().size());
    for (int e : s.elements()) inner.set(e);
    return base_->contains(inner);
  }

 private:
  std::shared_ptr<const HereditaryFamily> base_;
};

Subset shrink_to(const Subset& s, int n) {
  Subset out = Subset::empty(n);
  for (int e : s.elements()) {
    HERMIN_ASSERT(e < n);
    out.set(e);
  }
  return out;
}

}  // namespace

std::shared_ptr<SetFunction> antirestriction(std::shared_ptr<const SetFunction> f) {
  GroundSet extended = extended_universe(f->universe());
  return std::make_shared<AntirestrictionFunction>(std::move(extended), std::move(f));
}

std::shared_ptr<HereditaryFamily> extend_family(std::shared_ptr<const HereditaryFamily> family) {
  GroundSet extended = extended_universe(family->universe());
  return std::make_shared<ExtendedFamily>(std::move(extended), std::move(family));
}

Solution find_optimal_via_antirestriction(std::shared_ptr<const SetFunction> f,
                                          std::shared_ptr<const HereditaryFamily> family) {
  int n = f->universe().size();
  std::uint64_t calls_before = f->calls();
  auto g = antirestriction(f);
  auto extended = extend_family(std::move(family));
  Solution sol = find_optimal(*g, *extended);
  return Solution{shrink_to(sol.set, n), sol.value, f->calls() - calls_before};
}

SolutionFamily find_minimals_via_antirestriction(std::shared_ptr<const SetFunction> f,
                                                 std::shared_ptr<const HereditaryFamily> family) {
  int n = f->universe().size();
  std::uint64_t calls_before = f->calls();
  auto g = antirestriction(f);
  auto extended = extend_family(std::move(family));
  SolutionFamily fam = find_minimals(*g, *extended);
  std::vector<Subset> sets;
  sets.reserve(fam.sets.size());
  for (const Subset& s : fam.sets) sets.push_back(shrink_to(s, n));
  return SolutionFamily{std::move(sets), fam.value, f->calls() - calls_before};
}

SolutionFamily maximal_minimizers_of_contraction(
    const SetFunction& h, const Subset& t_set,
    const std::function<bool(const Subset&)>& co_contains) {
  const GroundSet& big = h.universe();
  if (t_set.universe_size() != big.size()) {
    throw std::invalid_argument("T must be a subset of the function's universe");
  }
  if (t_set.none()) throw std::invalid_argument("T must be nonempty");
  if (!co_contains(t_set)) {
    throw DegenerateFamilyError(
        "the union-closed family must contain T (the complement family needs the empty set)");
  }
  if (co_contains(Subset::empty(big.size()))) {
    throw TrivialFamilyError(
        "the union-closed family contains the empty set, so the complement family is trivial");
  }

  std::uint64_t calls_before = h.calls();
  std::vector<int> t_elements = t_set.elements();
  int tau = static_cast<int>(t_elements.size());
  std::vector<std::string> labels;
  labels.reserve(tau);
  for (int e : t_elements) labels.push_back(big.label(e));
  GroundSet t_universe(tau, std::move(labels));

  auto lift = [&t_elements, &big](const Subset& packed) {
    Subset out = Subset::empty(big.size());
    for (int e : packed.elements()) out.set(t_elements[e]);
    return out;
  };

  // reversed_f(X) = h(X) - h(V \ T): intersecting submodular and posimodular,
  // so the antirestriction route applies.
  Value offset = h(t_set.complemented());
  auto reversed_f = std::make_shared<CallbackFunction>(
      t_universe, [&h, lift, offset](const Subset& s) { return h(lift(s)) - offset; });

  auto family = std::make_shared<CallbackFamily>(
      t_universe,
      [lift, &t_set, &co_contains](const Subset& s) {
        return co_contains(t_set - lift(s));
      },
      "complement of the union-closed family");

  SolutionFamily minimals = find_minimals_via_antirestriction(reversed_f, family);

  std::vector<Subset> maximals;
  maximals.reserve(minimals.sets.size());
  for (const Subset& y : minimals.sets) maximals.push_back(t_set - lift(y));
  return SolutionFamily{std::move(maximals), minimals.value, h.calls() - calls_before};
}

Solution unconstrained_min(const SetFunction& f, const PendantPairFinder& finder) {
  int n = f.universe().size();
  if (n < 2) {
    throw std::invalid_argument("unconstrained minimization needs at least two elements");
  }
  ExcludeElementFamily family(f.universe(), 0);
  return find_optimal(f, family, finder);
}

}  // namespace hermin
