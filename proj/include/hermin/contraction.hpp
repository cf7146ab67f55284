#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hermin/oracles.hpp"

namespace hermin {

/// The mutable state of the contraction-based solvers: a partition of the
/// original ground set into blocks, one per current element, plus an optional
/// distinguished "sink" element that accumulates infeasible blocks and is
/// kept outside the active list.
///
/// The contracted function and family are never materialized; every query
/// expands through the partition and costs exactly one underlying oracle
/// call. Current-element ids are stable original indices (the representative
/// of each block), so bookkeeping survives contractions.
class ContractedSystem {
 public:
  ContractedSystem(const SetFunction& f, const HereditaryFamily& family);

  const GroundSet& original_universe() const { return f_->universe(); }
  const SetFunction& function() const { return *f_; }
  const HereditaryFamily& family() const { return *family_; }

  /// Active current elements, ascending; excludes the sink.
  const std::vector<int>& active() const { return active_; }
  std::optional<int> sink() const { return sink_; }
  bool has_sink() const { return sink_.has_value(); }
  /// Active elements plus the sink when present.
  int current_count() const { return static_cast<int>(active_.size()) + (sink_ ? 1 : 0); }
  std::vector<int> current_elements() const;

  /// Original elements contracted into current element id.
  const Subset& block(int id) const;

  /// Union of blocks of the given current elements.
  Subset expand(std::span<const int> ids) const;

  /// f'(A) = f(union of blocks); exactly one underlying evaluation.
  Value evaluate(std::span<const int> ids) const;
  /// Same, for a caller-maintained expanded set (hot path of the orderings).
  Value evaluate_expanded(const Subset& expanded) const { return (*f_)(expanded); }

  /// A in I' iff the expansion is in I; always false for sets containing a
  /// forced-loop sink.
  bool member(std::span<const int> ids) const;
  bool is_loop(int id) const;
  std::vector<int> active_loops() const;

  /// Merge the blocks of `ids` into the representative `target` (which must
  /// be one of them). Merging into the sink requires target == sink id; use
  /// absorb_into_sink for that path.
  void contract_into(std::span<const int> ids, int target);

  /// Merge the given active elements (plus the existing sink, if any) into
  /// the sink, creating it with the smallest id when absent.
  void absorb_into_sink(std::span<const int> ids);

  /// Contract every active loop into the sink. Throws std::logic_error when
  /// there is nothing to absorb and no sink exists; idempotent otherwise.
  void absorb_loops();

  /// Treat the sink as a loop from now on even if its block is feasible.
  void force_sink_loop();

  /// Whether the original-universe set Y separates current elements a and b:
  /// one block inside Y, the other disjoint from it.
  bool separates(const Subset& y, int a, int b) const;

  /// Test hook: asserts blocks are nonempty, pairwise disjoint, and cover
  /// the original universe.
  void check_partition_invariant() const;

 private:
  void merge_blocks(std::span<const int> ids, int target);

  const SetFunction* f_;
  const HereditaryFamily* family_;
  std::vector<int> active_;
  std::optional<int> sink_;
  bool sink_forced_loop_ = false;
  std::vector<Subset> blocks_;  // indexed by representative id; stale ids keep old content
};

}  // namespace hermin
