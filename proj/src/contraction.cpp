#include "hermin/contraction.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermin/check.hpp"

namespace hermin {

ContractedSystem::ContractedSystem(const SetFunction& f, const HereditaryFamily& family)
    : f_(&f), family_(&family) {
  if (f.universe().size() != family.universe().size()) {
    throw std::invalid_argument("function and family universes differ");
  }
  int n = f.universe().size();
  active_.resize(n);
  blocks_.reserve(n);
  for (int i = 0; i < n; ++i) {
    active_[i] = i;
    blocks_.push_back(Subset::singleton(n, i));
  }
}

std::vector<int> ContractedSystem::current_elements() const {
  std::vector<int> out = active_;
  if (sink_) {
    out.push_back(*sink_);
    std::sort(out.begin(), out.end());
  }
  return out;
}

const Subset& ContractedSystem::block(int id) const {
  HERMIN_ASSERT(id >= 0 && id < static_cast<int>(blocks_.size()));
  return blocks_[id];
}

Subset ContractedSystem::expand(std::span<const int> ids) const {
  Subset out = Subset::empty(original_universe().size());
  for (int id : ids) out |= block(id);
  return out;
}

Value ContractedSystem::evaluate(std::span<const int> ids) const {
  return (*f_)(expand(ids));
}

bool ContractedSystem::member(std::span<const int> ids) const {
  if (sink_forced_loop_) {
    for (int id : ids) {
      if (sink_ && id == *sink_) return false;
    }
  }
  return family_->contains(expand(ids));
}

bool ContractedSystem::is_loop(int id) const {
  if (sink_forced_loop_ && sink_ && id == *sink_) return true;
  return !family_->contains(block(id));
}

std::vector<int> ContractedSystem::active_loops() const {
  std::vector<int> out;
  for (int v : active_) {
    if (is_loop(v)) out.push_back(v);
  }
  return out;
}

void ContractedSystem::merge_blocks(std::span<const int> ids, int target) {
  for (int id : ids) {
    if (id == target) continue;
    blocks_[target] |= blocks_[id];
    auto it = std::find(active_.begin(), active_.end(), id);
    HERMIN_ASSERT(it != active_.end());
    active_.erase(it);
  }
}

void ContractedSystem::contract_into(std::span<const int> ids, int target) {
  if (ids.empty()) throw std::invalid_argument("contract_into: empty element list");
  bool target_listed = false;
  for (int id : ids) {
    if (id == target) target_listed = true;
    bool is_sink = sink_ && id == *sink_;
    if (is_sink && target != *sink_) {
      throw std::invalid_argument("contract_into: merging the sink requires it as target");
    }
    if (!is_sink && std::find(active_.begin(), active_.end(), id) == active_.end()) {
      throw std::invalid_argument("contract_into: element is not current");
    }
  }
  if (!target_listed) throw std::invalid_argument("contract_into: target not in element list");
  if (sink_ && target == *sink_) {
    std::vector<int> others;
    for (int id : ids) {
      if (id != *sink_) others.push_back(id);
    }
    absorb_into_sink(others);
    return;
  }
  merge_blocks(ids, target);
}

void ContractedSystem::absorb_into_sink(std::span<const int> ids) {
  for (int id : ids) {
    if (std::find(active_.begin(), active_.end(), id) == active_.end()) {
      throw std::invalid_argument("absorb_into_sink: element is not active");
    }
  }
  if (!sink_) {
    if (ids.empty()) throw std::invalid_argument("absorb_into_sink: nothing to absorb");
    sink_ = *std::min_element(ids.begin(), ids.end());
    merge_blocks(ids, *sink_);
    auto it = std::find(active_.begin(), active_.end(), *sink_);
    HERMIN_ASSERT(it != active_.end());
    active_.erase(it);
  } else {
    merge_blocks(ids, *sink_);
  }
}

void ContractedSystem::absorb_loops() {
  std::vector<int> loops = active_loops();
  if (loops.empty() && !sink_) {
    throw std::logic_error("absorb_loops: no loop exists and no sink is present");
  }
  absorb_into_sink(loops);
  // The sink's block absorbed a loop at creation, so by heredity it stays one.
  HERMIN_ASSERT(active_loops().empty());
}

void ContractedSystem::force_sink_loop() {
  HERMIN_ASSERT(sink_.has_value());
  sink_forced_loop_ = true;
}

bool ContractedSystem::separates(const Subset& y, int a, int b) const {
  const Subset& xa = block(a);
  const Subset& xb = block(b);
  bool a_inside = y.contains_all(xa);
  bool b_inside = y.contains_all(xb);
  if (a_inside && !b_inside) return y.disjoint_from(xb);
  if (b_inside && !a_inside) return y.disjoint_from(xa);
  return false;
}

void ContractedSystem::check_partition_invariant() const {
  Subset covered = Subset::empty(original_universe().size());
  for (int v : current_elements()) {
    HERMIN_ASSERT(!block(v).none());
    HERMIN_ASSERT(covered.disjoint_from(block(v)));
    covered |= block(v);
  }
  HERMIN_ASSERT(covered.is_full());
}

}  // namespace hermin
