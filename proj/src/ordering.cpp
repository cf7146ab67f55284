#include "hermin/ordering.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hermin/check.hpp"

namespace hermin {

std::pair<int, int> LegalOrder::last_two() const {
  HERMIN_ASSERT(sequence.size() >= 2);
  return {sequence[sequence.size() - 2], sequence.back()};
}

namespace {

std::vector<int> remaining_after_first(const ContractedSystem& sys, int first) {
  std::vector<int> elements = sys.current_elements();
  auto it = std::find(elements.begin(), elements.end(), first);
  if (it == elements.end()) {
    throw std::invalid_argument("order start element is not current");
  }
  elements.erase(it);
  return elements;  // ascending: current_elements() is sorted
}

}  // namespace

LegalOrder QueyranneFinder::order(const ContractedSystem& sys, int first) const {
  std::vector<int> remaining = remaining_after_first(sys, first);
  LegalOrder out;
  out.sequence.reserve(remaining.size() + 1);
  out.sequence.push_back(first);

  Subset ordered = sys.block(first);
  std::map<int, Value> singleton;  // f'({v}) cache, scoped to this order
  auto singleton_value = [&](int v) -> const Value& {
    auto it = singleton.find(v);
    if (it == singleton.end()) {
      it = singleton.emplace(v, sys.evaluate_expanded(sys.block(v))).first;
    }
    return it->second;
  };

  while (!remaining.empty()) {
    if (remaining.size() == 1) {
      out.sequence.push_back(remaining.front());
      break;
    }
    int best = -1;
    Value best_key;
    for (int v : remaining) {  // ascending scan; strict < keeps the smallest id on ties
      Value key = sys.evaluate_expanded(ordered | sys.block(v)) - singleton_value(v);
      if (best < 0 || key < best_key) {
        best = v;
        best_key = key;
      }
    }
    out.sequence.push_back(best);
    ordered |= sys.block(best);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));
  }
  return out;
}

LegalOrder RizziFinder::order(const ContractedSystem& sys, int first) const {
  HERMIN_ASSERT(d_->universe().size() == sys.original_universe().size());
  std::vector<int> remaining = remaining_after_first(sys, first);
  LegalOrder out;
  out.sequence.reserve(remaining.size() + 1);
  out.sequence.push_back(first);

  Subset ordered = sys.block(first);
  while (!remaining.empty()) {
    if (remaining.size() == 1) {
      out.sequence.push_back(remaining.front());
      break;
    }
    int best = -1;
    Value best_key;
    for (int v : remaining) {
      Value key = d_->between(ordered, sys.block(v));
      if (best < 0 || key > best_key) {
        best = v;
        best_key = key;
      }
    }
    out.sequence.push_back(best);
    ordered |= sys.block(best);
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));
  }
  return out;
}

LegalOrder legal_order(const ContractedSystem& sys, int first) {
  return QueyranneFinder{}.order(sys, first);
}

LegalOrder max_back_order(const ContractedSystem& sys, const DistanceMap& d, int first) {
  return RizziFinder{d}.order(sys, first);
}

PendantPair pendant_pair(const ContractedSystem& sys, const PendantPairFinder& finder,
                         std::optional<int> avoid) {
  int m = sys.current_count();
  if (m < 2) throw std::invalid_argument("pendant pair needs at least two current elements");
  if (avoid && m < 3) {
    throw std::invalid_argument("avoiding pendant pair needs at least three current elements");
  }
  int first;
  if (avoid) {
    first = *avoid;
  } else {
    std::vector<int> elements = sys.current_elements();
    first = elements.front();
  }
  LegalOrder ord = finder.order(sys, first);
  auto [t, u] = ord.last_two();
  const int last[] = {u};
  return PendantPair{t, u, sys.evaluate(last)};
}

PendantPair pendant_pair(const ContractedSystem& sys, std::optional<int> avoid) {
  return pendant_pair(sys, QueyranneFinder{}, avoid);
}

}  // namespace hermin
