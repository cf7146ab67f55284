#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>

#include "hermin/subset.hpp"
#include "hermin/value.hpp"

namespace hermin {

/// Value oracle for a set function. Evaluation must be a pure function of the
/// subset. Each true evaluation bumps the call counter; the counter is the
/// currency of all oracle-complexity accounting.
///
/// Counter updates are not synchronized: a single logical solver thread owns
/// an oracle at a time. Read-only sharing across threads needs one oracle
/// instance per thread.
class SetFunction {
 public:
  explicit SetFunction(GroundSet universe) : universe_(std::move(universe)) {}
  virtual ~SetFunction() = default;

  virtual Value evaluate(const Subset& s) const = 0;
  Value operator()(const Subset& s) const { return evaluate(s); }

  const GroundSet& universe() const { return universe_; }
  std::uint64_t calls() const { return calls_; }
  void reset_calls() const { calls_ = 0; }

 protected:
  void count_call() const { ++calls_; }

 private:
  GroundSet universe_;
  mutable std::uint64_t calls_ = 0;
};

/// Membership oracle for a downward-closed family. Implementations must
/// contain the empty set; constructions that cannot guarantee it check at
/// build time and throw DegenerateFamilyError.
class HereditaryFamily {
 public:
  explicit HereditaryFamily(GroundSet universe) : universe_(std::move(universe)) {}
  virtual ~HereditaryFamily() = default;

  virtual bool contains(const Subset& s) const = 0;
  const GroundSet& universe() const { return universe_; }

 private:
  GroundSet universe_;
};

/// Set function backed by an arbitrary callable.
class CallbackFunction final : public SetFunction {
 public:
  CallbackFunction(GroundSet universe, std::function<Value(const Subset&)> fn)
      : SetFunction(std::move(universe)), fn_(std::move(fn)) {}

  Value evaluate(const Subset& s) const override {
    count_call();
    return fn_(s);
  }

 private:
  std::function<Value(const Subset&)> fn_;
};

/// Family backed by an arbitrary membership callable. Rejects callables that
/// exclude the empty set.
class CallbackFamily final : public HereditaryFamily {
 public:
  CallbackFamily(GroundSet universe, std::function<bool(const Subset&)> contains,
                 std::string description = "callback family");

  bool contains(const Subset& s) const override { return contains_(s); }

 private:
  std::function<bool(const Subset&)> contains_;
};

/// Wraps a function with a fresh call counter; evaluation delegates.
class CountingFunction final : public SetFunction {
 public:
  explicit CountingFunction(std::shared_ptr<const SetFunction> base)
      : SetFunction(base->universe()), base_(std::move(base)) {}

  Value evaluate(const Subset& s) const override {
    count_call();
    return base_->evaluate(s);
  }

 private:
  std::shared_ptr<const SetFunction> base_;
};

/// Memoizing layer. Its counter reports true underlying evaluations only:
/// cache hits cost nothing and count nothing.
class MemoizedFunction final : public SetFunction {
 public:
  explicit MemoizedFunction(std::shared_ptr<const SetFunction> base)
      : SetFunction(base->universe()), base_(std::move(base)) {}

  Value evaluate(const Subset& s) const override {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    count_call();
    Value v = base_->evaluate(s);
    cache_.emplace(s, v);
    return v;
  }

 private:
  std::shared_ptr<const SetFunction> base_;
  mutable std::unordered_map<Subset, Value, Subset::Hash> cache_;
};

std::shared_ptr<SetFunction> with_counter(std::shared_ptr<const SetFunction> f);
std::shared_ptr<SetFunction> memoized(std::shared_ptr<const SetFunction> f);

}  // namespace hermin
