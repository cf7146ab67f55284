#include "hermin/oracles.hpp"

#include "hermin/errors.hpp"

namespace hermin {

CallbackFamily::CallbackFamily(GroundSet universe, std::function<bool(const Subset&)> contains,
                               std::string description)
    : HereditaryFamily(std::move(universe)), contains_(std::move(contains)) {
  if (!contains_(Subset::empty(this->universe().size()))) {
    throw DegenerateFamilyError(description + " does not contain the empty set");
  }
}

std::shared_ptr<SetFunction> with_counter(std::shared_ptr<const SetFunction> f) {
  return std::make_shared<CountingFunction>(std::move(f));
}

std::shared_ptr<SetFunction> memoized(std::shared_ptr<const SetFunction> f) {
  return std::make_shared<MemoizedFunction>(std::move(f));
}

}  // namespace hermin
