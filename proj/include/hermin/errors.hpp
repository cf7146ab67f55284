#pragma once

#include <stdexcept>
#include <string>

namespace hermin {

/// A validator was asked to enumerate a universe beyond its cap.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  explicit EnumerationCapExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

/// The family does not contain the empty set.
class DegenerateFamilyError : public std::runtime_error {
 public:
  explicit DegenerateFamilyError(const std::string& what)
      : std::runtime_error(what) {}
};

/// The family contains the whole ground set, so the constrained problem
/// degenerates; the unconstrained entry point is likely what was intended.
class TrivialFamilyError : public std::runtime_error {
 public:
  explicit TrivialFamilyError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Every singleton is a loop: the family contains no nonempty set.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hermin
