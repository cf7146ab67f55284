#pragma once

namespace hermin::detail {

[[noreturn]] void check_failed(const char* expr, const char* file, int line);

}  // namespace hermin::detail

// Internal invariant check, active in all build types. Precondition violations
// that callers can trigger throw exceptions instead; HERMIN_ASSERT guards
// conditions the library itself must uphold.
#define HERMIN_ASSERT(expr) \
  ((expr) ? (void)0 : ::hermin::detail::check_failed(#expr, __FILE__, __LINE__))
