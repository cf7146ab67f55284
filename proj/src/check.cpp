#include "hermin/check.hpp"

#include <cstdio>
#include <cstdlib>

namespace hermin::detail {

void check_failed(const char* expr, const char* file, int line) {
  std::fprintf(stderr, "invariant violated: %s (%s:%d)\n", expr, file, line);
  std::abort();
}

}  // namespace hermin::detail
