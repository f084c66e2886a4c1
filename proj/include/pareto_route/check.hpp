#pragma once

#include <cstdio>
#include <cstdlib>

// Contract checks. PR_CHECK is always on; PR_DCHECK compiles away in NDEBUG
// builds and guards hot-path invariants only.

namespace pareto_route::detail {

[[noreturn]] inline void check_failed(const char* expr, const char* file, int line) {
  std::fprintf(stderr, "%s:%d: contract violation: %s\n", file, line, expr);
  std::abort();
}

}  // namespace pareto_route::detail

#define PR_CHECK(cond)                                                      \
  do {                                                                      \
    if (!(cond)) ::pareto_route::detail::check_failed(#cond, __FILE__, __LINE__); \
  } while (false)

#ifdef NDEBUG
#define PR_DCHECK(cond) \
  do {                  \
  } while (false)
#else
#define PR_DCHECK(cond) PR_CHECK(cond)
#endif
