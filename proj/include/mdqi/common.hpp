#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mdqi {

// Error taxonomy. The CLI maps invariant_violation to exit code 2 and
// cap_exceeded to exit code 3; everything else is a generic failure.
struct invariant_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct no_convergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default enumeration budgets. Operations that can blow up combinatorially
// take an explicit cap argument defaulting to one of these.
inline constexpr std::size_t kEnumCap = std::size_t{1} << 22;
inline constexpr std::size_t kStateDimCap = std::size_t{1} << 22;
inline constexpr std::size_t kIndexSetCap = 5'000'000;

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invariant_violation(msg);
}

}  // namespace mdqi
