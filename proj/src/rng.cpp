#include "mdqi/rng.hpp"

#include <algorithm>

#include "mdqi/common.hpp"

namespace mdqi {

std::uint64_t Rng::below(std::uint64_t bound) {
  require(bound > 0, "Rng::below: empty range");
  if ((bound & (bound - 1)) == 0) return raw() & (bound - 1);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::uint64_t v = raw();
    if (v < limit) return v % bound;
  }
}

std::vector<std::size_t> Rng::subset(std::size_t n, std::size_t k) {
  require(k <= n, "Rng::subset: k > n");
  // Floyd's algorithm; result sorted for determinism of downstream loops.
  std::vector<std::size_t> out;
  out.reserve(k);
  for (std::size_t j = n - k; j < n; ++j) {
    std::size_t t = static_cast<std::size_t>(below(j + 1));
    if (std::find(out.begin(), out.end(), t) != out.end()) out.push_back(j);
    else out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mdqi
