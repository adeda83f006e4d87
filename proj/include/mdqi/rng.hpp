#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mdqi {

// Seeded generator with explicit bounded draws. mt19937_64 output is fully
// specified by the standard; std::uniform_int_distribution is not, so we do
// our own rejection sampling to keep results identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0,1) with 53 bits.
  double unit() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // Sorted k-subset of {0,...,n-1}.
  std::vector<std::size_t> subset(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 eng_;
};

}  // namespace mdqi
