#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "leeisd/bigint.hpp"

namespace leeisd {

// Deterministic RNG: mt19937_64 plus hand-rolled rejection sampling so that
// byte-for-byte output reproducibility does not depend on library
// distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);

  // Uniform residue mod m.
  std::uint8_t residue(unsigned m) { return static_cast<std::uint8_t>(below(m)); }

  // Uniform in [0, n) for big n > 0.
  BigInt below_big(const BigInt& n);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 eng_;
};

}  // namespace leeisd
