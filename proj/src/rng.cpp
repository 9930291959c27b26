#include "leeisd/rng.hpp"

#include <numeric>
#include <stdexcept>

namespace leeisd {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
  if ((n & (n - 1)) == 0) return u64() & (n - 1);
  // Rejection sampling over the largest multiple of n below 2^64.
  std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
  std::uint64_t x;
  do {
    x = u64();
  } while (x >= limit);
  return x % n;
}

BigInt Rng::below_big(const BigInt& n) {
  if (n <= 0) throw std::invalid_argument("Rng::below_big: n must be positive");
  if (n.fits_ulong_p()) return BigInt(static_cast<unsigned long>(below(n.get_ui())));
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  std::size_t words = (bits + 63) / 64;
  while (true) {
    BigInt x = 0;
    for (std::size_t i = 0; i < words; ++i) {
      mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), 64);
      x += static_cast<unsigned long>(u64());
    }
    mpz_tdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), bits);
    if (x < n) return x;
  }
}

std::vector<std::size_t> Rng::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  shuffle(p);
  return p;
}

}  // namespace leeisd
