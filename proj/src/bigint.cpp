#include "leeisd/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace leeisd {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt pow2(unsigned long e) {
  BigInt r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

double log2_big(const BigInt& z) {
  if (z <= 0) throw std::invalid_argument("log2_big: argument must be positive");
  long exp = 0;
  double m = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(m) + static_cast<double>(exp);
}

double log2_big(const BigRat& q) {
  if (q <= 0) throw std::invalid_argument("log2_big: argument must be positive");
  return log2_big(BigInt(q.get_num())) - log2_big(BigInt(q.get_den()));
}

std::string rat_str(const BigRat& q) {
  BigRat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace leeisd
