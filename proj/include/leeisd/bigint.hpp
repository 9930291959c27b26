#pragma once

#include <gmpxx.h>

#include <string>

namespace leeisd {

using BigInt = mpz_class;
using BigRat = mpq_class;

// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

BigInt pow2(unsigned long e);

// log2 of a positive rational, accurate to double rounding.
double log2_big(const BigRat& q);
double log2_big(const BigInt& z);

// Lowest-terms decimal rendering: "num" when integral, else "num/den".
std::string rat_str(const BigRat& q);

}  // namespace leeisd
