#pragma once

#include <cstddef>
#include <functional>

#include "leeisd/bigint.hpp"
#include "leeisd/rng.hpp"
#include "leeisd/z4.hpp"

namespace leeisd {

// min(x, m-x); equals Hamming weight for m = 2.
unsigned lee_weight_sym(unsigned x, unsigned mod = 4);
unsigned long lee_weight(const Vec& x, unsigned mod = 4);
unsigned long lee_distance(const Vec& x, const Vec& y, unsigned mod = 4);

// Componentwise 0->(0,0), 1->(0,1), 2->(1,1), 3->(1,0); output length 2n.
Vec gray_map(const Vec& x);
Vec gray_inverse(const Vec& b);

// Number of vectors in Z4^n of Lee weight exactly w, computed as
// sum_i C(n,i) C(n-i, w-2i) 2^(w-2i) and checked against C(2n, w).
BigInt count_lee(std::size_t n, std::size_t w);

// sum_{i=1..w} C(n, i)  — size of the punctured Hamming ball.
BigInt sum_binom(std::size_t n, std::size_t w);
// sum_{i=1..w} count_lee(n, i) — size of the punctured Lee ball.
BigInt sum_count_lee(std::size_t n, std::size_t w);

// Every weight-w vector exactly once, in a canonical depth-first order:
// 2-entries are placed at ascending positions; for each set of 2-positions,
// all +-1 completions (free positions ascending, value 1 branching before 3)
// are emitted before the 2-set is extended further. Each step of the
// underlying recursion raises one coordinate by one Lee unit, so partial
// syndromes can be maintained incrementally.
void enumerate_lee(std::size_t n, std::size_t w, const std::function<void(const Vec&)>& emit);

// Index-th vector of the canonical order; 0 <= index < count_lee(n, w).
Vec unrank_lee(std::size_t n, std::size_t w, const BigInt& index);

// Uniform over Lee weight exactly w / at most t.
Vec random_lee_vector(std::size_t n, std::size_t w, Rng& rng);
Vec random_lee_ball(std::size_t n, std::size_t t, Rng& rng);
// Uniform binary vector of Hamming weight exactly w.
Vec random_hamming_vector(std::size_t n, std::size_t w, Rng& rng);

// d_L <= 2(n - ceil(k1 + k2/2) + 1).
long singleton_bound(std::size_t n, std::size_t k1, std::size_t k2);
// 4^n / sum_{j<d} C(2n, j): any code meeting this cardinality exists.
BigRat gv_rhs(std::size_t n, std::size_t d);
// Largest dim with 4^dim <= gv_rhs(n, d).
std::size_t gv_max_dim(std::size_t n, std::size_t d);
// (k1 + k2/2)/n, exact.
BigRat rate(std::size_t n, std::size_t k1, std::size_t k2);

// Minimum Lee weight over all nonzero codewords; throws over budget.
std::size_t min_lee_distance(const SystematicGenerator& sg, std::uint64_t budget);

}  // namespace leeisd
