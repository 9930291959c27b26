#include "leeisd/lee.hpp"

#include <algorithm>
#include <stdexcept>

namespace leeisd {

unsigned lee_weight_sym(unsigned x, unsigned mod) {
  x %= mod;
  return std::min(x, mod - x);
}

unsigned long lee_weight(const Vec& x, unsigned mod) {
  unsigned long w = 0;
  for (std::uint8_t c : x) w += lee_weight_sym(c, mod);
  return w;
}

unsigned long lee_distance(const Vec& x, const Vec& y, unsigned mod) {
  if (x.size() != y.size()) throw std::invalid_argument("lee_distance: length mismatch");
  unsigned long w = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    w += lee_weight_sym(static_cast<unsigned>(x[i]) + mod - y[i], mod);
  return w;
}

Vec gray_map(const Vec& x) {
  static constexpr std::uint8_t hi[4] = {0, 0, 1, 1};
  static constexpr std::uint8_t lo[4] = {0, 1, 1, 0};
  Vec b(2 * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint8_t v = static_cast<std::uint8_t>(x[i] & 3u);
    b[2 * i] = hi[v];
    b[2 * i + 1] = lo[v];
  }
  return b;
}

Vec gray_inverse(const Vec& b) {
  if (b.size() % 2 != 0) throw std::invalid_argument("gray_inverse: odd-length input");
  Vec x(b.size() / 2);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint8_t h = b[2 * i], l = b[2 * i + 1];
    if (h > 1 || l > 1) throw std::invalid_argument("gray_inverse: entries must be bits");
    x[i] = static_cast<std::uint8_t>(h ? (l ? 2 : 3) : (l ? 1 : 0));
  }
  return x;
}

BigInt count_lee(std::size_t n, std::size_t w) {
  if (w > 2 * n) return 0;
  BigInt total = 0;
  for (std::size_t i = 0; 2 * i <= w && i <= n; ++i) {
    std::size_t j = w - 2 * i;
    if (j > n - i) continue;
    BigInt term = binomial(static_cast<long>(n), static_cast<long>(i)) *
                  binomial(static_cast<long>(n - i), static_cast<long>(j));
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), j);
    total += term;
  }
  return total;
}

BigInt sum_binom(std::size_t n, std::size_t w) {
  BigInt total = 0;
  for (std::size_t i = 1; i <= w; ++i)
    total += binomial(static_cast<long>(n), static_cast<long>(i));
  return total;
}

BigInt sum_count_lee(std::size_t n, std::size_t w) {
  BigInt total = 0;
  for (std::size_t i = 1; i <= w; ++i) total += count_lee(n, i);
  return total;
}

namespace {

// Shared recursion for the canonical order. The +-1 phase walks the free
// positions (no 2 placed) in ascending order, branching value 1 before 3.
struct LeeEnum {
  std::size_t n;
  const std::function<void(const Vec&)>& emit;
  Vec vec;

  void plus_minus(std::size_t from, std::size_t left) {
    if (left == 0) {
      emit(vec);
      return;
    }
    for (std::size_t p = from; p < n; ++p) {
      if (vec[p] != 0) continue;
      if (free_after(p) + 1 < left) break;
      vec[p] = 1;
      plus_minus(p + 1, left - 1);
      vec[p] = 3;
      plus_minus(p + 1, left - 1);
      vec[p] = 0;
    }
  }

  void twos(std::size_t from, std::size_t left) {
    plus_minus(0, left);
    if (left < 2) return;
    for (std::size_t p = from; p < n; ++p) {
      vec[p] = 2;
      twos(p + 1, left - 2);
      vec[p] = 0;
    }
  }

  std::size_t free_after(std::size_t p) const {
    std::size_t f = 0;
    for (std::size_t q = p + 1; q < n; ++q)
      if (vec[q] == 0) ++f;
    return f;
  }
};

// Completion counts for unranking. f free positions, r remaining weight:
// +-1-only completions number C(f, r)·2^r.
BigInt pm_count(std::size_t f, std::size_t r) {
  BigInt c = binomial(static_cast<long>(f), static_cast<long>(r));
  mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), r);
  return c;
}

// Completions from a state with i twos placed (the last at position pmin−1)
// and weight r still to assign: +-1 completions plus deeper 2-extensions.
BigInt subtree_count(std::size_t n, std::size_t pmin, std::size_t i, std::size_t r) {
  BigInt total = pm_count(n - i, r);
  if (r >= 2)
    for (std::size_t p = pmin; p < n; ++p) total += subtree_count(n, p + 1, i + 1, r - 2);
  return total;
}

}  // namespace

void enumerate_lee(std::size_t n, std::size_t w,
                   const std::function<void(const Vec&)>& emit) {
  if (w > 2 * n) return;
  LeeEnum en{n, emit, Vec(n, 0)};
  en.twos(0, w);
}

Vec unrank_lee(std::size_t n, std::size_t w, const BigInt& index) {
  if (index < 0 || index >= count_lee(n, w))
    throw std::invalid_argument("unrank_lee: index out of range");
  Vec vec(n, 0);
  BigInt idx = index;
  std::size_t r = w, twos_placed = 0, pmin = 0;

  // Walk the 2-placement spine.
  while (true) {
    BigInt pm = pm_count(n - twos_placed, r);
    if (idx < pm) break;
    idx -= pm;
    bool placed = false;
    for (std::size_t p = pmin; p < n; ++p) {
      BigInt sub = subtree_count(n, p + 1, twos_placed + 1, r - 2);
      if (idx < sub) {
        vec[p] = 2;
        ++twos_placed;
        pmin = p + 1;
        r -= 2;
        placed = true;
        break;
      }
      idx -= sub;
    }
    if (!placed) throw std::logic_error("unrank_lee: rank walk out of bounds");
  }

  // Unrank the +-1 completion over the free positions.
  std::vector<std::size_t> free_pos;
  for (std::size_t p = 0; p < n; ++p)
    if (vec[p] == 0) free_pos.push_back(p);
  std::size_t from = 0;
  while (r > 0) {
    bool placed = false;
    for (std::size_t j = from; j < free_pos.size(); ++j) {
      BigInt sub = pm_count(free_pos.size() - j - 1, r - 1);
      for (std::uint8_t val : {std::uint8_t(1), std::uint8_t(3)}) {
        if (idx < sub) {
          vec[free_pos[j]] = val;
          from = j + 1;
          --r;
          placed = true;
          break;
        }
        idx -= sub;
      }
      if (placed) break;
    }
    if (!placed) throw std::logic_error("unrank_lee: sign walk out of bounds");
  }
  return vec;
}

Vec random_lee_vector(std::size_t n, std::size_t w, Rng& rng) {
  BigInt total = count_lee(n, w);
  if (total == 0) throw std::invalid_argument("random_lee_vector: weight exceeds 2n");
  return unrank_lee(n, w, rng.below_big(total));
}

Vec random_lee_ball(std::size_t n, std::size_t t, Rng& rng) {
  if (t > 2 * n) t = 2 * n;
  BigInt ball = 1 + sum_count_lee(n, t);
  BigInt r = rng.below_big(ball);
  for (std::size_t w = 0; w <= t; ++w) {
    BigInt c = count_lee(n, w);
    if (r < c) return unrank_lee(n, w, r);
    r -= c;
  }
  throw std::logic_error("random_lee_ball: ball walk out of bounds");
}

Vec random_hamming_vector(std::size_t n, std::size_t w, Rng& rng) {
  if (w > n) throw std::invalid_argument("random_hamming_vector: weight exceeds length");
  Vec v(n, 0);
  IndexSet perm = rng.permutation(n);
  for (std::size_t i = 0; i < w; ++i) v[perm[i]] = 1;
  return v;
}

long singleton_bound(std::size_t n, std::size_t k1, std::size_t k2) {
  // ceil(k1 + k2/2)
  long k = static_cast<long>(k1) + static_cast<long>((k2 + 1) / 2);
  return 2 * (static_cast<long>(n) - k + 1);
}

BigRat gv_rhs(std::size_t n, std::size_t d) {
  if (d < 1) throw std::invalid_argument("gv_rhs: d must be >= 1");
  BigInt num = 1;
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * n);
  BigInt den = 0;
  for (std::size_t j = 0; j < d; ++j)
    den += binomial(static_cast<long>(2 * n), static_cast<long>(j));
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

std::size_t gv_max_dim(std::size_t n, std::size_t d) {
  BigRat rhs = gv_rhs(n, d);
  std::size_t dim = 0;
  BigRat pow = 4;
  while (pow <= rhs) {
    ++dim;
    pow *= 4;
  }
  return dim;
}

BigRat rate(std::size_t n, std::size_t k1, std::size_t k2) {
  if (n == 0) throw std::invalid_argument("rate: n must be positive");
  BigRat r(BigInt(2 * k1 + k2), BigInt(2 * n));
  r.canonicalize();
  return r;
}

std::size_t min_lee_distance(const SystematicGenerator& sg, std::uint64_t budget) {
  std::vector<Vec> words = enumerate_codewords(sg, budget);
  std::size_t best = 0;
  bool found = false;
  for (const Vec& c : words) {
    unsigned long w = lee_weight(c);
    if (w == 0) continue;
    if (!found || w < best) {
      best = w;
      found = true;
    }
  }
  if (!found) throw std::runtime_error("min_lee_distance: code has no nonzero codeword");
  return best;
}

}  // namespace leeisd
