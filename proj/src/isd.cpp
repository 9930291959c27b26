#include "leeisd/isd.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "leeisd/lee.hpp"

namespace leeisd {

namespace {

constexpr unsigned kMaxTransformDraws = 64;

CostEstimate instance_cost(const IsdInstance& inst, const IsdParams& p, bool wide_v) {
  if (inst.field == Field::F2) return cost_stern_f2(inst.n, inst.k1, inst.t, p);
  return cost_stern_z4(inst.n, inst.k1, inst.k2, inst.t, p, CostModel::plain2bit, wide_v);
}

}  // namespace

void validate_isd_params(const IsdInstance& inst, const IsdParams& p, bool wide_v) {
  const std::size_t K = inst.k1 + inst.k2;
  if (K > inst.n) throw std::invalid_argument("isd: k1 + k2 exceeds n");
  if (inst.H.rows() != inst.n - inst.k1 || inst.H.cols() != inst.n)
    throw std::invalid_argument("isd: H must be (n - k1) x n");
  if (inst.s.size() != inst.H.rows()) throw std::invalid_argument("isd: syndrome length mismatch");
  if (inst.field == Field::F2 && inst.k2 != 0)
    throw std::invalid_argument("isd: F2 instances have k2 = 0");
  // Parameter constraints; the cost routines enforce the same set.
  instance_cost(inst, p, wide_v);
}

std::uint64_t default_max_iters(const IsdInstance& inst, const IsdParams& p, bool wide_v) {
  CostEstimate est = instance_cost(inst, p, wide_v);
  if (!est.attainable) return 1;
  BigInt iters;
  // ceil(50 / successProb)
  BigInt num = 50 * BigInt(est.successProb.get_den());
  mpz_cdiv_q(iters.get_mpz_t(), num.get_mpz_t(), BigInt(est.successProb.get_num()).get_mpz_t());
  if (!iters.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
  return iters.get_ui();
}

namespace {

// Weight-v pattern enumeration over `coords` in the canonical order of
// enumerate_lee, with running partial syndromes: accA over the zero window,
// accC over the mod-2 image of the even block. One column update per step.
struct PatternScan {
  const Mat& A;
  const Mat& C;
  const IndexSet& coords;
  unsigned mod;
  bool negate;  // T side: key = (s1 - accA, s3 ^ accC)
  const Vec& s1;
  const Vec& s3bits;
  std::vector<CollisionEntry>& out;

  Vec val;   // per-coordinate value, pattern under construction
  Vec accA;  // A * pattern
  Vec accC;  // C * pattern mod 2
  std::vector<std::pair<std::size_t, std::uint8_t>> pat;

  void add_col(std::size_t c, unsigned coef) {
    for (std::size_t r = 0; r < accA.size(); ++r)
      accA[r] = static_cast<std::uint8_t>((accA[r] + coef * A(r, coords[c])) % mod);
    if (coef & 1u)
      for (std::size_t r = 0; r < accC.size(); ++r) accC[r] ^= C(r, coords[c]);
  }

  void emit() {
    CollisionEntry e;
    e.key.reserve(accA.size() + accC.size());
    if (negate) {
      for (std::size_t r = 0; r < accA.size(); ++r)
        e.key.push_back(static_cast<std::uint8_t>((s1[r] + mod - accA[r]) % mod));
      for (std::size_t r = 0; r < accC.size(); ++r)
        e.key.push_back(s3bits[r] ^ accC[r]);
    } else {
      e.key.insert(e.key.end(), accA.begin(), accA.end());
      e.key.insert(e.key.end(), accC.begin(), accC.end());
    }
    e.pattern = pat;
    for (auto& pv : e.pattern) pv.first = coords[pv.first];
    out.push_back(std::move(e));
  }

  std::size_t free_after(std::size_t p) const {
    std::size_t f = 0;
    for (std::size_t q = p + 1; q < val.size(); ++q)
      if (val[q] == 0) ++f;
    return f;
  }

  void plus_minus(std::size_t from, std::size_t left) {
    if (left == 0) {
      emit();
      return;
    }
    for (std::size_t p = from; p < val.size(); ++p) {
      if (val[p] != 0) continue;
      if (free_after(p) + 1 < left) break;
      val[p] = 1;
      pat.emplace_back(p, 1);
      add_col(p, 1);
      plus_minus(p + 1, left - 1);
      add_col(p, mod - 1);
      if (mod == 4) {
        val[p] = 3;
        pat.back().second = 3;
        add_col(p, 3);
        plus_minus(p + 1, left - 1);
        add_col(p, 1);
      }
      pat.pop_back();
      val[p] = 0;
    }
  }

  void twos(std::size_t from, std::size_t left) {
    plus_minus(0, left);
    if (mod != 4 || left < 2) return;
    for (std::size_t p = from; p < val.size(); ++p) {
      val[p] = 2;
      pat.emplace_back(p, 2);
      add_col(p, 2);
      twos(p + 1, left - 2);
      add_col(p, 2);
      pat.pop_back();
      val[p] = 0;
    }
  }
};

void scan_side(const Mat& A, const Mat& C, const Vec& s1, const Vec& s3bits,
               const IndexSet& coords, std::size_t v, unsigned mod, bool negate,
               std::vector<CollisionEntry>& out) {
  PatternScan scan{A,      C,   coords, mod, negate, s1, s3bits, out, Vec(coords.size(), 0),
                   Vec(s1.size(), 0), Vec(s3bits.size(), 0), {}};
  scan.twos(0, v);
}

}  // namespace

void build_collision_sets(const Mat& Ablk, const Mat& Cbits, const Vec& s1, const Vec& s3bits,
                          const IndexSet& X, const IndexSet& Y, std::size_t v, unsigned mod,
                          std::vector<CollisionEntry>& S, std::vector<CollisionEntry>& T) {
  S.clear();
  T.clear();
  scan_side(Ablk, Cbits, s1, s3bits, X, v, mod, false, S);
  scan_side(Ablk, Cbits, s1, s3bits, Y, v, mod, true, T);
}

std::optional<std::pair<Vec, Vec>> collide_and_extend(const std::vector<CollisionEntry>& S,
                                                      const std::vector<CollisionEntry>& T,
                                                      const Mat& Bblk, const Vec& s2,
                                                      std::size_t t, std::size_t v, unsigned mod,
                                                      IsdDiagnostics* diag) {
  const std::size_t target = t - 2 * v;
  std::unordered_map<std::string, std::vector<std::size_t>> index;
  index.reserve(S.size());
  for (std::size_t i = 0; i < S.size(); ++i)
    index[std::string(S[i].key.begin(), S[i].key.end())].push_back(i);

  Vec e2(Bblk.rows(), 0);
  for (const CollisionEntry& ty : T) {
    auto it = index.find(std::string(ty.key.begin(), ty.key.end()));
    if (it == index.end()) continue;
    for (std::size_t si : it->second) {
      const CollisionEntry& sx = S[si];
      if (diag) ++diag->collisions;
      std::size_t w = 0;
      bool ok = true;
      for (std::size_t r = 0; r < Bblk.rows(); ++r) {
        unsigned acc = s2[r];
        for (const auto& [c, u] : sx.pattern) acc += 4 * mod - Bblk(r, c) * u;
        for (const auto& [c, u] : ty.pattern) acc += 4 * mod - Bblk(r, c) * u;
        e2[r] = static_cast<std::uint8_t>(acc % mod);
        if (diag) ++diag->weightChecks;
        w += lee_weight_sym(e2[r], mod);
        if (w > target) {
          ok = false;
          break;
        }
      }
      if (ok && w == target) {
        Vec e1;  // over I, by position
        e1.assign(Bblk.cols(), 0);
        for (const auto& [c, u] : sx.pattern) e1[c] = u;
        for (const auto& [c, u] : ty.pattern) e1[c] = u;
        return std::make_pair(e1, Vec(e2.begin(), e2.end()));
      }
    }
  }
  return std::nullopt;
}

namespace {

IsdResult run_stern(const IsdInstance& inst, const IsdParams& p, Rng& rng,
                    std::uint64_t max_iters, bool wide_v) {
  validate_isd_params(inst, p, wide_v);
  IsdResult res;
  const unsigned mod = inst.field == Field::Z4 ? 4 : 2;
  const std::size_t n = inst.n, K = inst.k1 + inst.k2, ell = p.ell;
  const std::size_t nj = n - K - ell;
  const std::size_t rows = inst.H.rows();

  auto weight_of = [&](const Vec& e) {
    return inst.field == Field::Z4 ? lee_weight(e) : lee_weight(e, 2);
  };
  auto finish_found = [&](Vec e) {
    if (mat_vec(inst.H, e) != inst.s || weight_of(e) != inst.t)
      throw std::logic_error("stern: candidate failed the return-path recheck");
    res.found = true;
    res.e = std::move(e);
    return res;
  };

  if (inst.t == 0) {
    if (is_zero(inst.s)) return finish_found(Vec(n, 0));
    return res;
  }

  std::vector<CollisionEntry> S, T;
  while (res.diag.iterations < max_iters) {
    // Fresh random column split until one admits the block transform.
    std::optional<Transform> tr;
    IndexSet I, Z, J;
    for (unsigned att = 0; att < kMaxTransformDraws && !tr; ++att) {
      IndexSet perm = rng.permutation(n);
      I.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(K));
      Z.assign(perm.begin() + static_cast<std::ptrdiff_t>(K),
               perm.begin() + static_cast<std::ptrdiff_t>(K + ell));
      J.assign(perm.begin() + static_cast<std::ptrdiff_t>(K + ell), perm.end());
      std::sort(I.begin(), I.end());
      std::sort(Z.begin(), Z.end());
      std::sort(J.begin(), J.end());
      tr = find_transform(inst.H, I, Z, J);
      if (!tr) ++res.diag.transformRetries;
    }
    if (!tr) {
      res.diag.transformExhausted = true;
      return res;
    }

    Vec Us = mat_vec(tr->U, inst.s);
    Vec s1(Us.begin(), Us.begin() + static_cast<std::ptrdiff_t>(ell));
    Vec s2(Us.begin() + static_cast<std::ptrdiff_t>(ell),
           Us.begin() + static_cast<std::ptrdiff_t>(ell + nj));
    Vec s3bits(rows - ell - nj, 0);
    bool s3_even = true;
    for (std::size_t r = 0; r < s3bits.size(); ++r) {
      std::uint8_t x = Us[ell + nj + r];
      if (x & 1u) s3_even = false;
      s3bits[r] = static_cast<std::uint8_t>(x >> 1);
    }
    if (!s3_even) {
      // The even block can never produce an odd syndrome entry: this split
      // (in fact the whole instance) has no solution; consume the round.
      ++res.diag.iterations;
      continue;
    }

    // Blocks over the information-set columns, by position within I.
    Mat Ablk(ell, K, mod), Bblk(nj, K, mod);
    Mat Cbits(s3bits.size(), K, 2);
    for (std::size_t c = 0; c < K; ++c) {
      for (std::size_t r = 0; r < ell; ++r) Ablk(r, c) = tr->UH(r, I[c]);
      for (std::size_t r = 0; r < nj; ++r) Bblk(r, c) = tr->UH(ell + r, I[c]);
      for (std::size_t r = 0; r < s3bits.size(); ++r)
        Cbits(r, c) = static_cast<std::uint8_t>(tr->UH(ell + nj + r, I[c]) >> 1);
    }

    // Partition I by a fresh shuffle; both halves kept in ascending order.
    IndexSet pos = rng.permutation(K);
    IndexSet X(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(p.m1));
    IndexSet Y(pos.begin() + static_cast<std::ptrdiff_t>(p.m1), pos.end());
    std::sort(X.begin(), X.end());
    std::sort(Y.begin(), Y.end());

    build_collision_sets(Ablk, Cbits, s1, s3bits, X, Y, p.v, mod, S, T);
    auto cand = collide_and_extend(S, T, Bblk, s2, inst.t, p.v, mod, &res.diag);
    ++res.diag.iterations;
    if (cand) {
      Vec e(n, 0);
      for (std::size_t c = 0; c < K; ++c) e[I[c]] = cand->first[c];
      for (std::size_t r = 0; r < nj; ++r) e[J[r]] = cand->second[r];
      return finish_found(std::move(e));
    }
  }
  return res;
}

}  // namespace

IsdResult stern_decode(const IsdInstance& inst, const IsdParams& p, Rng& rng,
                       std::uint64_t max_iters, bool wide_v) {
  return run_stern(inst, p, rng, max_iters, wide_v);
}

IsdResult stern_f2(const IsdInstance& inst, const IsdParams& p, Rng& rng,
                   std::uint64_t max_iters) {
  if (inst.field != Field::F2) throw std::invalid_argument("stern_f2: not an F2 instance");
  return run_stern(inst, p, rng, max_iters, false);
}

IsdResult stern_z4(const IsdInstance& inst, const IsdParams& p, Rng& rng, std::uint64_t max_iters,
                   bool wide_v) {
  if (inst.field != Field::Z4) throw std::invalid_argument("stern_z4: not a Z4 instance");
  return run_stern(inst, p, rng, max_iters, wide_v);
}

std::size_t BruteForceResult::total() const {
  std::size_t c = 0;
  for (const auto& ws : byWeight) c += ws.size();
  return c;
}

BruteForceResult brute_force_decode(const IsdInstance& inst, const BigInt& budget) {
  const unsigned mod = inst.field == Field::Z4 ? 4 : 2;
  BigInt work = 0;
  for (std::size_t w = 0; w <= inst.t; ++w)
    work += mod == 4 ? count_lee(inst.n, w)
                     : binomial(static_cast<long>(inst.n), static_cast<long>(w));
  if (work > budget)
    throw std::runtime_error("brute_force_decode: enumeration of " + work.get_str() +
                             " candidates exceeds budget " + budget.get_str());

  BruteForceResult res;
  res.byWeight.resize(inst.t + 1);
  auto check = [&](const Vec& e) {
    ++res.scanned;
    if (mat_vec(inst.H, e) == inst.s) {
      std::size_t w = static_cast<std::size_t>(lee_weight(e, mod));
      res.byWeight[w].push_back(e);
    }
  };
  for (std::size_t w = 0; w <= inst.t; ++w) {
    if (mod == 4) {
      enumerate_lee(inst.n, w, check);
    } else {
      // Weight-w binary supports, combination order.
      Vec e(inst.n, 0);
      std::function<void(std::size_t, std::size_t)> combos = [&](std::size_t from,
                                                                 std::size_t left) {
        if (left == 0) {
          check(e);
          return;
        }
        for (std::size_t q = from; q + left <= inst.n; ++q) {
          e[q] = 1;
          combos(q + 1, left - 1);
          e[q] = 0;
        }
      };
      if (w <= inst.n) combos(0, w);
    }
  }
  return res;
}

IsdInstance make_random_instance(Field field, std::size_t n, std::size_t k1, std::size_t k2,
                                 std::size_t t, Rng& rng, Vec* planted) {
  IsdInstance inst;
  inst.field = field;
  inst.n = n;
  inst.k1 = k1;
  inst.k2 = field == Field::F2 ? 0 : k2;
  inst.t = t;
  if (field == Field::Z4) {
    SystematicGenerator sg = random_systematic_generator(n, k1, k2, rng);
    inst.H = expand_parity(parity_from_generator(sg));
    Vec e = random_lee_vector(n, t, rng);
    inst.s = mat_vec(inst.H, e);
    if (planted) *planted = std::move(e);
  } else {
    if (k2 != 0) throw std::invalid_argument("make_random_instance: F2 requires k2 = 0");
    if (k1 > n) throw std::invalid_argument("make_random_instance: k1 > n");
    // Systematic binary code [Id | M] under a random column permutation.
    Mat M = random_matrix(k1, n - k1, 2, rng);
    IndexSet perm = rng.permutation(n);
    Mat H(n - k1, n, 2);
    for (std::size_t r = 0; r < n - k1; ++r) {
      for (std::size_t c = 0; c < k1; ++c) H(r, perm[c]) = M(c, r);
      H(r, perm[k1 + r]) = 1;
    }
    inst.H = H;
    Vec e = random_hamming_vector(n, t, rng);
    inst.s = mat_vec(inst.H, e);
    if (planted) *planted = std::move(e);
  }
  return inst;
}

}  // namespace leeisd
