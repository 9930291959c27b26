#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leeisd/cost.hpp"
#include "leeisd/rng.hpp"
#include "leeisd/z4.hpp"

namespace leeisd {

enum class Field { F2, Z4 };

// Syndrome-decoding instance. For F2 the code dimension is k1 (k2 = 0) and H
// is (n-k1) x n over mod 2; for Z4 the type is (k1, k2) and H is (n-k1) x n
// over mod 4. t is a Hamming (F2) or Lee (Z4) weight target.
struct IsdInstance {
  Field field = Field::Z4;
  std::size_t n = 0, k1 = 0, k2 = 0, t = 0;
  Mat H;
  Vec s;
};

struct IsdDiagnostics {
  std::uint64_t iterations = 0;        // completed collision rounds
  std::uint64_t transformRetries = 0;  // rejected (I, Z, J) draws
  std::uint64_t collisions = 0;        // key matches examined
  std::uint64_t weightChecks = 0;      // candidate entries computed in weight tests
  bool transformExhausted = false;     // 64 consecutive split rejections
};

struct IsdResult {
  bool found = false;
  Vec e;
  IsdDiagnostics diag;
};

// Throws std::invalid_argument on constraint violations. wide_v relaxes
// v <= min(m1,m2) to v <= 2*min(m1,m2) (Lee weight v fits in m coordinates
// up to v = 2m); only meaningful for Z4.
void validate_isd_params(const IsdInstance& inst, const IsdParams& p, bool wide_v = false);

// ceil(50 / success probability) from the cost model.
std::uint64_t default_max_iters(const IsdInstance& inst, const IsdParams& p, bool wide_v = false);

// Collision decoding with restarts. Returns the first e with H e^T = s and
// weight exactly t found within max_iters collision rounds.
IsdResult stern_decode(const IsdInstance& inst, const IsdParams& p, Rng& rng,
                       std::uint64_t max_iters, bool wide_v = false);
IsdResult stern_f2(const IsdInstance& inst, const IsdParams& p, Rng& rng, std::uint64_t max_iters);
IsdResult stern_z4(const IsdInstance& inst, const IsdParams& p, Rng& rng, std::uint64_t max_iters,
                   bool wide_v = false);

// One collision-set element: the running key (window residues plus the even
// block's mod-2 image) and the sparse weight-v pattern over X or Y.
struct CollisionEntry {
  Vec key;                                                  // ell residues then k2 bits
  std::vector<std::pair<std::size_t, std::uint8_t>> pattern;  // (position in I, value)
};

// S over X keyed by (A pi(eX), C pi(eX) mod 2); T over Y keyed by
// (s1 - A pi(eY), s3 - C pi(eY) mod 2). Built by intermediate sums: one
// column operation per enumerated pattern.
void build_collision_sets(const Mat& Ablk, const Mat& Cbits, const Vec& s1, const Vec& s3bits,
                          const IndexSet& X, const IndexSet& Y, std::size_t v, unsigned mod,
                          std::vector<CollisionEntry>& S, std::vector<CollisionEntry>& T);

// Hash-join S against T; for each key match compute s2 - B pi(eX + eY)
// entry by entry with early abort past t - 2v. Returns (e1 over I, e2 over J)
// for the first candidate of exact outside weight.
std::optional<std::pair<Vec, Vec>> collide_and_extend(const std::vector<CollisionEntry>& S,
                                                      const std::vector<CollisionEntry>& T,
                                                      const Mat& Bblk, const Vec& s2,
                                                      std::size_t t, std::size_t v, unsigned mod,
                                                      IsdDiagnostics* diag);

struct BruteForceResult {
  // byWeight[w] = all e with H e^T = s and weight exactly w, canonical order.
  std::vector<std::vector<Vec>> byWeight;
  std::uint64_t scanned = 0;
  std::size_t total() const;
};

// Enumerates every vector of weight <= t; throws when the enumeration
// exceeds budget (count of candidate vectors).
BruteForceResult brute_force_decode(const IsdInstance& inst, const BigInt& budget);

// Random code of exact type (k1, k2) (F2: dimension k1) with a planted
// uniform weight-exactly-t error; s = H e^T.
IsdInstance make_random_instance(Field field, std::size_t n, std::size_t k1, std::size_t k2,
                                 std::size_t t, Rng& rng, Vec* planted = nullptr);

}  // namespace leeisd
