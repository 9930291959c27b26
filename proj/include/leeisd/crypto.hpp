#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "leeisd/isd.hpp"
#include "leeisd/lee.hpp"
#include "leeisd/rng.hpp"
#include "leeisd/z4.hpp"

namespace leeisd {

struct DecryptionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Desk-scale decodable code: random systematic generator with enumerated
// minimum Lee distance >= 2t+1 and a complete coset-leader syndrome table.
struct SecretCode {
  SystematicGenerator sg;
  Mat H;  // expanded parity check, original column order
  std::size_t t = 0;
  std::size_t dmin = 0;
  std::map<Vec, Vec> table;  // syndrome -> unique error of weight <= t
};

struct GenBudget {
  std::uint64_t attempts = 2000;       // candidate codes to try
  std::uint64_t enumeration = 200000;  // codeword + table entries cap
};

SecretCode gen_secret_code(std::size_t n, std::size_t k1, std::size_t k2, std::size_t t, Rng& rng,
                           const GenBudget& budget = {});
// Rebuild H, dmin and the decoder table from (sg, t) after deserialization.
SecretCode assemble_secret_code(SystematicGenerator sg, std::size_t t, std::uint64_t enum_budget);

struct McEliecePublic {
  CodeType type;
  std::size_t t = 0;
  SystematicGenerator sg;  // systematic form of G' = S G P; spans the public code
};

struct McEliecePrivate {
  Mat S1, S2;  // block scrambler, invertible over Z4
  IndexSet P;
  SecretCode code;
};

struct McElieceKeyPair {
  McEliecePublic pub;
  McEliecePrivate priv;
  Mat Gprime;  // S G P itself, kept for consistency checks; not serialized
};

McElieceKeyPair mceliece_keygen(SecretCode code, Rng& rng);

// y = x Gpub + e with wt_L(e) = t (or uniform over weight <= t when
// exact_weight is false). x = (x1 | x2), x2 in {0,1}; planted_out, when
// given, receives e.
Vec mceliece_encrypt(const McEliecePublic& pub, const Vec& x, Rng& rng, bool exact_weight = true,
                     Vec* planted_out = nullptr);
Vec mceliece_decrypt(const McElieceKeyPair& kp, const Vec& y);

struct NiederreiterPublic {
  CodeType type;
  std::size_t t = 0;
  Mat Hprime;  // S^{-1} H P^T
};

struct NiederreiterPrivate {
  Mat S;
  IndexSet P;
  SecretCode code;
};

struct NiederreiterKeyPair {
  NiederreiterPublic pub;
  NiederreiterPrivate priv;
};

NiederreiterKeyPair niederreiter_keygen(SecretCode code, Rng& rng);
// y = H' x^T for wt_L(x) <= t.
Vec niederreiter_encrypt(const NiederreiterPublic& pub, const Vec& x);
Vec niederreiter_decrypt(const NiederreiterKeyPair& kp, const Vec& y);

struct AttackReport {
  bool recovered = false;
  std::uint64_t iterations = 0;
  double expectedIterations = 0.0;
  IsdParams params;
};

// Runs the generic collision decoder against a fresh ciphertext of the
// keypair, using only public material, and compares the recovered error with
// the planted one.
AttackReport attack_self_test(const McElieceKeyPair& kp, Rng& rng);
AttackReport attack_self_test(const NiederreiterKeyPair& kp, Rng& rng);

}  // namespace leeisd
