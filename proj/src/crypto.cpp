#include "leeisd/crypto.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "leeisd/cost.hpp"

namespace leeisd {

namespace {

// Right-multiplication by the permutation matrix of perm: column p of the
// input lands at column perm[p].
Mat scatter_cols(const Mat& M, const IndexSet& perm) {
  if (M.cols() != perm.size()) throw std::invalid_argument("scatter_cols: dimension mismatch");
  Mat out(M.rows(), M.cols(), M.mod());
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t p = 0; p < M.cols(); ++p) out(r, perm[p]) = M(r, p);
  return out;
}

void check_enum_budget(std::size_t n, const CodeType& type, std::size_t t,
                       std::uint64_t enumeration) {
  BigInt need = code_cardinality(type) + 1 + sum_count_lee(n, t);
  if (need > BigInt(static_cast<unsigned long>(enumeration)))
    throw std::invalid_argument("secret-code generation needs " + need.get_str() +
                                " enumerated vectors, over the budget of " +
                                std::to_string(enumeration));
}

}  // namespace

SecretCode assemble_secret_code(SystematicGenerator sg, std::size_t t,
                                std::uint64_t enum_budget) {
  const std::size_t n = sg.type.n;
  check_enum_budget(n, sg.type, t, enum_budget);
  SecretCode code;
  code.sg = std::move(sg);
  code.H = expand_parity(parity_from_generator(code.sg));
  code.t = t;
  code.dmin = min_lee_distance(code.sg, enum_budget);
  if (code.dmin < 2 * t + 1)
    throw std::invalid_argument("code has minimum Lee distance " + std::to_string(code.dmin) +
                                ", too small to correct " + std::to_string(t) + " errors");
  for (std::size_t w = 0; w <= t; ++w)
    enumerate_lee(n, w, [&](const Vec& e) { code.table.emplace(mat_vec(code.H, e), e); });
  return code;
}

SecretCode gen_secret_code(std::size_t n, std::size_t k1, std::size_t k2, std::size_t t, Rng& rng,
                           const GenBudget& budget) {
  if (k1 + k2 == 0 || k1 + k2 > n)
    throw std::invalid_argument("gen_secret_code: need 0 < k1 + k2 <= n");
  check_enum_budget(n, CodeType{n, k1, k2}, t, budget.enumeration);
  std::size_t best_dmin = 0;
  for (std::uint64_t a = 0; a < budget.attempts; ++a) {
    SystematicGenerator sg = random_systematic_generator(n, k1, k2, rng);
    std::size_t dmin = min_lee_distance(sg, budget.enumeration);
    if (dmin >= 2 * t + 1) return assemble_secret_code(std::move(sg), t, budget.enumeration);
    best_dmin = std::max(best_dmin, dmin);
  }
  throw std::runtime_error("no code of minimum Lee distance >= " + std::to_string(2 * t + 1) +
                           " found in " + std::to_string(budget.attempts) +
                           " attempts (best seen: " + std::to_string(best_dmin) + ")");
}

McElieceKeyPair mceliece_keygen(SecretCode code, Rng& rng) {
  const auto [n, k1, k2] = code.sg.type;
  McElieceKeyPair kp;
  kp.priv.S1 = random_invertible(k1, 4, rng);
  kp.priv.S2 = random_invertible(k2, 4, rng);
  kp.priv.P = rng.permutation(n);

  Mat S(k1 + k2, k1 + k2, 4);
  for (std::size_t r = 0; r < k1; ++r)
    for (std::size_t c = 0; c < k1; ++c) S(r, c) = kp.priv.S1(r, c);
  for (std::size_t r = 0; r < k2; ++r)
    for (std::size_t c = 0; c < k2; ++c) S(k1 + r, k1 + c) = kp.priv.S2(r, c);
  kp.Gprime = scatter_cols(mat_mul(S, expand_generator(code.sg)), kp.priv.P);

  kp.pub.type = code.sg.type;
  kp.pub.t = code.t;
  kp.pub.sg = quaternary_systematic_form(kp.Gprime);
  if (kp.pub.sg.type.k1 != k1 || kp.pub.sg.type.k2 != k2)
    throw std::logic_error("mceliece_keygen: scrambling changed the code type");
  kp.priv.code = std::move(code);
  return kp;
}

Vec mceliece_encrypt(const McEliecePublic& pub, const Vec& x, Rng& rng, bool exact_weight,
                     Vec* planted_out) {
  const std::size_t n = pub.type.n;
  Vec e = exact_weight ? random_lee_vector(n, pub.t, rng) : random_lee_ball(n, pub.t, rng);
  Vec y = vec_add(encode(pub.sg, x), e, 4);
  if (planted_out) *planted_out = std::move(e);
  return y;
}

Vec mceliece_decrypt(const McElieceKeyPair& kp, const Vec& y) {
  if (y.size() != kp.pub.type.n) throw std::invalid_argument("mceliece_decrypt: length mismatch");
  // Undo the column scatter, strip the (permuted) error via the syndrome
  // table, then read the message off the public systematic form.
  Vec ySec = apply_perm_inv(y, kp.priv.P);
  auto hit = kp.priv.code.table.find(mat_vec(kp.priv.code.H, ySec));
  if (hit == kp.priv.code.table.end())
    throw DecryptionFailure("mceliece_decrypt: syndrome outside the decodable radius");
  Vec cSec = vec_sub(ySec, hit->second, 4);
  return decode_codeword(kp.pub.sg, apply_perm(cSec, kp.priv.P));
}

NiederreiterKeyPair niederreiter_keygen(SecretCode code, Rng& rng) {
  const auto [n, k1, k2] = code.sg.type;
  (void)k2;
  NiederreiterKeyPair kp;
  kp.priv.S = random_invertible(n - k1, 4, rng);
  kp.priv.P = rng.permutation(n);
  kp.pub.type = code.sg.type;
  kp.pub.t = code.t;
  kp.pub.Hprime = mat_mul(inverse(kp.priv.S), cols_perm(code.H, kp.priv.P));
  kp.priv.code = std::move(code);
  return kp;
}

Vec niederreiter_encrypt(const NiederreiterPublic& pub, const Vec& x) {
  if (x.size() != pub.type.n) throw std::invalid_argument("niederreiter_encrypt: length mismatch");
  if (lee_weight(x) > pub.t)
    throw std::invalid_argument("niederreiter_encrypt: message weight exceeds t");
  return mat_vec(pub.Hprime, x);
}

Vec niederreiter_decrypt(const NiederreiterKeyPair& kp, const Vec& y) {
  if (y.size() != kp.pub.Hprime.rows())
    throw std::invalid_argument("niederreiter_decrypt: length mismatch");
  Vec z = mat_vec(kp.priv.S, y);  // = H (P^T x^T), and P^T x^T carries x[i] to slot P[i]
  auto hit = kp.priv.code.table.find(z);
  if (hit == kp.priv.code.table.end())
    throw DecryptionFailure("niederreiter_decrypt: syndrome outside the decodable radius");
  return apply_perm_inv(hit->second, kp.priv.P);
}

namespace {

AttackReport attack_instance(const CodeType& type, const Mat& Hpub, const Vec& syndrome,
                             std::size_t t, const Vec& planted, Rng& rng) {
  IsdInstance inst;
  inst.field = Field::Z4;
  inst.n = type.n;
  inst.k1 = type.k1;
  inst.k2 = type.k2;
  inst.t = t;
  inst.H = Hpub;
  inst.s = syndrome;

  AttackReport rep;
  ParamChoice choice =
      optimize_params_z4(type.n, type.k1, type.k2, t, Strategy::reference);
  if (!choice.feasible) return rep;
  rep.params = choice.params;
  rep.expectedIterations =
      choice.est.attainable ? 1.0 / choice.est.successProb.get_d() : 0.0;
  IsdResult res =
      stern_z4(inst, choice.params, rng, default_max_iters(inst, choice.params));
  rep.iterations = res.diag.iterations;
  rep.recovered = res.found && res.e == planted;
  return rep;
}

}  // namespace

AttackReport attack_self_test(const McElieceKeyPair& kp, Rng& rng) {
  const auto [n, k1, k2] = kp.pub.type;
  Vec x(k1 + k2, 0);
  for (std::size_t i = 0; i < k1; ++i) x[i] = rng.residue(4);
  for (std::size_t i = 0; i < k2; ++i) x[k1 + i] = rng.residue(2);
  Vec e;
  Vec y = mceliece_encrypt(kp.pub, x, rng, true, &e);
  Mat Hpub = expand_parity(parity_from_generator(kp.pub.sg));
  return attack_instance(kp.pub.type, Hpub, mat_vec(Hpub, y), kp.pub.t, e, rng);
}

AttackReport attack_self_test(const NiederreiterKeyPair& kp, Rng& rng) {
  Vec x = random_lee_vector(kp.pub.type.n, kp.pub.t, rng);
  Vec y = niederreiter_encrypt(kp.pub, x);
  return attack_instance(kp.pub.type, kp.pub.Hprime, y, kp.pub.t, x, rng);
}

}  // namespace leeisd
