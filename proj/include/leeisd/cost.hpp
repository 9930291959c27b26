#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leeisd/bigint.hpp"

namespace leeisd {

struct IsdParams {
  std::size_t v = 0, ell = 0, m1 = 0, m2 = 0;
};

// plain2bit charges two bit operations per Z4 symbol operation; lut1bit
// charges one (table-lookup arithmetic). F2 costs are unaffected.
enum class CostModel { plain2bit, lut1bit };

std::string cost_model_name(CostModel m);

struct CostEstimate {
  BigInt gauss{0};        // elimination phase, bit ops per iteration
  BigInt setS{0};         // building S
  BigInt setT{0};         // building T
  BigRat collision{0};    // expected collision handling (exact rational)
  BigRat iterCost{0};     // gauss + setS + setT + collision
  BigRat successProb{0};  // exact
  BigRat totalWork{0};    // iterCost / successProb (0 when unattainable)
  double securityBits = 0.0;
  bool attainable = false;
};

// Hamming-metric collision decoder cost:
//   (n-k)^2 (n+1) + l(L(m1,v)-m1) + l(L(m2,v)-m2+C(m2,v))
//     + C(m1,v) C(m2,v) 2^{-l} * 2 (t-2v+1)(2v+1),
// success C(m1,v) C(m2,v) C(n-k-l, t-2v) / C(n, t).
CostEstimate cost_stern_f2(std::size_t n, std::size_t k, std::size_t t, const IsdParams& p,
                           CostModel model = CostModel::plain2bit);

// Lee-metric collision decoder cost:
//   2(n-k1)^2 (n+1) + 2l(Lb(m1,v)+Lb(m2,v)) + 2l C(2m2,v) + k2 C(2m2,v)
//     + k2 (L(m1,v)-m1 + L(m2,v)-m2)
//     + C(2m1,v) C(2m2,v) 2^{-(k2+2l)} (t-2v+1)(8v+2),
// success C(2m1,v) C(2m2,v) C(2(n-k1-k2-l), t-2v) / C(2n, t).
// wide_v relaxes v <= min(m1,m2) to v <= 2*min(m1,m2).
CostEstimate cost_stern_z4(std::size_t n, std::size_t k1, std::size_t k2, std::size_t t,
                           const IsdParams& p, CostModel model = CostModel::plain2bit,
                           bool wide_v = false);

// reference: balanced split, v = min(m1, m2, floor((t-1)/2)) bumped minimally
//            when infeasible, no zero window (l = 0) — the operating point
//            that reproduces the published key-size/security table.
// sweep:     same split and v, l swept over its feasible range, minimum kept.
// full:      exhaustive over v and l with m1 within +-2 of balanced.
enum class Strategy { reference, sweep, full };

std::optional<Strategy> parse_strategy(const std::string& s);

struct ParamChoice {
  IsdParams params;
  CostEstimate est;
  bool feasible = false;
};

ParamChoice optimize_params_f2(std::size_t n, std::size_t k, std::size_t t, Strategy strategy,
                               CostModel model = CostModel::plain2bit, unsigned threads = 1);
ParamChoice optimize_params_z4(std::size_t n, std::size_t k1, std::size_t k2, std::size_t t,
                               Strategy strategy, CostModel model = CostModel::plain2bit,
                               unsigned threads = 1);

// Systematic public-key sizes in bits.
BigInt key_size_quaternary(std::size_t n, std::size_t k1, std::size_t k2);
BigInt key_size_binary(std::size_t n, std::size_t k);

struct TableRow {
  std::size_t k1 = 0, k2 = 0;
  BigInt keySize{0};
  ParamChoice choice;
  std::string note;
};

struct TableResult {
  std::size_t n = 0, d = 0, t = 0, dim = 0;
  bool feasible = false;
  std::string note;
  std::vector<TableRow> rows;
};

// Key-size/security table over k1 for fixed (n, d): t = (d-1)/2 and the
// dimension comes from the Gilbert–Varshamov bound unless dim_override is
// given; each row has k2 = 2(dim - k1).
TableResult table_scan(std::size_t n, std::size_t d, std::optional<std::size_t> dim_override,
                       std::size_t k1_min, std::size_t k1_max /*0 = default*/, Strategy strategy,
                       CostModel model = CostModel::plain2bit, unsigned threads = 1);

}  // namespace leeisd
