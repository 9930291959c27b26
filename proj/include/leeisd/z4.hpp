#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "leeisd/bigint.hpp"
#include "leeisd/rng.hpp"

namespace leeisd {

// Vectors carry residues; the modulus is supplied by context (2 or 4).
using Vec = std::vector<std::uint8_t>;
using IndexSet = std::vector<std::size_t>;

// Dense matrix over Z_m with m in {2, 4}. All arithmetic is exact mod m.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, unsigned mod);
  static Mat identity(std::size_t n, unsigned mod);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned mod() const { return mod_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Mat transpose() const;
  // Entrywise reduction mod 2 (result modulus 2).
  Mat mod2() const;
  // Reinterpret a mod-2 matrix over Z4 (entries unchanged).
  Mat lift4() const;
  // 2*M over Z4 (defined for mod-2 input).
  Mat doubled() const;
  Mat negated() const;
  Mat columns(const IndexSet& idx) const;

  bool operator==(const Mat&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  unsigned mod_ = 4;
  std::vector<std::uint8_t> a_;
};

Mat mat_mul(const Mat& A, const Mat& B);
Mat mat_add(const Mat& A, const Mat& B);
Mat hstack(const Mat& A, const Mat& B);

Vec mat_vec(const Mat& M, const Vec& x);            // M * x^T
Vec vec_mat(const Vec& x, const Mat& M);            // x * M
Vec vec_add(const Vec& a, const Vec& b, unsigned mod);
Vec vec_sub(const Vec& a, const Vec& b, unsigned mod);
Vec vec_scale(std::uint8_t c, const Vec& a, unsigned mod);
bool is_zero(const Vec& a);

struct CodeType {
  std::size_t n = 0, k1 = 0, k2 = 0;
  bool operator==(const CodeType&) const = default;
};

// Generator in the shape [ Id A B ; 0 2*Id 2*C ] up to the recorded column
// permutation: col_perm[p] = input column sitting at systematic position p.
struct SystematicGenerator {
  CodeType type;
  Mat A;  // k1 x k2 over Z2
  Mat B;  // k1 x (n-k1-k2) over Z4
  Mat C;  // k2 x (n-k1-k2) over Z2
  IndexSet col_perm;
};

// Parity check in the shape [ D E Id ; 2*F 2*Id 0 ] under the same column
// permutation, with D = -B^T - C^T A^T, E = C^T, F = A^T.
struct SystematicParityCheck {
  CodeType type;
  Mat D;  // (n-k1-k2) x k1 over Z4
  Mat E;  // (n-k1-k2) x k2 over Z2
  Mat F;  // k2 x k1 over Z2
  IndexSet col_perm;
};

// Row-reduce an arbitrary generator to the systematic shape. First sweep
// pivots on units (1 or 3), second sweep on 2*unit entries of the all-even
// residue; lowest row then lowest column wins every tie.
SystematicGenerator quaternary_systematic_form(const Mat& G);

SystematicParityCheck parity_from_generator(const SystematicGenerator& sg);

// Expanded (k1+k2) x n generator; original column order unless sys_order.
Mat expand_generator(const SystematicGenerator& sg, bool sys_order = false);
// Expanded (n-k1) x n parity check.
Mat expand_parity(const SystematicParityCheck& pc, bool sys_order = false);

// Encode u = (u1 | u2) with u1 in Z4^k1, u2 in {0,1}^k2 to a codeword in
// original column order.
Vec encode(const SystematicGenerator& sg, const Vec& u);
// Inverse of encode; throws std::invalid_argument when c is not a codeword.
Vec decode_codeword(const SystematicGenerator& sg, const Vec& c);
bool in_code(const SystematicGenerator& sg, const Vec& c);

BigInt code_cardinality(const CodeType& type);
// All codewords (original order); throws when the code is larger than budget.
std::vector<Vec> enumerate_codewords(const SystematicGenerator& sg, std::uint64_t budget);

struct Transform {
  Mat U;   // invertible (n-k1) x (n-k1)
  Mat UH;  // U*H with (UH)_Z = (Id;0;0), (UH)_J = (0;Id;0), (UH)_I = (A;B;2C)
};

// Find U putting H into the collision-decoder block shape for the given
// column split. nullopt means this (I, Z, J) admits no such U (retry with a
// fresh split); malformed sizes throw instead.
std::optional<Transform> find_transform(const Mat& H, const IndexSet& I, const IndexSet& Z,
                                        const IndexSet& J);

// True iff the I-columns of the generator span the whole code, decided by
// comparing the systematic type of the restriction.
bool is_information_set(const SystematicGenerator& sg, const IndexSet& I);

// Two-sided inverse mod m; throws std::invalid_argument when singular.
Mat inverse(const Mat& M);
bool is_invertible(const Mat& M);

Mat random_matrix(std::size_t rows, std::size_t cols, unsigned mod, Rng& rng);
Mat random_invertible(std::size_t k, unsigned mod, Rng& rng);
// diag(S1, S2) with S1 (k1 x k1), S2 (k2 x k2) invertible over Z4.
Mat random_block_invertible(std::size_t k1, std::size_t k2, Rng& rng);

IndexSet random_permutation_vec(std::size_t n, Rng& rng);
Mat permutation_matrix(const IndexSet& perm, unsigned mod);
// y[perm[i]] = x[i], i.e. x * P for P = permutation_matrix(perm).
Vec apply_perm(const Vec& x, const IndexSet& perm);
// y[i] = x[perm[i]], i.e. x * P^T; inverse of apply_perm.
Vec apply_perm_inv(const Vec& x, const IndexSet& perm);
// M * P^T: column c of the result is column perm[c] of M.
Mat cols_perm(const Mat& M, const IndexSet& perm);

SystematicGenerator random_systematic_generator(std::size_t n, std::size_t k1, std::size_t k2,
                                                Rng& rng);

}  // namespace leeisd
