#include "leeisd/z4.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace leeisd {

namespace {

void check_mod(unsigned mod) {
  if (mod != 2 && mod != 4) throw std::invalid_argument("modulus must be 2 or 4");
}

bool is_unit(std::uint8_t x, unsigned mod) { return mod == 2 ? x == 1 : (x & 1u) != 0; }

// Multiplicative inverse of a unit (mod 2: 1; mod 4: 1->1, 3->3).
std::uint8_t unit_inv(std::uint8_t x) { return x; }

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols, unsigned mod)
    : rows_(rows), cols_(cols), mod_(mod), a_(rows * cols, 0) {
  check_mod(mod);
}

Mat Mat::identity(std::size_t n, unsigned mod) {
  Mat m(n, n, mod);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, mod_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::mod2() const {
  Mat m(rows_, cols_, 2);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] & 1u;
  return m;
}

Mat Mat::lift4() const {
  Mat m(rows_, cols_, 4);
  m.a_ = a_;
  return m;
}

Mat Mat::doubled() const {
  Mat m(rows_, cols_, 4);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = static_cast<std::uint8_t>((2 * a_[i]) & 3u);
  return m;
}

Mat Mat::negated() const {
  Mat m(rows_, cols_, mod_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    m.a_[i] = static_cast<std::uint8_t>((mod_ - a_[i]) % mod_);
  return m;
}

Mat Mat::columns(const IndexSet& idx) const {
  Mat m(rows_, idx.size(), mod_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = (*this)(r, idx[c]);
  return m;
}

Mat mat_mul(const Mat& A, const Mat& B) {
  if (A.cols() != B.rows() || A.mod() != B.mod())
    throw std::invalid_argument("mat_mul: dimension or modulus mismatch");
  Mat out(A.rows(), B.cols(), A.mod());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      std::uint8_t a = A(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < B.cols(); ++j)
        out(i, j) = static_cast<std::uint8_t>((out(i, j) + a * B(k, j)) % A.mod());
    }
  return out;
}

Mat mat_add(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols() || A.mod() != B.mod())
    throw std::invalid_argument("mat_add: dimension or modulus mismatch");
  Mat out(A.rows(), A.cols(), A.mod());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      out(i, j) = static_cast<std::uint8_t>((A(i, j) + B(i, j)) % A.mod());
  return out;
}

Mat hstack(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows() || A.mod() != B.mod())
    throw std::invalid_argument("hstack: dimension or modulus mismatch");
  Mat out(A.rows(), A.cols() + B.cols(), A.mod());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = A(i, j);
    for (std::size_t j = 0; j < B.cols(); ++j) out(i, A.cols() + j) = B(i, j);
  }
  return out;
}

Vec mat_vec(const Mat& M, const Vec& x) {
  if (M.cols() != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
  Vec out(M.rows(), 0);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    unsigned acc = 0;
    for (std::size_t j = 0; j < M.cols(); ++j) acc += M(i, j) * x[j];
    out[i] = static_cast<std::uint8_t>(acc % M.mod());
  }
  return out;
}

Vec vec_mat(const Vec& x, const Mat& M) {
  if (M.rows() != x.size()) throw std::invalid_argument("vec_mat: dimension mismatch");
  Vec out(M.cols(), 0);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < M.cols(); ++j)
      out[j] = static_cast<std::uint8_t>((out[j] + x[i] * M(i, j)) % M.mod());
  }
  return out;
}

Vec vec_add(const Vec& a, const Vec& b, unsigned mod) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = static_cast<std::uint8_t>((a[i] + b[i]) % mod);
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b, unsigned mod) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = static_cast<std::uint8_t>((a[i] + mod - b[i]) % mod);
  return out;
}

Vec vec_scale(std::uint8_t c, const Vec& a, unsigned mod) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>((c * a[i]) % mod);
  return out;
}

bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint8_t x) { return x == 0; });
}

namespace {

// In-place elementary row operations shared by the elimination routines.
struct RowOps {
  Mat& M;
  unsigned mod;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < M.cols(); ++c) std::swap(M(i, c), M(j, c));
  }
  void scale_row(std::size_t i, std::uint8_t u) {
    if (u == 1) return;
    for (std::size_t c = 0; c < M.cols(); ++c)
      M(i, c) = static_cast<std::uint8_t>((u * M(i, c)) % mod);
  }
  // row[dst] -= coef * row[src]
  void sub_row(std::size_t dst, std::uint8_t coef, std::size_t src) {
    if (!coef) return;
    for (std::size_t c = 0; c < M.cols(); ++c)
      M(dst, c) = static_cast<std::uint8_t>((M(dst, c) + mod - (coef * M(src, c)) % mod) % mod);
  }
};

}  // namespace

SystematicGenerator quaternary_systematic_form(const Mat& G) {
  const std::size_t n = G.cols();
  const unsigned mod = G.mod();
  Mat M = G;
  RowOps ops{M, mod};
  std::vector<bool> used(n, false);
  IndexSet unit_cols, two_cols;
  std::size_t row = 0;

  // Sweep 1: unit pivots. Rescan from the leftmost unused column after every
  // pivot: clearing a column can re-introduce units into columns that were
  // all-even on the earlier pass.
  while (row < M.rows()) {
    std::size_t pc = n, pr = 0;
    for (std::size_t c = 0; c < n && pc == n; ++c) {
      if (used[c]) continue;
      for (std::size_t r = row; r < M.rows(); ++r)
        if (is_unit(M(r, c), mod)) {
          pc = c;
          pr = r;
          break;
        }
    }
    if (pc == n) break;
    ops.swap_rows(pr, row);
    ops.scale_row(row, unit_inv(M(row, pc)));
    for (std::size_t r = 0; r < M.rows(); ++r)
      if (r != row) ops.sub_row(r, M(r, pc), row);
    used[pc] = true;
    unit_cols.push_back(pc);
    ++row;
  }
  const std::size_t k1 = row;

  // Sweep 2 (mod 4 only): the remaining rows are all-even; pivot on 2-entries.
  if (mod == 4) {
    while (row < M.rows()) {
      std::size_t pc = n, pr = 0;
      for (std::size_t c = 0; c < n && pc == n; ++c) {
        if (used[c]) continue;
        for (std::size_t r = row; r < M.rows(); ++r)
          if (M(r, c) == 2) {
            pc = c;
            pr = r;
            break;
          }
      }
      if (pc == n) break;
      ops.swap_rows(pr, row);
      // Clear even entries everywhere else; unit rows keep their parity, so
      // their entries in this column drop to {0, 1}.
      for (std::size_t r = 0; r < M.rows(); ++r)
        if (r != row && M(r, pc) >= 2) ops.sub_row(r, 1, row);
      used[pc] = true;
      two_cols.push_back(pc);
      ++row;
    }
  }
  const std::size_t k2 = row - k1;

  IndexSet col_perm = unit_cols;
  col_perm.insert(col_perm.end(), two_cols.begin(), two_cols.end());
  for (std::size_t c = 0; c < n; ++c)
    if (!used[c]) col_perm.push_back(c);

  const std::size_t rest = n - k1 - k2;
  SystematicGenerator sg;
  sg.type = CodeType{n, k1, k2};
  sg.A = Mat(k1, k2, 2);
  sg.B = Mat(k1, rest, 4);
  sg.C = Mat(k2, rest, 2);
  sg.col_perm = col_perm;
  for (std::size_t r = 0; r < k1; ++r) {
    for (std::size_t j = 0; j < k2; ++j) sg.A(r, j) = static_cast<std::uint8_t>(M(r, two_cols[j]) & 1u);
    for (std::size_t j = 0; j < rest; ++j) {
      std::uint8_t x = M(r, col_perm[k1 + k2 + j]);
      sg.B(r, j) = mod == 2 ? x : x;
    }
  }
  for (std::size_t r = 0; r < k2; ++r)
    for (std::size_t j = 0; j < rest; ++j)
      sg.C(r, j) = static_cast<std::uint8_t>(M(k1 + r, col_perm[k1 + k2 + j]) / 2);
  if (mod == 2) sg.B = sg.B.mod2().lift4();
  return sg;
}

SystematicParityCheck parity_from_generator(const SystematicGenerator& sg) {
  SystematicParityCheck pc;
  pc.type = sg.type;
  pc.col_perm = sg.col_perm;
  // D = -B^T - C^T A^T over Z4 (A, C enter through their {0,1} lift).
  Mat Bt = sg.B.transpose();
  Mat CtAt = mat_mul(sg.C.transpose().lift4(), sg.A.transpose().lift4());
  pc.D = mat_add(Bt.negated(), CtAt.negated());
  pc.E = sg.C.transpose();
  pc.F = sg.A.transpose();
  return pc;
}

Mat expand_generator(const SystematicGenerator& sg, bool sys_order) {
  const auto [n, k1, k2] = sg.type;
  const std::size_t rest = n - k1 - k2;
  Mat G(k1 + k2, n, 4);
  Mat sys(k1 + k2, n, 4);
  for (std::size_t r = 0; r < k1; ++r) {
    sys(r, r) = 1;
    for (std::size_t j = 0; j < k2; ++j) sys(r, k1 + j) = sg.A(r, j);
    for (std::size_t j = 0; j < rest; ++j) sys(r, k1 + k2 + j) = sg.B(r, j);
  }
  for (std::size_t r = 0; r < k2; ++r) {
    sys(k1 + r, k1 + r) = 2;
    for (std::size_t j = 0; j < rest; ++j)
      sys(k1 + r, k1 + k2 + j) = static_cast<std::uint8_t>(2 * sg.C(r, j));
  }
  if (sys_order) return sys;
  for (std::size_t r = 0; r < k1 + k2; ++r)
    for (std::size_t p = 0; p < n; ++p) G(r, sg.col_perm[p]) = sys(r, p);
  return G;
}

Mat expand_parity(const SystematicParityCheck& pc, bool sys_order) {
  const auto [n, k1, k2] = pc.type;
  const std::size_t rest = n - k1 - k2;
  Mat sys(rest + k2, n, 4);
  for (std::size_t r = 0; r < rest; ++r) {
    for (std::size_t j = 0; j < k1; ++j) sys(r, j) = pc.D(r, j);
    for (std::size_t j = 0; j < k2; ++j) sys(r, k1 + j) = pc.E(r, j);
    sys(r, k1 + k2 + r) = 1;
  }
  for (std::size_t r = 0; r < k2; ++r) {
    for (std::size_t j = 0; j < k1; ++j) sys(rest + r, j) = static_cast<std::uint8_t>(2 * pc.F(r, j));
    sys(rest + r, k1 + r) = 2;
  }
  if (sys_order) return sys;
  Mat H(rest + k2, n, 4);
  for (std::size_t r = 0; r < rest + k2; ++r)
    for (std::size_t p = 0; p < n; ++p) H(r, pc.col_perm[p]) = sys(r, p);
  return H;
}

Vec encode(const SystematicGenerator& sg, const Vec& u) {
  const auto [n, k1, k2] = sg.type;
  if (u.size() != k1 + k2) throw std::invalid_argument("encode: message length mismatch");
  for (std::size_t i = k1; i < k1 + k2; ++i)
    if (u[i] > 1) throw std::invalid_argument("encode: order-2 message part must be 0/1");
  const std::size_t rest = n - k1 - k2;
  Vec u1(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k1));
  Vec u2(u.begin() + static_cast<std::ptrdiff_t>(k1), u.end());
  Vec sys(n, 0);
  for (std::size_t i = 0; i < k1; ++i) sys[i] = static_cast<std::uint8_t>(u1[i] & 3u);
  Vec mid = vec_mat(u1, sg.A.lift4());
  for (std::size_t j = 0; j < k2; ++j)
    sys[k1 + j] = static_cast<std::uint8_t>((mid[j] + 2 * u2[j]) % 4);
  Vec tail = vec_mat(u1, sg.B);
  Vec tail2 = vec_mat(u2, sg.C.doubled());
  for (std::size_t j = 0; j < rest; ++j)
    sys[k1 + k2 + j] = static_cast<std::uint8_t>((tail[j] + tail2[j]) % 4);
  Vec c(n, 0);
  for (std::size_t p = 0; p < n; ++p) c[sg.col_perm[p]] = sys[p];
  return c;
}

Vec decode_codeword(const SystematicGenerator& sg, const Vec& c) {
  const auto [n, k1, k2] = sg.type;
  if (c.size() != n) throw std::invalid_argument("decode_codeword: length mismatch");
  const std::size_t rest = n - k1 - k2;
  Vec sys(n, 0);
  for (std::size_t p = 0; p < n; ++p) sys[p] = c[sg.col_perm[p]];
  Vec u1(sys.begin(), sys.begin() + static_cast<std::ptrdiff_t>(k1));
  Vec mid = vec_mat(u1, sg.A.lift4());
  Vec u2(k2, 0);
  for (std::size_t j = 0; j < k2; ++j) {
    std::uint8_t r = static_cast<std::uint8_t>((sys[k1 + j] + 4 - mid[j]) % 4);
    if (r & 1u) throw std::invalid_argument("decode_codeword: vector is not in the code");
    u2[j] = static_cast<std::uint8_t>(r / 2);
  }
  Vec tail = vec_mat(u1, sg.B);
  Vec tail2 = vec_mat(u2, sg.C.doubled());
  for (std::size_t j = 0; j < rest; ++j)
    if (sys[k1 + k2 + j] != (tail[j] + tail2[j]) % 4)
      throw std::invalid_argument("decode_codeword: vector is not in the code");
  Vec u = u1;
  u.insert(u.end(), u2.begin(), u2.end());
  return u;
}

bool in_code(const SystematicGenerator& sg, const Vec& c) {
  try {
    decode_codeword(sg, c);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

BigInt code_cardinality(const CodeType& type) {
  BigInt card = 1;
  mpz_mul_2exp(card.get_mpz_t(), card.get_mpz_t(), 2 * type.k1 + type.k2);
  return card;
}

std::vector<Vec> enumerate_codewords(const SystematicGenerator& sg, std::uint64_t budget) {
  const auto [n, k1, k2] = sg.type;
  BigInt card = code_cardinality(sg.type);
  if (card > BigInt(static_cast<unsigned long>(budget)))
    throw std::runtime_error("enumerate_codewords: code larger than budget (" + card.get_str() +
                             " words)");
  std::vector<Vec> words;
  words.reserve(card.get_ui());
  Vec u(k1 + k2, 0);
  while (true) {
    words.push_back(encode(sg, u));
    // Odometer: order-4 digits first, then order-2 digits.
    std::size_t i = 0;
    for (; i < k1 + k2; ++i) {
      std::uint8_t lim = i < k1 ? 4 : 2;
      if (++u[i] < lim) break;
      u[i] = 0;
    }
    if (i == k1 + k2) break;
  }
  return words;
}

std::optional<Transform> find_transform(const Mat& H, const IndexSet& I, const IndexSet& Z,
                                        const IndexSet& J) {
  const std::size_t n = H.cols();
  const unsigned mod = H.mod();
  if (I.size() + Z.size() + J.size() != n)
    throw std::invalid_argument("find_transform: I, Z, J must partition the columns");
  if (Z.size() + J.size() > H.rows())
    throw std::invalid_argument("find_transform: more pivot columns than rows");
  std::vector<bool> seen(n, false);
  for (const auto& set : {I, Z, J})
    for (std::size_t c : set) {
      if (c >= n || seen[c]) throw std::invalid_argument("find_transform: invalid column split");
      seen[c] = true;
    }

  // Eliminate on [H | Id]; unit pivots down the Z then J columns.
  Mat M = hstack(H, Mat::identity(H.rows(), mod));
  RowOps ops{M, mod};
  IndexSet pivot_cols = Z;
  pivot_cols.insert(pivot_cols.end(), J.begin(), J.end());
  std::size_t row = 0;
  for (std::size_t c : pivot_cols) {
    std::size_t pr = M.rows();
    for (std::size_t r = row; r < M.rows(); ++r)
      if (is_unit(M(r, c), mod)) {
        pr = r;
        break;
      }
    if (pr == M.rows()) return std::nullopt;  // retry with a new split
    ops.swap_rows(pr, row);
    ops.scale_row(row, unit_inv(M(row, c)));
    for (std::size_t r = 0; r < M.rows(); ++r)
      if (r != row) ops.sub_row(r, M(r, c), row);
    ++row;
  }
  // The residual rows must be all-even on I (they already vanish on Z and J)
  // to produce the 2C block.
  if (mod == 4) {
    for (std::size_t r = row; r < M.rows(); ++r)
      for (std::size_t c : I)
        if (M(r, c) & 1u) return std::nullopt;
  }

  Transform tr;
  tr.U = Mat(H.rows(), H.rows(), mod);
  tr.UH = Mat(H.rows(), n, mod);
  for (std::size_t r = 0; r < H.rows(); ++r) {
    for (std::size_t c = 0; c < H.rows(); ++c) tr.U(r, c) = M(r, n + c);
    for (std::size_t c = 0; c < n; ++c) tr.UH(r, c) = M(r, c);
  }
  return tr;
}

bool is_information_set(const SystematicGenerator& sg, const IndexSet& I) {
  if (I.size() != sg.type.k1 + sg.type.k2)
    throw std::invalid_argument("is_information_set: |I| must be k1+k2");
  Mat G = expand_generator(sg);
  SystematicGenerator proj = quaternary_systematic_form(G.columns(I));
  return proj.type.k1 == sg.type.k1 && proj.type.k2 == sg.type.k2;
}

Mat inverse(const Mat& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("inverse: matrix must be square");
  const unsigned mod = M.mod();
  Mat W = hstack(M, Mat::identity(M.rows(), mod));
  RowOps ops{W, mod};
  for (std::size_t c = 0; c < M.cols(); ++c) {
    std::size_t pr = W.rows();
    for (std::size_t r = c; r < W.rows(); ++r)
      if (is_unit(W(r, c), mod)) {
        pr = r;
        break;
      }
    if (pr == W.rows()) throw std::invalid_argument("inverse: matrix is singular");
    ops.swap_rows(pr, c);
    ops.scale_row(c, unit_inv(W(c, c)));
    for (std::size_t r = 0; r < W.rows(); ++r)
      if (r != c) ops.sub_row(r, W(r, c), c);
  }
  Mat out(M.rows(), M.cols(), mod);
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) out(r, c) = W(r, M.cols() + c);
  return out;
}

bool is_invertible(const Mat& M) {
  if (M.rows() != M.cols()) return false;
  try {
    inverse(M);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Mat random_matrix(std::size_t rows, std::size_t cols, unsigned mod, Rng& rng) {
  Mat m(rows, cols, mod);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.residue(mod);
  return m;
}

Mat random_invertible(std::size_t k, unsigned mod, Rng& rng) {
  while (true) {
    Mat m = random_matrix(k, k, mod, rng);
    if (is_invertible(m)) return m;
  }
}

Mat random_block_invertible(std::size_t k1, std::size_t k2, Rng& rng) {
  Mat S1 = random_invertible(k1, 4, rng);
  Mat S2 = random_invertible(k2, 4, rng);
  Mat S(k1 + k2, k1 + k2, 4);
  for (std::size_t r = 0; r < k1; ++r)
    for (std::size_t c = 0; c < k1; ++c) S(r, c) = S1(r, c);
  for (std::size_t r = 0; r < k2; ++r)
    for (std::size_t c = 0; c < k2; ++c) S(k1 + r, k1 + c) = S2(r, c);
  return S;
}

IndexSet random_permutation_vec(std::size_t n, Rng& rng) { return rng.permutation(n); }

Mat permutation_matrix(const IndexSet& perm, unsigned mod) {
  Mat P(perm.size(), perm.size(), mod);
  for (std::size_t i = 0; i < perm.size(); ++i) P(i, perm[i]) = 1;
  return P;
}

Vec apply_perm(const Vec& x, const IndexSet& perm) {
  if (x.size() != perm.size()) throw std::invalid_argument("apply_perm: length mismatch");
  Vec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[perm[i]] = x[i];
  return y;
}

Vec apply_perm_inv(const Vec& x, const IndexSet& perm) {
  if (x.size() != perm.size()) throw std::invalid_argument("apply_perm_inv: length mismatch");
  Vec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[perm[i]];
  return y;
}

Mat cols_perm(const Mat& M, const IndexSet& perm) {
  if (M.cols() != perm.size()) throw std::invalid_argument("cols_perm: dimension mismatch");
  Mat out(M.rows(), M.cols(), M.mod());
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) out(r, c) = M(r, perm[c]);
  return out;
}

SystematicGenerator random_systematic_generator(std::size_t n, std::size_t k1, std::size_t k2,
                                                Rng& rng) {
  if (k1 + k2 > n) throw std::invalid_argument("random_systematic_generator: k1+k2 > n");
  SystematicGenerator sg;
  sg.type = CodeType{n, k1, k2};
  const std::size_t rest = n - k1 - k2;
  sg.A = random_matrix(k1, k2, 2, rng);
  sg.B = random_matrix(k1, rest, 4, rng);
  sg.C = random_matrix(k2, rest, 2, rng);
  sg.col_perm = rng.permutation(n);
  return sg;
}

}  // namespace leeisd
