#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "leeisd/lee.hpp"
#include "leeisd/rng.hpp"
#include "leeisd/z4.hpp"

using namespace leeisd;

namespace {

Mat from_rows(std::initializer_list<std::initializer_list<int>> rows, unsigned mod) {
  std::size_t r = rows.size(), c = rows.begin()->size();
  Mat M(r, c, mod);
  std::size_t i = 0;
  for (auto& row : rows) {
    std::size_t j = 0;
    for (int x : row) M(i, j++) = static_cast<std::uint8_t>(x);
    ++i;
  }
  return M;
}

// All Z4-linear combinations of the rows of M.
std::set<Vec> row_span(const Mat& M) {
  std::set<Vec> span;
  Vec coef(M.rows(), 0);
  for (;;) {
    Vec c(M.cols(), 0);
    for (std::size_t r = 0; r < M.rows(); ++r)
      if (coef[r]) c = vec_add(c, vec_scale(coef[r], M.row(r), 4), 4);
    span.insert(c);
    std::size_t i = 0;
    while (i < coef.size() && coef[i] == 3) coef[i++] = 0;
    if (i == coef.size()) return span;
    ++coef[i];
  }
}

}  // namespace

TEST_CASE("systematic form recovers the type and span of a scrambled generator") {
  // Rows: a free row, its double plus an independent order-2 row, and noise.
  Mat G = from_rows({{1, 2, 3, 0, 1, 2},
                     {2, 0, 2, 2, 0, 2},
                     {3, 2, 1, 0, 1, 2},
                     {0, 2, 0, 2, 2, 0}},
                    4);
  SystematicGenerator sg = quaternary_systematic_form(G);
  CHECK(sg.type.n == 6);
  CHECK(sg.type.k1 * 2 + sg.type.k2 >= 2);  // at least the visible free rank
  CHECK(row_span(expand_generator(sg)) == row_span(G));
  CHECK(code_cardinality(sg.type).get_str() ==
        std::to_string(row_span(G).size()));
}

TEST_CASE("an all-even generator has no free part") {
  Mat G = from_rows({{2, 0, 2}, {0, 2, 2}}, 4);
  SystematicGenerator sg = quaternary_systematic_form(G);
  CHECK(sg.type.k1 == 0);
  CHECK(sg.type.k2 == 2);
  CHECK(row_span(expand_generator(sg)) == row_span(G));
}

TEST_CASE("parity check annihilates the generator, both expanded orders") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 6 + rng.below(5);
    std::size_t k1 = 1 + rng.below(2), k2 = rng.below(3);
    if (k1 + k2 > n) continue;
    SystematicGenerator sg = random_systematic_generator(n, k1, k2, rng);
    SystematicParityCheck pc = parity_from_generator(sg);
    for (bool sys : {false, true}) {
      Mat H = expand_parity(pc, sys);
      Mat G = expand_generator(sg, sys);
      Mat prod = mat_mul(H, G.transpose());
      CHECK(prod == Mat(H.rows(), G.rows(), 4));
    }
  }
}

TEST_CASE("encode and decode_codeword are mutually inverse") {
  Rng rng(5);
  SystematicGenerator sg = random_systematic_generator(9, 2, 2, rng);
  Vec u = {3, 1, 1, 0};
  Vec c = encode(sg, u);
  CHECK(in_code(sg, c));
  CHECK(decode_codeword(sg, c) == u);

  Vec bad = c;
  bad[0] = static_cast<std::uint8_t>((bad[0] + 1) % 4);
  CHECK_FALSE(in_code(sg, bad));
  CHECK_THROWS_AS(decode_codeword(sg, bad), std::invalid_argument);

  Vec badMsg = {1, 0, 2, 0};  // order-2 part must be a bit
  CHECK_THROWS_AS(encode(sg, badMsg), std::invalid_argument);
}

TEST_CASE("enumerate_codewords lists the whole code exactly once") {
  Rng rng(17);
  SystematicGenerator sg = random_systematic_generator(7, 1, 2, rng);
  auto words = enumerate_codewords(sg, 1000);
  CHECK(words.size() == 16);  // 4^1 * 2^2
  std::set<Vec> uniq(words.begin(), words.end());
  CHECK(uniq.size() == words.size());
  CHECK(uniq == row_span(expand_generator(sg)));
  CHECK_THROWS(enumerate_codewords(sg, 3));
}

TEST_CASE("find_transform produces the block shape and an invertible U") {
  Rng rng(23);
  SystematicGenerator sg = random_systematic_generator(12, 2, 2, rng);
  Mat H = expand_parity(parity_from_generator(sg));
  const std::size_t n = 12, K = 4, ell = 2;

  for (int attempt = 0; attempt < 200; ++attempt) {
    IndexSet perm = rng.permutation(n);
    IndexSet I(perm.begin(), perm.begin() + K);
    IndexSet Z(perm.begin() + K, perm.begin() + K + ell);
    IndexSet J(perm.begin() + K + ell, perm.end());
    std::sort(I.begin(), I.end());
    std::sort(Z.begin(), Z.end());
    std::sort(J.begin(), J.end());
    auto tr = find_transform(H, I, Z, J);
    if (!tr) continue;

    CHECK(is_invertible(tr->U));
    CHECK(mat_mul(tr->U, H) == tr->UH);
    const std::size_t rows = n - 2;  // n - k1
    // Z columns carry (Id_ell; 0; 0), J columns (0; Id; 0).
    for (std::size_t i = 0; i < ell; ++i)
      for (std::size_t r = 0; r < rows; ++r)
        CHECK(tr->UH(r, Z[i]) == (r == i ? 1 : 0));
    for (std::size_t j = 0; j < J.size(); ++j)
      for (std::size_t r = 0; r < rows; ++r)
        CHECK(tr->UH(r, J[j]) == (r == ell + j ? 1 : 0));
    // Bottom k2 rows are even on the I columns.
    for (std::size_t r = rows - 2; r < rows; ++r)
      for (std::size_t c : I) CHECK(tr->UH(r, c) % 2 == 0);
    return;
  }
  FAIL("no admissible column split found in 200 attempts");
}

TEST_CASE("find_transform rejects malformed splits") {
  Rng rng(29);
  SystematicGenerator sg = random_systematic_generator(8, 2, 1, rng);
  Mat H = expand_parity(parity_from_generator(sg));
  IndexSet I = {0, 1, 2}, Z = {2}, J = {3, 4, 5, 6};  // overlap between I and Z
  CHECK_THROWS_AS(find_transform(H, I, Z, J), std::invalid_argument);
  IndexSet shortJ = {3, 4, 5};  // does not cover the length
  CHECK_THROWS_AS(find_transform(H, I, {7}, shortJ), std::invalid_argument);
}

TEST_CASE("inverse is two-sided over Z4 and mod 2") {
  Rng rng(31);
  for (unsigned mod : {2u, 4u}) {
    Mat M = random_invertible(5, mod, rng);
    Mat Minv = inverse(M);
    CHECK(mat_mul(M, Minv) == Mat::identity(5, mod));
    CHECK(mat_mul(Minv, M) == Mat::identity(5, mod));
  }
  Mat singular = from_rows({{2, 0}, {0, 2}}, 4);  // doubles of the identity
  CHECK_FALSE(is_invertible(singular));
  CHECK_THROWS_AS(inverse(singular), std::invalid_argument);
}

TEST_CASE("permutation helpers agree with the matrix picture") {
  Rng rng(37);
  IndexSet perm = rng.permutation(6);
  Vec x = {0, 1, 2, 3, 1, 2};
  CHECK(apply_perm_inv(apply_perm(x, perm), perm) == x);
  Mat P = permutation_matrix(perm, 4);
  CHECK(vec_mat(x, P) == apply_perm(x, perm));

  Mat M = random_matrix(3, 6, 4, rng);
  CHECK(cols_perm(M, perm) == mat_mul(M, P.transpose()));
}

TEST_CASE("is_information_set accepts systematic columns and rejects rank-deficient ones") {
  Rng rng(41);
  SystematicGenerator sg = random_systematic_generator(10, 2, 2, rng);
  IndexSet sys(sg.col_perm.begin(), sg.col_perm.begin() + 4);
  std::sort(sys.begin(), sys.end());
  CHECK(is_information_set(sg, sys));

  // Duplicated column index cannot span the code.
  IndexSet bad = {sys[0], sys[0], sys[1], sys[2]};
  CHECK_FALSE(is_information_set(sg, bad));
}

TEST_CASE("random_systematic_generator hits the requested type exactly") {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    SystematicGenerator sg = random_systematic_generator(11, 3, 2, rng);
    CHECK((sg.type == CodeType{11, 3, 2}));
    SystematicGenerator re = quaternary_systematic_form(expand_generator(sg));
    CHECK(re.type == sg.type);
  }
}
