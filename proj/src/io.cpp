#include "leeisd/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace leeisd {

namespace {

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t b = s.find_first_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::size_t to_size(const std::string& tok, const TextReader& r, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    r.fail(std::string("expected a non-negative integer for ") + what + ", got '" + tok + "'");
  return value;
}

std::uint8_t to_digit(const std::string& tok, unsigned mod, const TextReader& r) {
  if (tok.size() != 1 || tok[0] < '0' || tok[0] >= static_cast<char>('0' + mod))
    r.fail("expected a digit below " + std::to_string(mod) + ", got '" + tok + "'");
  return static_cast<std::uint8_t>(tok[0] - '0');
}

Mat block_diag(const Mat& S1, const Mat& S2) {
  Mat S(S1.rows() + S2.rows(), S1.cols() + S2.cols(), 4);
  for (std::size_t r = 0; r < S1.rows(); ++r)
    for (std::size_t c = 0; c < S1.cols(); ++c) S(r, c) = S1(r, c);
  for (std::size_t r = 0; r < S2.rows(); ++r)
    for (std::size_t c = 0; c < S2.cols(); ++c) S(S1.rows() + r, S1.cols() + c) = S2(r, c);
  return S;
}

void expect_header(const std::vector<std::string>& toks, const char* tag, std::size_t fields,
                   TextReader& r) {
  if (toks.empty() || toks[0] != tag || toks.size() != fields)
    r.fail(std::string("expected header '") + tag + "' with " + std::to_string(fields - 1) +
           " fields");
}

}  // namespace

std::string TextReader::line(const char* what) {
  if (pending_) {
    std::string out = std::move(*pending_);
    pending_.reset();
    return out;
  }
  std::string raw;
  std::istream& in = in_;
  while (std::getline(in, raw)) {
    ++lineno_;
    std::string s = strip(raw);
    if (!s.empty()) return s;
  }
  throw ParseError(std::string("unexpected end of input while reading ") + what);
}

bool TextReader::at_end() {
  if (pending_) return false;
  std::string raw;
  while (std::getline(in_, raw)) {
    ++lineno_;
    std::string s = strip(raw);
    if (!s.empty()) {
      pending_ = std::move(s);
      return false;
    }
  }
  return true;
}

void TextReader::fail(const std::string& msg) const {
  throw ParseError("line " + std::to_string(lineno_) + ": " + msg);
}

std::string write_mat(const Mat& M) {
  std::ostringstream out;
  out << (M.mod() == 4 ? "Z4MATRIX " : "F2MATRIX ") << M.rows() << ' ' << M.cols() << '\n';
  if (M.cols() > 0)
    for (std::size_t r = 0; r < M.rows(); ++r) {
      for (std::size_t c = 0; c < M.cols(); ++c) out << (c ? " " : "") << int(M(r, c));
      out << '\n';
    }
  return out.str();
}

Mat read_mat(TextReader& r) {
  auto toks = tokens(r.line("matrix header"));
  if (toks.size() != 3 || (toks[0] != "Z4MATRIX" && toks[0] != "F2MATRIX"))
    r.fail("expected 'Z4MATRIX r c' or 'F2MATRIX r c'");
  unsigned mod = toks[0][0] == 'Z' ? 4 : 2;
  std::size_t rows = to_size(toks[1], r, "row count");
  std::size_t cols = to_size(toks[2], r, "column count");
  Mat M(rows, cols, mod);
  if (cols > 0)
    for (std::size_t i = 0; i < rows; ++i) {
      auto row = tokens(r.line("matrix row"));
      if (row.size() != cols)
        r.fail("matrix row has " + std::to_string(row.size()) + " entries, expected " +
               std::to_string(cols));
      for (std::size_t c = 0; c < cols; ++c) M(i, c) = to_digit(row[c], mod, r);
    }
  return M;
}

std::string write_perm(const IndexSet& perm) {
  std::ostringstream out;
  out << "PERM " << perm.size() << '\n';
  for (std::size_t i = 0; i < perm.size(); ++i) out << (i ? " " : "") << perm[i] + 1;
  out << '\n';
  return out.str();
}

IndexSet read_perm(TextReader& r) {
  auto toks = tokens(r.line("permutation header"));
  expect_header(toks, "PERM", 2, r);
  std::size_t n = to_size(toks[1], r, "permutation length");
  auto img = tokens(r.line("permutation image"));
  if (img.size() != n)
    r.fail("permutation image has " + std::to_string(img.size()) + " entries, expected " +
           std::to_string(n));
  IndexSet perm(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = to_size(img[i], r, "permutation entry");
    if (v < 1 || v > n || seen[v - 1]) r.fail("'" + img[i] + "' is not a fresh value in 1.." +
                                              std::to_string(n));
    seen[v - 1] = true;
    perm[i] = v - 1;
  }
  return perm;
}

std::string write_vec(const Vec& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << int(v[i]);
  return out.str();
}

Vec read_vec(TextReader& r, std::size_t expected_len, unsigned mod, const char* what) {
  if (expected_len == 0) return {};
  auto toks = tokens(r.line(what));
  if (toks.size() != expected_len)
    r.fail(std::string(what) + " has " + std::to_string(toks.size()) + " entries, expected " +
           std::to_string(expected_len));
  Vec v(expected_len);
  for (std::size_t i = 0; i < expected_len; ++i) v[i] = to_digit(toks[i], mod, r);
  return v;
}

std::string write_instance(const IsdInstance& inst) {
  std::ostringstream out;
  out << "ISD " << (inst.field == Field::Z4 ? "Z4" : "F2") << ' ' << inst.n << ' ' << inst.k1
      << ' ' << inst.k2 << ' ' << inst.t << '\n';
  out << write_mat(inst.H) << "SYNDROME\n" << write_vec(inst.s) << '\n';
  return out.str();
}

IsdInstance read_instance(TextReader& r) {
  auto toks = tokens(r.line("instance header"));
  if (toks.size() != 6 || toks[0] != "ISD" || (toks[1] != "Z4" && toks[1] != "F2"))
    r.fail("expected 'ISD Z4|F2 n k1 k2 t'");
  IsdInstance inst;
  inst.field = toks[1] == "Z4" ? Field::Z4 : Field::F2;
  inst.n = to_size(toks[2], r, "n");
  inst.k1 = to_size(toks[3], r, "k1");
  inst.k2 = to_size(toks[4], r, "k2");
  inst.t = to_size(toks[5], r, "t");
  if (inst.field == Field::F2 && inst.k2 != 0) r.fail("binary instances need k2 = 0");
  if (inst.k1 + inst.k2 > inst.n) r.fail("k1 + k2 exceeds n");
  inst.H = read_mat(r);
  unsigned mod = inst.field == Field::Z4 ? 4 : 2;
  if (inst.H.mod() != mod) r.fail("matrix modulus does not match the instance field");
  if (inst.H.rows() != inst.n - inst.k1 || inst.H.cols() != inst.n)
    r.fail("parity-check shape must be (n - k1) x n");
  auto marker = tokens(r.line("SYNDROME marker"));
  expect_header(marker, "SYNDROME", 1, r);
  inst.s = read_vec(r, inst.H.rows(), mod, "syndrome");
  return inst;
}

IsdInstance read_instance_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  TextReader r(in);
  return read_instance(r);
}

std::string write_systematic(const SystematicGenerator& sg) {
  return write_perm(sg.col_perm) + write_mat(sg.A) + write_mat(sg.B) + write_mat(sg.C);
}

SystematicGenerator read_systematic(TextReader& r, std::size_t n, std::size_t k1,
                                    std::size_t k2) {
  if (k1 + k2 > n) r.fail("k1 + k2 exceeds n");
  SystematicGenerator sg;
  sg.type = CodeType{n, k1, k2};
  sg.col_perm = read_perm(r);
  if (sg.col_perm.size() != n) r.fail("column permutation length must equal n");
  sg.A = read_mat(r);
  sg.B = read_mat(r);
  sg.C = read_mat(r);
  const std::size_t rest = n - k1 - k2;
  if (sg.A.mod() != 2 || sg.A.rows() != k1 || sg.A.cols() != k2)
    r.fail("block A must be a k1 x k2 binary matrix");
  if (sg.B.mod() != 4 || sg.B.rows() != k1 || sg.B.cols() != rest)
    r.fail("block B must be a k1 x (n-k1-k2) quaternary matrix");
  if (sg.C.mod() != 2 || sg.C.rows() != k2 || sg.C.cols() != rest)
    r.fail("block C must be a k2 x (n-k1-k2) binary matrix");
  return sg;
}

std::string write_mceliece_public(const McEliecePublic& pub) {
  std::ostringstream out;
  out << "Z4MCELIECE-PUBLIC " << pub.type.n << ' ' << pub.type.k1 << ' ' << pub.type.k2 << ' '
      << pub.t << '\n';
  out << write_systematic(pub.sg);
  return out.str();
}

McEliecePublic read_mceliece_public(TextReader& r) {
  auto toks = tokens(r.line("public key header"));
  expect_header(toks, "Z4MCELIECE-PUBLIC", 5, r);
  McEliecePublic pub;
  pub.type = CodeType{to_size(toks[1], r, "n"), to_size(toks[2], r, "k1"),
                      to_size(toks[3], r, "k2")};
  pub.t = to_size(toks[4], r, "t");
  if (pub.type.k1 + pub.type.k2 > pub.type.n) r.fail("k1 + k2 exceeds n");
  pub.sg = read_systematic(r, pub.type.n, pub.type.k1, pub.type.k2);
  return pub;
}

std::string write_mceliece_private(const McElieceKeyPair& kp) {
  const CodeType& type = kp.priv.code.sg.type;
  std::ostringstream out;
  out << "Z4MCELIECE-PRIVATE " << type.n << ' ' << type.k1 << ' ' << type.k2 << ' '
      << kp.priv.code.t << '\n';
  out << write_mat(kp.priv.S1) << write_mat(kp.priv.S2) << write_perm(kp.priv.P)
      << write_systematic(kp.priv.code.sg);
  return out.str();
}

McElieceKeyPair read_mceliece_private(TextReader& r, std::uint64_t enum_budget) {
  auto toks = tokens(r.line("private key header"));
  expect_header(toks, "Z4MCELIECE-PRIVATE", 5, r);
  std::size_t n = to_size(toks[1], r, "n");
  std::size_t k1 = to_size(toks[2], r, "k1");
  std::size_t k2 = to_size(toks[3], r, "k2");
  std::size_t t = to_size(toks[4], r, "t");
  if (k1 + k2 > n) r.fail("k1 + k2 exceeds n");

  McElieceKeyPair kp;
  kp.priv.S1 = read_mat(r);
  kp.priv.S2 = read_mat(r);
  if (kp.priv.S1.mod() != 4 || kp.priv.S1.rows() != k1 || kp.priv.S1.cols() != k1)
    r.fail("scrambler S1 must be a k1 x k1 quaternary matrix");
  if (kp.priv.S2.mod() != 4 || kp.priv.S2.rows() != k2 || kp.priv.S2.cols() != k2)
    r.fail("scrambler S2 must be a k2 x k2 quaternary matrix");
  kp.priv.P = read_perm(r);
  if (kp.priv.P.size() != n) r.fail("permutation length must equal n");
  SystematicGenerator sg = read_systematic(r, n, k1, k2);
  kp.priv.code = assemble_secret_code(std::move(sg), t, enum_budget);

  // Replay the key derivation so the public side matches keygen exactly.
  Mat SG = mat_mul(block_diag(kp.priv.S1, kp.priv.S2), expand_generator(kp.priv.code.sg));
  kp.Gprime = Mat(SG.rows(), SG.cols(), 4);
  for (std::size_t row = 0; row < SG.rows(); ++row)
    for (std::size_t p = 0; p < SG.cols(); ++p) kp.Gprime(row, kp.priv.P[p]) = SG(row, p);
  kp.pub.type = CodeType{n, k1, k2};
  kp.pub.t = t;
  kp.pub.sg = quaternary_systematic_form(kp.Gprime);
  return kp;
}

std::string write_niederreiter_public(const NiederreiterPublic& pub) {
  std::ostringstream out;
  out << "Z4NIEDERREITER-PUBLIC " << pub.type.n << ' ' << pub.type.k1 << ' ' << pub.type.k2
      << ' ' << pub.t << '\n';
  out << write_mat(pub.Hprime);
  return out.str();
}

NiederreiterPublic read_niederreiter_public(TextReader& r) {
  auto toks = tokens(r.line("public key header"));
  expect_header(toks, "Z4NIEDERREITER-PUBLIC", 5, r);
  NiederreiterPublic pub;
  pub.type = CodeType{to_size(toks[1], r, "n"), to_size(toks[2], r, "k1"),
                      to_size(toks[3], r, "k2")};
  pub.t = to_size(toks[4], r, "t");
  if (pub.type.k1 + pub.type.k2 > pub.type.n) r.fail("k1 + k2 exceeds n");
  pub.Hprime = read_mat(r);
  if (pub.Hprime.mod() != 4 || pub.Hprime.rows() != pub.type.n - pub.type.k1 ||
      pub.Hprime.cols() != pub.type.n)
    r.fail("scrambled parity check must be a (n - k1) x n quaternary matrix");
  return pub;
}

std::string write_niederreiter_private(const NiederreiterKeyPair& kp) {
  const CodeType& type = kp.priv.code.sg.type;
  std::ostringstream out;
  out << "Z4NIEDERREITER-PRIVATE " << type.n << ' ' << type.k1 << ' ' << type.k2 << ' '
      << kp.priv.code.t << '\n';
  out << write_mat(kp.priv.S) << write_perm(kp.priv.P) << write_systematic(kp.priv.code.sg);
  return out.str();
}

NiederreiterKeyPair read_niederreiter_private(TextReader& r, std::uint64_t enum_budget) {
  auto toks = tokens(r.line("private key header"));
  expect_header(toks, "Z4NIEDERREITER-PRIVATE", 5, r);
  std::size_t n = to_size(toks[1], r, "n");
  std::size_t k1 = to_size(toks[2], r, "k1");
  std::size_t k2 = to_size(toks[3], r, "k2");
  std::size_t t = to_size(toks[4], r, "t");
  if (k1 + k2 > n) r.fail("k1 + k2 exceeds n");

  NiederreiterKeyPair kp;
  kp.priv.S = read_mat(r);
  if (kp.priv.S.mod() != 4 || kp.priv.S.rows() != n - k1 || kp.priv.S.cols() != n - k1)
    r.fail("scrambler S must be a (n - k1) x (n - k1) quaternary matrix");
  kp.priv.P = read_perm(r);
  if (kp.priv.P.size() != n) r.fail("permutation length must equal n");
  SystematicGenerator sg = read_systematic(r, n, k1, k2);
  kp.priv.code = assemble_secret_code(std::move(sg), t, enum_budget);
  kp.pub.type = CodeType{n, k1, k2};
  kp.pub.t = t;
  kp.pub.Hprime = mat_mul(inverse(kp.priv.S), cols_perm(kp.priv.code.H, kp.priv.P));
  return kp;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << content;
  if (!out.flush()) throw ParseError("failed writing '" + path + "'");
}

}  // namespace leeisd
