#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "leeisd/crypto.hpp"
#include "leeisd/isd.hpp"
#include "leeisd/z4.hpp"

namespace leeisd {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Line-oriented reader that reports 1-based line numbers in error messages.
class TextReader {
 public:
  explicit TextReader(std::istream& in) : in_(in) {}
  // Next non-empty line; throws ParseError at end of input.
  std::string line(const char* what);
  bool at_end();
  std::size_t lineno() const { return lineno_; }
  [[noreturn]] void fail(const std::string& msg) const;

 private:
  std::istream& in_;
  std::size_t lineno_ = 0;
  std::optional<std::string> pending_;
};

// Matrix block: header "Z4MATRIX r c" (digits 0..3) or "F2MATRIX r c"
// (digits 0/1), then r lines of c space-separated digits.
std::string write_mat(const Mat& M);
Mat read_mat(TextReader& r);

// "PERM n" plus one line with the image of 1..n.
std::string write_perm(const IndexSet& perm);
IndexSet read_perm(TextReader& r);

// One line of space-separated residues.
std::string write_vec(const Vec& v);
Vec read_vec(TextReader& r, std::size_t expected_len, unsigned mod, const char* what);

// Instance file: "ISD Z4|F2 n k1 k2 t", matrix block, "SYNDROME", vector.
std::string write_instance(const IsdInstance& inst);
IsdInstance read_instance(TextReader& r);
IsdInstance read_instance_file(const std::string& path);

// Systematic generator block: PERM colPerm, then A, B, C.
std::string write_systematic(const SystematicGenerator& sg);
SystematicGenerator read_systematic(TextReader& r, std::size_t n, std::size_t k1, std::size_t k2);

// Key files. Public keys hold only the systematic blocks (McEliece) or the
// scrambled parity check (Niederreiter); private keys hold the scramblers,
// the permutation and the secret code blocks.
std::string write_mceliece_public(const McEliecePublic& pub);
McEliecePublic read_mceliece_public(TextReader& r);
std::string write_mceliece_private(const McElieceKeyPair& kp);
McElieceKeyPair read_mceliece_private(TextReader& r, std::uint64_t enum_budget = 200000);
std::string write_niederreiter_public(const NiederreiterPublic& pub);
NiederreiterPublic read_niederreiter_public(TextReader& r);
std::string write_niederreiter_private(const NiederreiterKeyPair& kp);
NiederreiterKeyPair read_niederreiter_private(TextReader& r, std::uint64_t enum_budget = 200000);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace leeisd
