#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>

#include "leeisd/io.hpp"
#include "leeisd/isd.hpp"

using namespace leeisd;

namespace {

IsdInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  TextReader r(in);
  return read_instance(r);
}

std::string parse_error_of(const std::string& text, auto&& parse) {
  std::istringstream in(text);
  TextReader r(in);
  try {
    parse(r);
  } catch (const ParseError& ex) {
    return ex.what();
  }
  return {};
}

}  // namespace

TEST_CASE("matrix blocks round trip byte for byte") {
  Mat M(2, 3, 4);
  M(0, 0) = 1;
  M(0, 2) = 3;
  M(1, 1) = 2;
  std::string text = write_mat(M);
  CHECK(text == "Z4MATRIX 2 3\n1 0 3\n0 2 0\n");
  std::istringstream in(text);
  TextReader r(in);
  CHECK(read_mat(r) == M);

  // A zero-width block is header-only.
  Mat empty(3, 0, 2);
  CHECK(write_mat(empty) == "F2MATRIX 3 0\n");
  std::istringstream in2(write_mat(empty));
  TextReader r2(in2);
  CHECK(read_mat(r2) == empty);
}

TEST_CASE("a hand-written instance parses to the expected pieces") {
  const std::string golden =
      "ISD Z4 4 1 1 2\n"
      "Z4MATRIX 3 4\n"
      "1 2 3 0\n"
      "0 1 1 2\n"
      "2 0 1 1\n"
      "SYNDROME\n"
      "1 0 3\n";
  IsdInstance inst = parse_instance(golden);
  CHECK(inst.field == Field::Z4);
  CHECK(inst.n == 4);
  CHECK(inst.k1 == 1);
  CHECK(inst.k2 == 1);
  CHECK(inst.t == 2);
  CHECK(inst.H(0, 1) == 2);
  CHECK(inst.H(2, 0) == 2);
  CHECK(inst.s == Vec{1, 0, 3});
  CHECK(write_instance(inst) == golden);

  // Blank lines, CRLF endings and stray spaces are cosmetic.
  const std::string scruffy =
      "ISD Z4 4 1 1 2\r\n\r\n"
      "Z4MATRIX 3 4\r\n"
      "1 2 3 0\r\n"
      "  0 1 1 2\r\n"
      "2 0 1 1  \r\n"
      "\r\n"
      "SYNDROME\r\n"
      "1 0 3\r\n";
  CHECK(write_instance(parse_instance(scruffy)) == golden);
}

TEST_CASE("parse errors point at the offending line") {
  auto mat = [](TextReader& r) { read_mat(r); };
  auto perm = [](TextReader& r) { read_perm(r); };
  auto inst = [](TextReader& r) { read_instance(r); };

  CHECK(parse_error_of("Z4MATRIX 1 2\n1 4\n", mat) ==
        "line 2: expected a digit below 4, got '4'");
  CHECK(parse_error_of("F2MATRIX 1 2\n1 2\n", mat) ==
        "line 2: expected a digit below 2, got '2'");
  CHECK(parse_error_of("Z4MATRIX 2 2\n1 0 3\n0 0\n", mat) ==
        "line 2: matrix row has 3 entries, expected 2");
  CHECK(parse_error_of("BOGUS 1 2\n", mat) ==
        "line 1: expected 'Z4MATRIX r c' or 'F2MATRIX r c'");
  CHECK(parse_error_of("Z4MATRIX x 2\n", mat) ==
        "line 1: expected a non-negative integer for row count, got 'x'");
  CHECK(parse_error_of("PERM 3\n1 1 2\n", perm) ==
        "line 2: '1' is not a fresh value in 1..3");
  CHECK(parse_error_of("PERM 2\n1 5\n", perm) ==
        "line 2: '5' is not a fresh value in 1..2");
  CHECK(parse_error_of("ISD F2 4 1 1 1\n", inst) == "line 1: binary instances need k2 = 0");
  CHECK(parse_error_of("ISD Z4 4 1 1 1\nF2MATRIX 3 4\n0 0 0 0\n0 0 0 0\n0 0 0 0\nSYNDROME\n0 0 0\n",
                       inst) == "line 5: matrix modulus does not match the instance field");

  // Truncated input fails rather than hanging or misreading.
  CHECK(!parse_error_of("Z4MATRIX 2 2\n1 0\n", mat).empty());
}

TEST_CASE("random instances survive a write-read cycle") {
  for (Field field : {Field::Z4, Field::F2}) {
    Rng gen(field == Field::Z4 ? 601 : 602);
    IsdInstance inst = make_random_instance(field, 12, 3, field == Field::Z4 ? 2 : 0, 3, gen);
    std::string text = write_instance(inst);
    IsdInstance back = parse_instance(text);
    CHECK(back.field == inst.field);
    CHECK(back.n == inst.n);
    CHECK(back.k1 == inst.k1);
    CHECK(back.k2 == inst.k2);
    CHECK(back.t == inst.t);
    CHECK(back.H == inst.H);
    CHECK(back.s == inst.s);
    CHECK(write_instance(back) == text);
  }
}

TEST_CASE("scrambled-generator key files rebuild the derived blocks") {
  Rng rng(603);
  McElieceKeyPair kp = mceliece_keygen(gen_secret_code(10, 2, 1, 1, rng), rng);

  std::string pub_text = write_mceliece_public(kp.pub);
  std::istringstream pin(pub_text);
  TextReader pr(pin);
  McEliecePublic pub = read_mceliece_public(pr);
  CHECK((pub.type == kp.pub.type));
  CHECK(pub.t == kp.pub.t);
  CHECK(pub.sg.col_perm == kp.pub.sg.col_perm);
  CHECK(pub.sg.A == kp.pub.sg.A);
  CHECK(pub.sg.B == kp.pub.sg.B);
  CHECK(pub.sg.C == kp.pub.sg.C);

  std::string priv_text = write_mceliece_private(kp);
  std::istringstream kin(priv_text);
  TextReader kr(kin);
  McElieceKeyPair back = read_mceliece_private(kr);
  CHECK(back.Gprime == kp.Gprime);
  CHECK(back.pub.sg.A == kp.pub.sg.A);
  CHECK(back.pub.sg.B == kp.pub.sg.B);
  CHECK(back.priv.code.dmin == kp.priv.code.dmin);
  CHECK(back.priv.code.table.size() == kp.priv.code.table.size());

  // Deserialized halves interoperate: encrypt under the reread public key,
  // decrypt under the reread private key.
  Rng enc(604);
  Vec x = {3, 0, 1};
  CHECK(mceliece_decrypt(back, mceliece_encrypt(pub, x, enc)) == x);
}

TEST_CASE("syndrome key files rebuild the scrambled parity check") {
  Rng rng(605);
  NiederreiterKeyPair kp = niederreiter_keygen(gen_secret_code(10, 2, 1, 1, rng), rng);

  std::string pub_text = write_niederreiter_public(kp.pub);
  std::istringstream pin(pub_text);
  TextReader pr(pin);
  NiederreiterPublic pub = read_niederreiter_public(pr);
  CHECK((pub.type == kp.pub.type));
  CHECK(pub.Hprime == kp.pub.Hprime);

  std::string priv_text = write_niederreiter_private(kp);
  std::istringstream kin(priv_text);
  TextReader kr(kin);
  NiederreiterKeyPair back = read_niederreiter_private(kr);
  CHECK(back.pub.Hprime == kp.pub.Hprime);
  CHECK(back.priv.S == kp.priv.S);
  CHECK(back.priv.P == kp.priv.P);

  Vec x(10, 0);
  x[4] = 3;
  CHECK(niederreiter_decrypt(back, niederreiter_encrypt(pub, x)) == x);
}

TEST_CASE("whole files move through the filesystem helpers") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "leeisd_io_roundtrip.txt";
  const std::string content = "ISD Z4 2 1 0 0\nZ4MATRIX 1 2\n1 2\nSYNDROME\n0\n";
  write_text_file(path.string(), content);
  CHECK(read_text_file(path.string()) == content);
  IsdInstance inst = read_instance_file(path.string());
  CHECK(inst.n == 2);
  CHECK(inst.t == 0);
  fs::remove(path);
  CHECK_THROWS_AS(read_text_file(path.string()), ParseError);
}
