#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "leeisd/cli.hpp"
#include "leeisd/io.hpp"
#include "leeisd/isd.hpp"

using namespace leeisd;
namespace fs = std::filesystem;

namespace {

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

fs::path work_dir(const char* sub) {
  fs::path p = fs::temp_directory_path() / "leeisd_cli_tests" / sub;
  fs::create_directories(p);
  return p;
}

struct Run {
  int rc;
  std::string out, err;
};

template <typename Cfg, typename Fn>
Run run(Fn fn, const Cfg& cfg) {
  std::ostringstream out, err;
  int rc = fn(cfg, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bounds renders the same facts in every format") {
  BoundsCfg cfg;
  cfg.n = 150;
  cfg.d = 81;

  Run text = run(cmd_bounds, cfg);
  CHECK(text.rc == 0);
  CHECK(has_line(text.out, "gv dimension = 26"));
  CHECK(has_line(text.out, "t = 40"));

  cfg.format = OutFormat::kv;
  Run kv = run(cmd_bounds, cfg);
  CHECK(has_line(kv.out, "gv dimension=26"));

  cfg.format = OutFormat::csv;
  Run csv = run(cmd_bounds, cfg);
  CHECK(has_line(csv.out, "quantity,value"));
  CHECK(has_line(csv.out, "gv dimension,26"));

  cfg.format = OutFormat::md;
  Run md = run(cmd_bounds, cfg);
  CHECK(has_line(md.out, "| gv dimension | 26 |"));

  BoundsCfg dims;
  dims.n = 150;
  dims.k1 = 13;
  dims.k2 = 26;
  Run d = run(cmd_bounds, dims);
  CHECK(d.rc == 0);
  CHECK(has_line(d.out, "dimension = 26"));
  CHECK(has_line(d.out, "rate = 26/150 = 0.1733"));

  BoundsCfg bad;
  bad.n = 0;
  Run b = run(cmd_bounds, bad);
  CHECK(b.rc == 1);
  CHECK(b.err.rfind("error: ", 0) == 0);
}

TEST_CASE("estimate prints the exact cost breakdown") {
  EstimateCfg cfg;
  cfg.field = "f2";
  cfg.n = 10;
  cfg.k1 = 4;
  cfg.t = 2;
  cfg.params = IsdParams{1, 2, 2, 2};
  cfg.format = OutFormat::kv;

  Run r = run(cmd_estimate, cfg);
  CHECK(r.rc == 0);
  CHECK(has_line(r.out, "gauss=396"));
  CHECK(has_line(r.out, "success_prob=4/45"));
  CHECK(has_line(r.out, "total_work=9135/2"));
  CHECK(has_line(r.out, "security_bits=12.16"));
  CHECK(has_line(r.out, "attainable=true"));

  // An overshooting window weight is reported, not rejected.
  EstimateCfg shy = cfg;
  shy.t = 1;
  shy.params = IsdParams{1, 0, 2, 2};
  Run s = run(cmd_estimate, shy);
  CHECK(s.rc == 0);
  CHECK(has_line(s.out, "security_bits=inf"));
  CHECK(has_line(s.out, "attainable=false"));

  // Constraint violations surface as errors.
  EstimateCfg bad = cfg;
  bad.k2 = 1;
  Run b = run(cmd_estimate, bad);
  CHECK(b.rc == 1);
  CHECK(b.err.rfind("error: ", 0) == 0);
}

TEST_CASE("optimize reports the chosen working point") {
  OptimizeCfg cfg;
  cfg.n = 150;
  cfg.k1 = 13;
  cfg.k2 = 26;
  cfg.t = 40;
  cfg.format = OutFormat::kv;

  Run r = run(cmd_optimize, cfg);
  CHECK(r.rc == 0);
  CHECK(has_line(r.out, "v=19"));
  CHECK(has_line(r.out, "ell=0"));
  CHECK(has_line(r.out, "m1=20"));
  CHECK(has_line(r.out, "m2=19"));
  CHECK(has_line(r.out, "security_bits=134.34"));

  OptimizeCfg stuck;
  stuck.n = 10;
  stuck.k1 = 5;
  stuck.k2 = 0;
  stuck.t = 10;
  Run s = run(cmd_optimize, stuck);
  CHECK(s.rc == 1);
  CHECK(s.err.rfind("error: ", 0) == 0);
  CHECK(s.err.find("no feasible parameters") != std::string::npos);
}

TEST_CASE("table emits machine-readable rows with metadata") {
  TableCfg cfg;
  cfg.n = 150;
  cfg.d = 81;
  cfg.k1_min = 1;
  cfg.k1_max = 2;
  cfg.format = OutFormat::csv;

  Run r = run(cmd_table, cfg);
  CHECK(r.rc == 0);
  CHECK(has_line(r.out, "# n=150"));
  CHECK(has_line(r.out, "# dimension=26"));
  CHECK(has_line(r.out, "# cost_model=paper-2bit"));
  CHECK(has_line(r.out, "k1,k2,key_size,security_bits,v,ell,m1,m2,note"));
  CHECK(has_line(r.out, "1,50,5198,112.04,19,0,26,25,"));
  CHECK(r.out.find("\n2,48,5296,") != std::string::npos);

  // A distance above the reachable range produces a note and no rows.
  TableCfg far;
  far.n = 150;
  far.d = 301;
  far.format = OutFormat::csv;
  Run f = run(cmd_table, far);
  CHECK(f.rc == 0);
  CHECK(f.out.find("Gilbert-Varshamov") != std::string::npos);
  CHECK(f.out.find("\n1,") == std::string::npos);

  // Security targets are resolved against the scan.
  TableCfg hit = cfg;
  hit.target_bits = 100.0;
  hit.format = OutFormat::text;
  Run h = run(cmd_table, hit);
  CHECK(h.out.find("100.00 bits first reached at k1 = 1") != std::string::npos);

  TableCfg miss = cfg;
  miss.target_bits = 200.0;
  Run m = run(cmd_table, miss);
  CHECK(m.out.find("200.00 bits not reached in this range") != std::string::npos);
}

TEST_CASE("generated instances decode and pass the oracle audit") {
  fs::path dir = work_dir("roundtrip");
  bool exercised = false;
  for (std::uint64_t seed = 7; seed < 27 && !exercised; ++seed) {
    GenInstanceCfg gen;
    gen.n = 12;
    gen.k1 = 2;
    gen.k2 = 2;
    gen.t = 2;
    gen.seed = seed;
    gen.out = (dir / "inst.txt").string();
    Run g = run(cmd_gen_instance, gen);
    REQUIRE(g.rc == 0);
    CHECK(has_line(g.out, "instance = " + gen.out));
    CHECK(has_line(g.out, "answer = " + gen.out + ".answer"));

    // Only planted patterns without a 2 are guaranteed reachable at v=1.
    std::string answer = read_text_file(gen.out + ".answer");
    if (answer.find('2') != std::string::npos) continue;

    IsdDecodeCfg dec;
    dec.instance_path = gen.out;
    dec.params = IsdParams{1, 1, 0, 0};
    dec.seed = seed + 1000;
    dec.oracle = true;
    Run d = run(cmd_isd_decode, dec);
    REQUIRE(d.rc == 0);
    CHECK(has_line(d.out, "found = true"));
    CHECK(has_line(d.out, "oracle_confirms = true"));
    CHECK(d.out.find("iterations = ") != std::string::npos);
    CHECK(d.out.find("oracle_scanned = ") != std::string::npos);
    exercised = true;
  }
  CHECK(exercised);
}

TEST_CASE("impossible window parameters exit with the infeasible code") {
  fs::path dir = work_dir("infeasible");
  GenInstanceCfg gen;
  gen.n = 10;
  gen.k1 = 2;
  gen.k2 = 0;
  gen.t = 2;
  gen.seed = 5;
  gen.out = (dir / "inst.txt").string();
  REQUIRE(run(cmd_gen_instance, gen).rc == 0);

  IsdDecodeCfg dec;
  dec.instance_path = gen.out;
  dec.params = IsdParams{5, 0, 0, 0};  // v exceeds every window half
  dec.seed = 1;
  Run d = run(cmd_isd_decode, dec);
  CHECK(d.rc == kExitInfeasible);
  CHECK(d.err.rfind("error: infeasible parameters: ", 0) == 0);
}

TEST_CASE("a syndrome only reachable through a 2 is reported as not found") {
  // Plant a lone 2; at v=1 the decoder only assembles errors made of two
  // unit entries, so when no such solution exists the search must miss.
  IsdInstance inst;
  bool crafted = false;
  for (std::uint64_t seed = 900; seed < 960 && !crafted; ++seed) {
    Rng gen(seed);
    SystematicGenerator sg = random_systematic_generator(8, 1, 1, gen);
    inst = IsdInstance{};
    inst.field = Field::Z4;
    inst.n = 8;
    inst.k1 = 1;
    inst.k2 = 1;
    inst.t = 2;
    inst.H = expand_parity(parity_from_generator(sg));
    Vec planted(8, 0);
    planted[3] = 2;
    inst.s = mat_vec(inst.H, planted);
    auto oracle = brute_force_decode(inst, 1000000);
    crafted = !oracle.byWeight[2].empty();
    for (const Vec& e : oracle.byWeight[2])
      if (std::find(e.begin(), e.end(), 2) == e.end()) crafted = false;
  }
  REQUIRE(crafted);

  fs::path dir = work_dir("miss");
  std::string path = (dir / "two.txt").string();
  write_text_file(path, write_instance(inst));

  IsdDecodeCfg dec;
  dec.instance_path = path;
  dec.params = IsdParams{1, 0, 0, 0};
  dec.seed = 3;
  dec.max_iters = 64;
  Run d = run(cmd_isd_decode, dec);
  CHECK(d.rc == kExitNotFound);
  CHECK(has_line(d.out, "found = false"));
  CHECK(d.err.empty());
}

TEST_CASE("key generation, encryption and decryption chain through files") {
  fs::path dir = work_dir("keys");

  KeygenCfg kg;
  kg.system = "mceliece";
  kg.n = 10;
  kg.k1 = 2;
  kg.k2 = 1;
  kg.t = 1;
  kg.seed = 11;
  kg.out_dir = dir.string();
  Run k = run(cmd_keygen, kg);
  REQUIRE(k.rc == 0);
  std::string pub = (dir / "mceliece.pub").string();
  std::string priv = (dir / "mceliece.key").string();
  CHECK(has_line(k.out, "public_key = " + pub));
  CHECK(has_line(k.out, "private_key = " + priv));
  CHECK(k.out.find("dmin = ") != std::string::npos);
  CHECK(fs::exists(pub));
  CHECK(fs::exists(priv));

  std::string msg = (dir / "msg.txt").string();
  write_text_file(msg, "3 0 1\n");
  EncryptCfg enc;
  enc.pubkey_path = pub;
  enc.msg_path = msg;
  enc.seed = 12;
  Run e = run(cmd_encrypt, enc);
  REQUIRE(e.rc == 0);
  CHECK(has_line(e.out, "ciphertext = " + msg + ".ct"));  // default output path
  CHECK(has_line(e.out, "length = 10"));

  DecryptCfg dc;
  dc.privkey_path = priv;
  dc.ct_path = msg + ".ct";
  dc.out = (dir / "msg.pt").string();
  Run d = run(cmd_decrypt, dc);
  REQUIRE(d.rc == 0);
  CHECK(has_line(d.out, "x = 3 0 1"));
  CHECK(read_text_file(dc.out) == "3 0 1\n");

  // Feeding the public key to decrypt is caught by the header check.
  DecryptCfg wrong = dc;
  wrong.privkey_path = pub;
  Run w = run(cmd_decrypt, wrong);
  CHECK(w.rc == 1);
  CHECK(w.err.rfind("error: ", 0) == 0);
}

TEST_CASE("the syndrome system chains through files as well") {
  fs::path dir = work_dir("nied");

  KeygenCfg kg;
  kg.system = "niederreiter";
  kg.n = 10;
  kg.k1 = 2;
  kg.k2 = 1;
  kg.t = 1;
  kg.seed = 21;
  kg.out_dir = dir.string();
  REQUIRE(run(cmd_keygen, kg).rc == 0);

  std::string msg = (dir / "msg.txt").string();
  write_text_file(msg, "0 0 0 1 0 0 0 0 0 0\n");
  EncryptCfg enc;
  enc.pubkey_path = (dir / "niederreiter.pub").string();
  enc.msg_path = msg;
  enc.seed = 22;
  enc.out = (dir / "msg.ct").string();
  Run e = run(cmd_encrypt, enc);
  REQUIRE(e.rc == 0);
  CHECK(has_line(e.out, "length = 8"));

  DecryptCfg dc;
  dc.privkey_path = (dir / "niederreiter.key").string();
  dc.ct_path = enc.out;
  Run d = run(cmd_decrypt, dc);
  REQUIRE(d.rc == 0);
  CHECK(has_line(d.out, "x = 0 0 0 1 0 0 0 0 0 0"));

  // Weight above t is refused at encryption time.
  write_text_file(msg, "0 0 2 0 0 0 0 0 0 0\n");
  Run heavy = run(cmd_encrypt, enc);
  CHECK(heavy.rc == 1);
  CHECK(heavy.err.rfind("error: ", 0) == 0);

  // Bad digits in the message surface as parse errors.
  write_text_file(msg, "0 0 0 4 0 0 0 0 0 0\n");
  Run bad = run(cmd_encrypt, enc);
  CHECK(bad.rc == 1);
  CHECK(bad.err.rfind("error: line 1:", 0) == 0);
}
