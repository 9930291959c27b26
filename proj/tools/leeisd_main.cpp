#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "leeisd/cli.hpp"

namespace {

leeisd::CostModel to_model(const std::string& s) {
  return (s == "lut" || s == "lut-1bit") ? leeisd::CostModel::lut1bit
                                         : leeisd::CostModel::plain2bit;
}

leeisd::Strategy to_strategy(const std::string& s) {
  return *leeisd::parse_strategy(s);
}

leeisd::OutFormat to_format(const std::string& s) {
  return *leeisd::parse_format(s);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace leeisd;
  CLI::App app{"Lee-metric decoding toolkit for quaternary linear codes"};
  app.require_subcommand(1);

  std::string modelStr = "paper";
  unsigned threads = 1;
  app.add_option("--cost-model", modelStr, "symbol cost model")
      ->check(CLI::IsMember({"paper", "paper-2bit", "lut", "lut-1bit"}))
      ->capture_default_str();
  app.add_option("--threads", threads, "worker threads for parameter sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.set_version_flag("--version", [&] {
    return std::string("leeisd ") + kVersion + " (cost-model: " +
           cost_model_name(to_model(modelStr)) + ")";
  });

  int rc = 0;
  auto fmt_opt = [](CLI::App* sub, std::string& fmtStr) {
    sub->add_option("--format", fmtStr, "output format")
        ->check(CLI::IsMember({"text", "kv", "key=value", "csv", "md"}))
        ->capture_default_str();
  };

  // bounds
  BoundsCfg bounds;
  std::string boundsFmt = "text";
  auto* sb = app.add_subcommand("bounds", "distance and dimension bounds for a length/type");
  sb->add_option("--n", bounds.n, "code length")->required();
  sb->add_option("--k1", bounds.k1, "free rank");
  sb->add_option("--k2", bounds.k2, "order-2 rank");
  sb->add_option("--d", bounds.d, "target minimum Lee distance");
  fmt_opt(sb, boundsFmt);
  sb->callback([&] {
    bounds.format = to_format(boundsFmt);
    rc = cmd_bounds(bounds, std::cout, std::cerr);
  });

  // estimate
  EstimateCfg est;
  std::string estFmt = "text";
  auto* se = app.add_subcommand("estimate", "decoder cost for fixed parameters");
  se->add_option("--field", est.field, "z4 or f2")
      ->check(CLI::IsMember({"z4", "f2"}))
      ->capture_default_str();
  se->add_option("--n", est.n, "code length")->required();
  se->add_option("--k1", est.k1, "free rank (binary: dimension)")->required();
  se->add_option("--k2", est.k2, "order-2 rank (binary: 0)")->capture_default_str();
  se->add_option("--t", est.t, "error weight")->required();
  se->add_option("--v", est.params.v, "per-side window weight")->capture_default_str();
  se->add_option("--ell", est.params.ell, "window length")->capture_default_str();
  auto* estM1 = se->add_option("--m1", est.params.m1, "first split size");
  auto* estM2 = se->add_option("--m2", est.params.m2, "second split size");
  estM1->needs(estM2);
  estM2->needs(estM1);
  se->add_flag("--allow-lee-v", est.wide_v, "allow v up to 2*min(m1,m2)");
  fmt_opt(se, estFmt);
  se->callback([&] {
    est.format = to_format(estFmt);
    est.model = to_model(modelStr);
    if (estM1->count() == 0) {
      std::size_t K = est.k1 + est.k2;
      est.params.m1 = (K + 1) / 2;
      est.params.m2 = K - est.params.m1;
    }
    rc = cmd_estimate(est, std::cout, std::cerr);
  });

  // optimize
  OptimizeCfg opt;
  std::string optFmt = "text", optStrat = "full";
  auto* so = app.add_subcommand("optimize", "search decoder parameters for minimum work");
  so->add_option("--field", opt.field, "z4 or f2")
      ->check(CLI::IsMember({"z4", "f2"}))
      ->capture_default_str();
  so->add_option("--n", opt.n, "code length")->required();
  so->add_option("--k1", opt.k1, "free rank (binary: dimension)")->required();
  so->add_option("--k2", opt.k2, "order-2 rank (binary: 0)")->capture_default_str();
  so->add_option("--t", opt.t, "error weight")->required();
  so->add_option("--strategy", optStrat, "reference, sweep or full")
      ->check(CLI::IsMember({"reference", "sweep", "full"}))
      ->capture_default_str();
  fmt_opt(so, optFmt);
  so->callback([&] {
    opt.format = to_format(optFmt);
    opt.model = to_model(modelStr);
    opt.strategy = to_strategy(optStrat);
    opt.threads = threads;
    rc = cmd_optimize(opt, std::cout, std::cerr);
  });

  // table
  TableCfg tbl;
  std::string tblFmt = "text", tblStrat = "reference";
  auto* st = app.add_subcommand("table", "key-size/security table over k1 for fixed (n, d)");
  st->add_option("--n", tbl.n, "code length")->required();
  st->add_option("--d", tbl.d, "minimum Lee distance")->required();
  st->add_option("--dim", tbl.dim, "dimension override (default: Gilbert-Varshamov)");
  st->add_option("--k1-min", tbl.k1_min, "first k1")->capture_default_str();
  st->add_option("--k1-max", tbl.k1_max, "last k1 (default: dimension - 1)");
  st->add_option("--target-bits", tbl.target_bits, "report first k1 reaching this security");
  st->add_option("--strategy", tblStrat, "reference, sweep or full")
      ->check(CLI::IsMember({"reference", "sweep", "full"}))
      ->capture_default_str();
  fmt_opt(st, tblFmt);
  st->callback([&] {
    tbl.format = to_format(tblFmt);
    tbl.model = to_model(modelStr);
    tbl.strategy = to_strategy(tblStrat);
    tbl.threads = threads;
    rc = cmd_table(tbl, std::cout, std::cerr);
  });

  // gen-instance
  GenInstanceCfg gen;
  auto* sg = app.add_subcommand("gen-instance", "random decoding instance with planted answer");
  sg->add_option("--field", gen.field, "z4 or f2")
      ->check(CLI::IsMember({"z4", "f2"}))
      ->capture_default_str();
  sg->add_option("--n", gen.n, "code length")->required();
  sg->add_option("--k1", gen.k1, "free rank (binary: dimension)")->required();
  sg->add_option("--k2", gen.k2, "order-2 rank (binary: 0)")->capture_default_str();
  sg->add_option("--t", gen.t, "planted error weight")->required();
  sg->add_option("--seed", gen.seed, "PRNG seed")->required();
  sg->add_option("--out", gen.out, "instance file")->required();
  sg->add_option("--answer", gen.answer, "sidecar answer file (default: <out>.answer)");
  sg->callback([&] { rc = cmd_gen_instance(gen, std::cout, std::cerr); });

  // isd-decode
  IsdDecodeCfg dec;
  auto* sd = app.add_subcommand("isd-decode", "collision decoding of an instance file");
  sd->add_option("instance", dec.instance_path, "instance file")->required();
  sd->add_option("--v", dec.params.v, "per-side window weight")->capture_default_str();
  sd->add_option("--ell", dec.params.ell, "window length")->capture_default_str();
  auto* decM1 = sd->add_option("--m1", dec.params.m1, "first split size");
  auto* decM2 = sd->add_option("--m2", dec.params.m2, "second split size");
  decM1->needs(decM2);
  decM2->needs(decM1);
  sd->add_option("--seed", dec.seed, "PRNG seed")->required();
  sd->add_option("--max-iters", dec.max_iters, "iteration cap (default: ceil(50/success))");
  sd->add_flag("--oracle", dec.oracle, "cross-check against exhaustive enumeration");
  sd->add_option("--oracle-budget", dec.oracle_budget, "oracle enumeration cap")
      ->capture_default_str();
  sd->add_flag("--allow-lee-v", dec.wide_v, "allow v up to 2*min(m1,m2)");
  sd->callback([&] {
    dec.m_given = decM1->count() > 0;
    rc = cmd_isd_decode(dec, std::cout, std::cerr);
  });

  // keygen
  KeygenCfg kg;
  auto* sk = app.add_subcommand("keygen", "generate a key pair");
  sk->add_option("--system", kg.system, "mceliece or niederreiter")
      ->check(CLI::IsMember({"mceliece", "niederreiter"}))
      ->capture_default_str();
  sk->add_option("--n", kg.n, "code length")->required();
  sk->add_option("--k1", kg.k1, "free rank")->required();
  sk->add_option("--k2", kg.k2, "order-2 rank")->required();
  sk->add_option("--t", kg.t, "decodable error weight")->required();
  sk->add_option("--seed", kg.seed, "PRNG seed")->required();
  sk->add_option("--out-dir", kg.out_dir, "output directory")->capture_default_str();
  sk->callback([&] { rc = cmd_keygen(kg, std::cout, std::cerr); });

  // encrypt
  EncryptCfg enc;
  auto* sen = app.add_subcommand("encrypt", "encrypt a message with a public key");
  sen->add_option("--pubkey", enc.pubkey_path, "public key file")->required();
  sen->add_option("--msg", enc.msg_path, "message file (one vector line)")->required();
  sen->add_option("--out", enc.out, "ciphertext file (default: <msg>.ct)");
  sen->add_option("--seed", enc.seed, "PRNG seed")->required();
  sen->add_flag("--weight-le", enc.weight_le, "sample error weight <= t instead of exactly t");
  sen->callback([&] { rc = cmd_encrypt(enc, std::cout, std::cerr); });

  // decrypt
  DecryptCfg dc;
  auto* sdc = app.add_subcommand("decrypt", "decrypt a ciphertext with a private key");
  sdc->add_option("--privkey", dc.privkey_path, "private key file")->required();
  sdc->add_option("--ct", dc.ct_path, "ciphertext file")->required();
  sdc->add_option("--out", dc.out, "plaintext file (default: <ct>.pt)");
  sdc->callback([&] { rc = cmd_decrypt(dc, std::cout, std::cerr); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return rc;
}
