#include "leeisd/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "leeisd/crypto.hpp"
#include "leeisd/io.hpp"
#include "leeisd/isd.hpp"
#include "leeisd/lee.hpp"

namespace leeisd {

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

std::string fmt2(double x) {
  if (x == std::numeric_limits<double>::infinity()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string fmt4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit_pairs(const Pairs& kv, OutFormat f, std::ostream& out) {
  switch (f) {
    case OutFormat::text:
      for (auto& [k, v] : kv) out << k << " = " << v << '\n';
      break;
    case OutFormat::kv:
      for (auto& [k, v] : kv) out << k << '=' << v << '\n';
      break;
    case OutFormat::csv:
      out << "quantity,value\n";
      for (auto& [k, v] : kv) out << csv_cell(k) << ',' << csv_cell(v) << '\n';
      break;
    case OutFormat::md:
      out << "| quantity | value |\n|---|---|\n";
      for (auto& [k, v] : kv) out << "| " << k << " | " << v << " |\n";
      break;
  }
}

void emit_table(const Pairs& meta, const std::vector<std::string>& headers,
                const std::vector<std::vector<std::string>>& rows, OutFormat f,
                std::ostream& out) {
  switch (f) {
    case OutFormat::text: {
      for (auto& [k, v] : meta) out << k << " = " << v << '\n';
      if (!meta.empty()) out << '\n';
      std::vector<std::size_t> w(headers.size());
      for (std::size_t c = 0; c < headers.size(); ++c) w[c] = headers[c].size();
      for (auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          out << cells[c];
          if (c + 1 < cells.size())
            out << std::string(w[c] - cells[c].size() + 2, ' ');
        }
        out << '\n';
      };
      line(headers);
      line(std::vector<std::string>{});
      for (auto& row : rows) line(row);
      break;
    }
    case OutFormat::kv:
      for (auto& [k, v] : meta) out << k << '=' << v << '\n';
      for (auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
          out << (c ? " " : "") << headers[c] << '=' << row[c];
        out << '\n';
      }
      break;
    case OutFormat::csv: {
      for (auto& [k, v] : meta) out << "# " << k << '=' << v << '\n';
      for (std::size_t c = 0; c < headers.size(); ++c) out << (c ? "," : "") << headers[c];
      out << '\n';
      for (auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
        out << '\n';
      }
      break;
    }
    case OutFormat::md: {
      for (auto& [k, v] : meta) out << "**" << k << "**: " << v << "  \n";
      if (!meta.empty()) out << '\n';
      for (auto& h : headers) out << "| " << h << ' ';
      out << "|\n";
      for (std::size_t c = 0; c < headers.size(); ++c) out << "|---";
      out << "|\n";
      for (auto& row : rows) {
        for (auto& cell : row) out << "| " << cell << ' ';
        out << "|\n";
      }
      break;
    }
  }
}

void append_estimate(Pairs& kv, const CostEstimate& est) {
  kv.emplace_back("gauss", est.gauss.get_str());
  kv.emplace_back("set_s", est.setS.get_str());
  kv.emplace_back("set_t", est.setT.get_str());
  kv.emplace_back("collision", rat_str(est.collision));
  kv.emplace_back("iter_cost", rat_str(est.iterCost));
  kv.emplace_back("success_prob", rat_str(est.successProb));
  kv.emplace_back("total_work", rat_str(est.totalWork));
  kv.emplace_back("security_bits", fmt2(est.securityBits));
  kv.emplace_back("attainable", est.attainable ? "true" : "false");
}

int fail(std::ostream& err, const std::string& msg, int code = 1) {
  err << "error: " << msg << '\n';
  return code;
}

std::string dim_str(std::size_t k1, std::size_t k2) {
  std::size_t twice = 2 * k1 + k2;
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

Vec read_vec_file(const std::string& path, std::size_t len, unsigned mod, const char* what) {
  std::istringstream in(read_text_file(path));
  TextReader r(in);
  return read_vec(r, len, mod, what);
}

}  // namespace

std::optional<OutFormat> parse_format(const std::string& s) {
  if (s == "text") return OutFormat::text;
  if (s == "kv" || s == "key=value") return OutFormat::kv;
  if (s == "csv") return OutFormat::csv;
  if (s == "md") return OutFormat::md;
  return std::nullopt;
}

int cmd_bounds(const BoundsCfg& cfg, std::ostream& out, std::ostream& err) try {
  if (cfg.n == 0) return fail(err, "bounds: --n must be positive");
  Pairs kv;
  kv.emplace_back("n", std::to_string(cfg.n));
  if (cfg.d) {
    if (*cfg.d == 0) return fail(err, "bounds: --d must be positive");
    kv.emplace_back("d", std::to_string(*cfg.d));
    kv.emplace_back("t", std::to_string((*cfg.d - 1) / 2));
    std::size_t dim = gv_max_dim(cfg.n, *cfg.d);
    kv.emplace_back("gv dimension", std::to_string(dim));
    if (dim == 0)
      kv.emplace_back("gv note", "no positive dimension satisfies the Gilbert-Varshamov bound");
  }
  if (cfg.k1 || cfg.k2) {
    std::size_t k1 = cfg.k1.value_or(0), k2 = cfg.k2.value_or(0);
    if (k1 + k2 > cfg.n) return fail(err, "bounds: k1 + k2 exceeds n");
    kv.emplace_back("k1", std::to_string(k1));
    kv.emplace_back("k2", std::to_string(k2));
    kv.emplace_back("dimension", dim_str(k1, k2));
    BigRat rt = rate(cfg.n, k1, k2);
    std::string pretty = dim_str(k1, k2) + "/" + std::to_string(cfg.n);
    kv.emplace_back("rate", pretty + " = " + fmt4(rt.get_d()));
    kv.emplace_back("singleton bound", std::to_string(singleton_bound(cfg.n, k1, k2)));
  }
  emit_pairs(kv, cfg.format, out);
  return 0;
} catch (const std::exception& e) {
  return fail(err, e.what());
}

int cmd_estimate(const EstimateCfg& cfg, std::ostream& out, std::ostream& err) try {
  Pairs kv;
  kv.emplace_back("field", cfg.field);
  kv.emplace_back("n", std::to_string(cfg.n));
  kv.emplace_back("k1", std::to_string(cfg.k1));
  kv.emplace_back("k2", std::to_string(cfg.k2));
  kv.emplace_back("t", std::to_string(cfg.t));
  kv.emplace_back("v", std::to_string(cfg.params.v));
  kv.emplace_back("ell", std::to_string(cfg.params.ell));
  kv.emplace_back("m1", std::to_string(cfg.params.m1));
  kv.emplace_back("m2", std::to_string(cfg.params.m2));
  kv.emplace_back("cost_model", cost_model_name(cfg.model));
  CostEstimate est;
  if (cfg.field == "z4") {
    est = cost_stern_z4(cfg.n, cfg.k1, cfg.k2, cfg.t, cfg.params, cfg.model, cfg.wide_v);
  } else if (cfg.field == "f2") {
    if (cfg.k2 != 0) return fail(err, "estimate: binary codes need --k2 0");
    est = cost_stern_f2(cfg.n, cfg.k1, cfg.t, cfg.params, cfg.model);
  } else {
    return fail(err, "estimate: --field must be z4 or f2");
  }
  append_estimate(kv, est);
  emit_pairs(kv, cfg.format, out);
  return 0;
} catch (const std::exception& e) {
  return fail(err, e.what());
}

int cmd_optimize(const OptimizeCfg& cfg, std::ostream& out, std::ostream& err) try {
  ParamChoice choice;
  if (cfg.field == "z4") {
    choice = optimize_params_z4(cfg.n, cfg.k1, cfg.k2, cfg.t, cfg.strategy, cfg.model,
                                cfg.threads);
  } else if (cfg.field == "f2") {
    if (cfg.k2 != 0) return fail(err, "optimize: binary codes need --k2 0");
    choice = optimize_params_f2(cfg.n, cfg.k1, cfg.t, cfg.strategy, cfg.model, cfg.threads);
  } else {
    return fail(err, "optimize: --field must be z4 or f2");
  }
  if (!choice.feasible) return fail(err, "optimize: no feasible parameters for this instance");
  Pairs kv;
  kv.emplace_back("field", cfg.field);
  kv.emplace_back("n", std::to_string(cfg.n));
  kv.emplace_back("k1", std::to_string(cfg.k1));
  kv.emplace_back("k2", std::to_string(cfg.k2));
  kv.emplace_back("t", std::to_string(cfg.t));
  kv.emplace_back("strategy", cfg.strategy == Strategy::reference ? "reference"
                              : cfg.strategy == Strategy::sweep   ? "sweep"
                                                                  : "full");
  kv.emplace_back("cost_model", cost_model_name(cfg.model));
  kv.emplace_back("v", std::to_string(choice.params.v));
  kv.emplace_back("ell", std::to_string(choice.params.ell));
  kv.emplace_back("m1", std::to_string(choice.params.m1));
  kv.emplace_back("m2", std::to_string(choice.params.m2));
  append_estimate(kv, choice.est);
  emit_pairs(kv, cfg.format, out);
  return 0;
} catch (const std::exception& e) {
  return fail(err, e.what());
}

int cmd_table(const TableCfg& cfg, std::ostream& out, std::ostream& err) try {
  TableResult res = table_scan(cfg.n, cfg.d, cfg.dim, cfg.k1_min, cfg.k1_max, cfg.strategy,
                               cfg.model, cfg.threads);
  Pairs meta;
  meta.emplace_back("n", std::to_string(res.n));
  meta.emplace_back("d", std::to_string(res.d));
  meta.emplace_back("t", std::to_string(res.t));
  meta.emplace_back("dimension", std::to_string(res.dim));
  meta.emplace_back("cost_model", cost_model_name(cfg.model));
  if (!res.feasible) {
    meta.emplace_back("note", res.note);
    emit_table(meta, {"k1", "k2", "key_size", "security_bits", "v", "ell", "m1", "m2", "note"},
               {}, cfg.format, out);
    return 0;
  }
  std::vector<std::vector<std::string>> rows;
  for (const TableRow& row : res.rows) {
    std::vector<std::string> cells;
    cells.push_back(std::to_string(row.k1));
    cells.push_back(std::to_string(row.k2));
    cells.push_back(row.keySize.get_str());
    if (row.choice.feasible) {
      cells.push_back(fmt2(row.choice.est.securityBits));
      cells.push_back(std::to_string(row.choice.params.v));
      cells.push_back(std::to_string(row.choice.params.ell));
      cells.push_back(std::to_string(row.choice.params.m1));
      cells.push_back(std::to_string(row.choice.params.m2));
    } else {
      for (int i = 0; i < 5; ++i) cells.push_back("-");
    }
    cells.push_back(row.note);
    rows.push_back(std::move(cells));
  }
  if (cfg.target_bits) {
    const TableRow* first = nullptr;
    for (const TableRow& row : res.rows)
      if (row.choice.feasible && row.choice.est.attainable &&
          row.choice.est.securityBits >= *cfg.target_bits) {
        first = &row;
        break;
      }
    if (first)
      meta.emplace_back("target", fmt2(*cfg.target_bits) + " bits first reached at k1 = " +
                                      std::to_string(first->k1) + " (security " +
                                      fmt2(first->choice.est.securityBits) + ", key size " +
                                      first->keySize.get_str() + ")");
    else
      meta.emplace_back("target", fmt2(*cfg.target_bits) + " bits not reached in this range");
  }
  emit_table(meta, {"k1", "k2", "key_size", "security_bits", "v", "ell", "m1", "m2", "note"},
             rows, cfg.format, out);
  return 0;
} catch (const std::exception& e) {
  return fail(err, e.what());
}

int cmd_gen_instance(const GenInstanceCfg& cfg, std::ostream& out, std::ostream& err) try {
  Field field;
  if (cfg.field == "z4") {
    field = Field::Z4;
  } else if (cfg.field == "f2") {
    field = Field::F2;
    if (cfg.k2 != 0) return fail(err, "gen-instance: binary codes need --k2 0");
  } else {
    return fail(err, "gen-instance: --field must be z4 or f2");
  }
  if (cfg.k1 + cfg.k2 == 0 || cfg.k1 + cfg.k2 > cfg.n)
    return fail(err, "gen-instance: need 0 < k1 + k2 <= n");
  std::size_t wmax = field == Field::Z4 ? 2 * cfg.n : cfg.n;
  if (cfg.t > wmax) return fail(err, "gen-instance: t exceeds the maximum weight");
  if (cfg.out.empty()) return fail(err, "gen-instance: --out is required");

  Rng rng(cfg.seed);
  Vec planted;
  IsdInstance inst = make_random_instance(field, cfg.n, cfg.k1, cfg.k2, cfg.t, rng, &planted);
  std::string answer = cfg.answer.empty() ? cfg.out + ".answer" : cfg.answer;
  write_text_file(cfg.out, write_instance(inst));
  write_text_file(answer, write_vec(planted) + "\n");
  out << "instance = " << cfg.out << '\n';
  out << "answer = " << answer << '\n';
  out << "field = " << cfg.field << '\n';
  out << "n = " << cfg.n << '\n' << "k1 = " << cfg.k1 << '\n' << "k2 = " << cfg.k2 << '\n';
  out << "t = " << cfg.t << '\n' << "seed = " << cfg.seed << '\n';
  return 0;
} catch (const std::exception& e) {
  return fail(err, e.what());
}

int cmd_isd_decode(const IsdDecodeCfg& cfg, std::ostream& out, std::ostream& err) try {
  IsdInstance inst = read_instance_file(cfg.instance_path);
  IsdParams p = cfg.params;
  if (!cfg.m_given) {
    std::size_t K = inst.k1 + inst.k2;
    p.m1 = (K + 1) / 2;
    p.m2 = K - p.m1;
  }
  try {
    validate_isd_params(inst, p, cfg.wide_v);
  } catch (const std::invalid_argument& e) {
    return fail(err, std::string("infeasible parameters: ") + e.what(), kExitInfeasible);
  }
  std::uint64_t max_iters =
      cfg.max_iters ? *cfg.max_iters : default_max_iters(inst, p, cfg.wide_v);
  Rng rng(cfg.seed);
  IsdResult res = stern_decode(inst, p, rng, max_iters, cfg.wide_v);

  out << "found = " << (res.found ? "true" : "false") << '\n';
  if (res.found) out << "e = " << write_vec(res.e) << '\n';
  out << "iterations = " << res.diag.iterations << '\n';
  out << "max_iters = " << max_iters << '\n';
  out << "transform_retries = " << res.diag.transformRetries << '\n';
  out << "collisions = " << res.diag.collisions << '\n';
  out << "weight_checks = " << res.diag.weightChecks << '\n';
  if (res.diag.transformExhausted) out << "transform_exhausted = true\n";

  if (cfg.oracle) {
    BruteForceResult oracle = brute_force_decode(inst, BigInt(cfg.oracle_budget));
    std::vector<Vec> exact;
    if (inst.t < oracle.byWeight.size()) exact = oracle.byWeight[inst.t];
    out << "oracle_scanned = " << oracle.scanned << '\n';
    out << "oracle_solutions_at_t = " << exact.size() << '\n';
    out << "oracle_solutions_below_t = " << oracle.total() - exact.size() << '\n';
    if (res.found) {
      bool hit = std::find(exact.begin(), exact.end(), res.e) != exact.end();
      out << "oracle_confirms = " << (hit ? "true" : "false") << '\n';
      if (!hit) return fail(err, "decoder answer is missing from the oracle solution set");
    } else if (!exact.empty()) {
      out << "oracle_confirms = false\n";
    }
  }
  return res.found ? 0 : kExitNotFound;
} catch (const std::exception& e) {
  return fail(err, e.what());
}

int cmd_keygen(const KeygenCfg& cfg, std::ostream& out, std::ostream& err) try {
  if (cfg.system != "mceliece" && cfg.system != "niederreiter")
    return fail(err, "keygen: --system must be mceliece or niederreiter");
  std::filesystem::create_directories(cfg.out_dir);
  Rng rng(cfg.seed);
  SecretCode code = gen_secret_code(cfg.n, cfg.k1, cfg.k2, cfg.t, rng);
  std::size_t dmin = code.dmin;
  std::string pubPath = cfg.out_dir + "/" + cfg.system + ".pub";
  std::string privPath = cfg.out_dir + "/" + cfg.system + ".key";
  if (cfg.system == "mceliece") {
    McElieceKeyPair kp = mceliece_keygen(std::move(code), rng);
    write_text_file(pubPath, write_mceliece_public(kp.pub));
    write_text_file(privPath, write_mceliece_private(kp));
  } else {
    NiederreiterKeyPair kp = niederreiter_keygen(std::move(code), rng);
    write_text_file(pubPath, write_niederreiter_public(kp.pub));
    write_text_file(privPath, write_niederreiter_private(kp));
  }
  out << "public_key = " << pubPath << '\n';
  out << "private_key = " << privPath << '\n';
  out << "system = " << cfg.system << '\n';
  out << "n = " << cfg.n << '\n' << "k1 = " << cfg.k1 << '\n' << "k2 = " << cfg.k2 << '\n';
  out << "t = " << cfg.t << '\n' << "dmin = " << dmin << '\n' << "seed = " << cfg.seed << '\n';
  return 0;
} catch (const std::exception& e) {
  return fail(err, e.what());
}

int cmd_encrypt(const EncryptCfg& cfg, std::ostream& out, std::ostream& err) try {
  std::string content = read_text_file(cfg.pubkey_path);
  std::istringstream in(content);
  TextReader r(in);
  std::string ctPath = cfg.out.empty() ? cfg.msg_path + ".ct" : cfg.out;
  Vec y;
  if (content.rfind("Z4MCELIECE-PUBLIC", 0) == 0) {
    McEliecePublic pub = read_mceliece_public(r);
    Vec x = read_vec_file(cfg.msg_path, pub.type.k1 + pub.type.k2, 4, "message");
    Rng rng(cfg.seed);
    y = mceliece_encrypt(pub, x, rng, !cfg.weight_le);
  } else if (content.rfind("Z4NIEDERREITER-PUBLIC", 0) == 0) {
    NiederreiterPublic pub = read_niederreiter_public(r);
    Vec x = read_vec_file(cfg.msg_path, pub.type.n, 4, "message");
    y = niederreiter_encrypt(pub, x);
  } else {
    return fail(err, "encrypt: unrecognized public key header");
  }
  write_text_file(ctPath, write_vec(y) + "\n");
  out << "ciphertext = " << ctPath << '\n';
  out << "length = " << y.size() << '\n';
  return 0;
} catch (const std::exception& e) {
  return fail(err, e.what());
}

int cmd_decrypt(const DecryptCfg& cfg, std::ostream& out, std::ostream& err) try {
  std::string content = read_text_file(cfg.privkey_path);
  std::istringstream in(content);
  TextReader r(in);
  std::string ptPath = cfg.out.empty() ? cfg.ct_path + ".pt" : cfg.out;
  Vec x;
  if (content.rfind("Z4MCELIECE-PRIVATE", 0) == 0) {
    McElieceKeyPair kp = read_mceliece_private(r);
    Vec y = read_vec_file(cfg.ct_path, kp.pub.type.n, 4, "ciphertext");
    x = mceliece_decrypt(kp, y);
  } else if (content.rfind("Z4NIEDERREITER-PRIVATE", 0) == 0) {
    NiederreiterKeyPair kp = read_niederreiter_private(r);
    Vec y = read_vec_file(cfg.ct_path, kp.pub.type.n - kp.pub.type.k1, 4, "ciphertext");
    x = niederreiter_decrypt(kp, y);
  } else {
    return fail(err, "decrypt: unrecognized private key header");
  }
  write_text_file(ptPath, write_vec(x) + "\n");
  out << "plaintext = " << ptPath << '\n';
  out << "x = " << write_vec(x) << '\n';
  return 0;
} catch (const DecryptionFailure& e) {
  return fail(err, std::string("decryption failure: ") + e.what());
} catch (const std::exception& e) {
  return fail(err, e.what());
}

}  // namespace leeisd
