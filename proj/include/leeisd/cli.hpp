#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "leeisd/cost.hpp"

namespace leeisd {

inline constexpr const char* kVersion = "1.0.0";

// isd-decode exit codes (0 = decoded).
inline constexpr int kExitNotFound = 3;
inline constexpr int kExitInfeasible = 4;

enum class OutFormat { text, kv, csv, md };
std::optional<OutFormat> parse_format(const std::string& s);

struct BoundsCfg {
  std::size_t n = 0;
  std::optional<std::size_t> k1, k2, d;
  OutFormat format = OutFormat::text;
};

struct EstimateCfg {
  std::string field = "z4";  // z4 | f2
  std::size_t n = 0, k1 = 0, k2 = 0, t = 0;
  IsdParams params;
  CostModel model = CostModel::plain2bit;
  bool wide_v = false;
  OutFormat format = OutFormat::text;
};

struct OptimizeCfg {
  std::string field = "z4";
  std::size_t n = 0, k1 = 0, k2 = 0, t = 0;
  Strategy strategy = Strategy::reference;
  CostModel model = CostModel::plain2bit;
  unsigned threads = 1;
  OutFormat format = OutFormat::text;
};

struct TableCfg {
  std::size_t n = 0, d = 0;
  std::optional<std::size_t> dim;
  std::size_t k1_min = 1, k1_max = 0;  // 0 = up to dim-1
  std::optional<double> target_bits;
  Strategy strategy = Strategy::reference;
  CostModel model = CostModel::plain2bit;
  unsigned threads = 1;
  OutFormat format = OutFormat::text;
};

struct GenInstanceCfg {
  std::string field = "z4";
  std::size_t n = 0, k1 = 0, k2 = 0, t = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string answer;  // defaults to out + ".answer"
};

struct IsdDecodeCfg {
  std::string instance_path;
  IsdParams params;
  bool m_given = false;  // m1/m2 supplied (otherwise balanced)
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> max_iters;
  bool oracle = false;
  std::uint64_t oracle_budget = 10000000;
  bool wide_v = false;
};

struct KeygenCfg {
  std::string system = "mceliece";  // mceliece | niederreiter
  std::size_t n = 0, k1 = 0, k2 = 0, t = 0;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
};

struct EncryptCfg {
  std::string pubkey_path, msg_path, out;
  std::uint64_t seed = 0;
  bool weight_le = false;  // sample error of weight <= t instead of exactly t
};

struct DecryptCfg {
  std::string privkey_path, ct_path, out;
};

int cmd_bounds(const BoundsCfg& cfg, std::ostream& out, std::ostream& err);
int cmd_estimate(const EstimateCfg& cfg, std::ostream& out, std::ostream& err);
int cmd_optimize(const OptimizeCfg& cfg, std::ostream& out, std::ostream& err);
int cmd_table(const TableCfg& cfg, std::ostream& out, std::ostream& err);
int cmd_gen_instance(const GenInstanceCfg& cfg, std::ostream& out, std::ostream& err);
int cmd_isd_decode(const IsdDecodeCfg& cfg, std::ostream& out, std::ostream& err);
int cmd_keygen(const KeygenCfg& cfg, std::ostream& out, std::ostream& err);
int cmd_encrypt(const EncryptCfg& cfg, std::ostream& out, std::ostream& err);
int cmd_decrypt(const DecryptCfg& cfg, std::ostream& out, std::ostream& err);

}  // namespace leeisd
