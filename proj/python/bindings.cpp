#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "leeisd/cost.hpp"
#include "leeisd/crypto.hpp"
#include "leeisd/io.hpp"
#include "leeisd/isd.hpp"
#include "leeisd/lee.hpp"
#include "leeisd/z4.hpp"

namespace py = pybind11;
using namespace leeisd;

namespace {

py::int_ to_py(const BigInt& v) {
  std::string s = v.get_str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

BigInt from_py(const py::int_& v) {
  py::str s(static_cast<py::handle>(v));
  return BigInt(static_cast<std::string>(s));
}

CostModel model_arg(const std::string& s) {
  if (s == "paper" || s == "paper-2bit") return CostModel::plain2bit;
  if (s == "lut" || s == "lut-1bit") return CostModel::lut1bit;
  throw std::invalid_argument("cost model must be paper|paper-2bit|lut|lut-1bit");
}

Strategy strategy_arg(const std::string& s) {
  auto st = parse_strategy(s);
  if (!st) throw std::invalid_argument("strategy must be reference|sweep|full");
  return *st;
}

Field field_arg(const std::string& s) {
  if (s == "z4") return Field::Z4;
  if (s == "f2") return Field::F2;
  throw std::invalid_argument("field must be z4 or f2");
}

Mat mat_from_rows(const std::vector<Vec>& rows, unsigned mod) {
  std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  Mat M(r, c, mod);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) M(i, j) = rows[i][j];
  }
  return M;
}

std::vector<Vec> mat_to_rows(const Mat& M) {
  std::vector<Vec> rows;
  rows.reserve(M.rows());
  for (std::size_t r = 0; r < M.rows(); ++r) rows.push_back(M.row(r));
  return rows;
}

py::dict estimate_dict(const CostEstimate& est) {
  py::dict d;
  d["gauss"] = to_py(est.gauss);
  d["set_s"] = to_py(est.setS);
  d["set_t"] = to_py(est.setT);
  d["collision"] = rat_str(est.collision);
  d["iter_cost"] = rat_str(est.iterCost);
  d["success_prob"] = rat_str(est.successProb);
  d["total_work"] = rat_str(est.totalWork);
  d["security_bits"] = est.securityBits;
  d["attainable"] = est.attainable;
  return d;
}

py::dict choice_dict(const ParamChoice& c) {
  py::dict d = estimate_dict(c.est);
  d["feasible"] = c.feasible;
  d["v"] = c.params.v;
  d["ell"] = c.params.ell;
  d["m1"] = c.params.m1;
  d["m2"] = c.params.m2;
  return d;
}

struct PyInstance {
  IsdInstance inst;
  Vec planted;
};

struct PyMcEliece {
  McElieceKeyPair kp;
};

struct PyNiederreiter {
  NiederreiterKeyPair kp;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lee-metric decoding toolkit for quaternary linear codes";

  m.def("lee_weight", [](const Vec& x, unsigned mod) { return lee_weight(x, mod); },
        py::arg("x"), py::arg("mod") = 4);
  m.def("gray_map", &gray_map, py::arg("x"));
  m.def("gray_inverse", &gray_inverse, py::arg("b"));
  m.def("count_lee", [](std::size_t n, std::size_t w) { return to_py(count_lee(n, w)); },
        py::arg("n"), py::arg("w"));
  m.def("sum_binom", [](std::size_t n, std::size_t w) { return to_py(sum_binom(n, w)); },
        py::arg("n"), py::arg("w"));
  m.def("sum_count_lee",
        [](std::size_t n, std::size_t w) { return to_py(sum_count_lee(n, w)); }, py::arg("n"),
        py::arg("w"));
  m.def("enumerate_lee",
        [](std::size_t n, std::size_t w) {
          std::vector<Vec> out;
          enumerate_lee(n, w, [&](const Vec& e) { out.push_back(e); });
          return out;
        },
        py::arg("n"), py::arg("w"));
  m.def("unrank_lee",
        [](std::size_t n, std::size_t w, const py::int_& index) {
          return unrank_lee(n, w, from_py(index));
        },
        py::arg("n"), py::arg("w"), py::arg("index"));

  m.def("singleton_bound", &singleton_bound, py::arg("n"), py::arg("k1"), py::arg("k2"));
  m.def("gv_max_dim", &gv_max_dim, py::arg("n"), py::arg("d"));
  m.def("rate", [](std::size_t n, std::size_t k1, std::size_t k2) {
          return rat_str(rate(n, k1, k2));
        },
        py::arg("n"), py::arg("k1"), py::arg("k2"));
  m.def("key_size_quaternary",
        [](std::size_t n, std::size_t k1, std::size_t k2) {
          return to_py(key_size_quaternary(n, k1, k2));
        },
        py::arg("n"), py::arg("k1"), py::arg("k2"));
  m.def("key_size_binary",
        [](std::size_t n, std::size_t k) { return to_py(key_size_binary(n, k)); }, py::arg("n"),
        py::arg("k"));

  m.def("estimate_z4",
        [](std::size_t n, std::size_t k1, std::size_t k2, std::size_t t, std::size_t v,
           std::size_t ell, std::size_t m1, std::size_t m2, const std::string& model,
           bool wide_v) {
          return estimate_dict(
              cost_stern_z4(n, k1, k2, t, IsdParams{v, ell, m1, m2}, model_arg(model), wide_v));
        },
        py::arg("n"), py::arg("k1"), py::arg("k2"), py::arg("t"), py::arg("v"), py::arg("ell"),
        py::arg("m1"), py::arg("m2"), py::arg("model") = "paper", py::arg("wide_v") = false);
  m.def("estimate_f2",
        [](std::size_t n, std::size_t k, std::size_t t, std::size_t v, std::size_t ell,
           std::size_t m1, std::size_t m2, const std::string& model) {
          return estimate_dict(cost_stern_f2(n, k, t, IsdParams{v, ell, m1, m2},
                                             model_arg(model)));
        },
        py::arg("n"), py::arg("k"), py::arg("t"), py::arg("v"), py::arg("ell"), py::arg("m1"),
        py::arg("m2"), py::arg("model") = "paper");
  m.def("optimize_z4",
        [](std::size_t n, std::size_t k1, std::size_t k2, std::size_t t,
           const std::string& strategy, const std::string& model, unsigned threads) {
          return choice_dict(
              optimize_params_z4(n, k1, k2, t, strategy_arg(strategy), model_arg(model), threads));
        },
        py::arg("n"), py::arg("k1"), py::arg("k2"), py::arg("t"),
        py::arg("strategy") = "full", py::arg("model") = "paper", py::arg("threads") = 1);
  m.def("optimize_f2",
        [](std::size_t n, std::size_t k, std::size_t t, const std::string& strategy,
           const std::string& model, unsigned threads) {
          return choice_dict(
              optimize_params_f2(n, k, t, strategy_arg(strategy), model_arg(model), threads));
        },
        py::arg("n"), py::arg("k"), py::arg("t"), py::arg("strategy") = "full",
        py::arg("model") = "paper", py::arg("threads") = 1);
  m.def("table",
        [](std::size_t n, std::size_t d, std::optional<std::size_t> dim, std::size_t k1_min,
           std::size_t k1_max, const std::string& strategy, const std::string& model,
           unsigned threads) {
          TableResult res =
              table_scan(n, d, dim, k1_min, k1_max, strategy_arg(strategy), model_arg(model),
                         threads);
          py::dict out;
          out["n"] = res.n;
          out["d"] = res.d;
          out["t"] = res.t;
          out["dim"] = res.dim;
          out["feasible"] = res.feasible;
          out["note"] = res.note;
          py::list rows;
          for (const TableRow& row : res.rows) {
            py::dict r = choice_dict(row.choice);
            r["k1"] = row.k1;
            r["k2"] = row.k2;
            r["key_size"] = to_py(row.keySize);
            r["note"] = row.note;
            rows.append(r);
          }
          out["rows"] = rows;
          return out;
        },
        py::arg("n"), py::arg("d"), py::arg("dim") = std::nullopt, py::arg("k1_min") = 1,
        py::arg("k1_max") = 0, py::arg("strategy") = "reference", py::arg("model") = "paper",
        py::arg("threads") = 1);

  py::class_<PyInstance>(m, "Instance")
      .def(py::init([](const std::string& field, std::size_t n, std::size_t k1, std::size_t k2,
                       std::size_t t, std::uint64_t seed) {
             PyInstance p;
             Rng rng(seed);
             p.inst = make_random_instance(field_arg(field), n, k1, k2, t, rng, &p.planted);
             return p;
           }),
           py::arg("field"), py::arg("n"), py::arg("k1"), py::arg("k2"), py::arg("t"),
           py::arg("seed"))
      .def_property_readonly("n", [](const PyInstance& p) { return p.inst.n; })
      .def_property_readonly("k1", [](const PyInstance& p) { return p.inst.k1; })
      .def_property_readonly("k2", [](const PyInstance& p) { return p.inst.k2; })
      .def_property_readonly("t", [](const PyInstance& p) { return p.inst.t; })
      .def_property_readonly("H", [](const PyInstance& p) { return mat_to_rows(p.inst.H); })
      .def_property_readonly("s", [](const PyInstance& p) { return p.inst.s; })
      .def_property_readonly("planted", [](const PyInstance& p) { return p.planted; })
      .def("text", [](const PyInstance& p) { return write_instance(p.inst); })
      .def("decode",
           [](const PyInstance& p, std::size_t v, std::size_t ell,
              std::optional<std::size_t> m1, std::uint64_t seed,
              std::optional<std::uint64_t> max_iters, bool wide_v) {
             IsdParams params;
             params.v = v;
             params.ell = ell;
             std::size_t K = p.inst.k1 + p.inst.k2;
             params.m1 = m1 ? *m1 : (K + 1) / 2;
             params.m2 = K - params.m1;
             validate_isd_params(p.inst, params, wide_v);
             Rng rng(seed);
             std::uint64_t cap =
                 max_iters ? *max_iters : default_max_iters(p.inst, params, wide_v);
             IsdResult res = stern_decode(p.inst, params, rng, cap, wide_v);
             py::dict d;
             d["found"] = res.found;
             d["e"] = res.e;
             d["iterations"] = res.diag.iterations;
             d["transform_retries"] = res.diag.transformRetries;
             d["collisions"] = res.diag.collisions;
             d["weight_checks"] = res.diag.weightChecks;
             return d;
           },
           py::arg("v") = 0, py::arg("ell") = 0, py::arg("m1") = std::nullopt,
           py::arg("seed") = 1, py::arg("max_iters") = std::nullopt,
           py::arg("wide_v") = false)
      .def("brute_force",
           [](const PyInstance& p, std::uint64_t budget) {
             BruteForceResult res = brute_force_decode(p.inst, BigInt(budget));
             py::dict d;
             d["by_weight"] = res.byWeight;
             d["scanned"] = res.scanned;
             return d;
           },
           py::arg("budget") = 10000000);

  m.def("decode_instance",
        [](const std::string& field, std::size_t n, std::size_t k1, std::size_t k2,
           std::size_t t, const std::vector<Vec>& H, const Vec& s, std::size_t v,
           std::size_t ell, std::optional<std::size_t> m1, std::uint64_t seed,
           std::optional<std::uint64_t> max_iters, bool wide_v) {
          IsdInstance inst;
          inst.field = field_arg(field);
          inst.n = n;
          inst.k1 = k1;
          inst.k2 = k2;
          inst.t = t;
          inst.H = mat_from_rows(H, inst.field == Field::Z4 ? 4 : 2);
          inst.s = s;
          IsdParams params;
          params.v = v;
          params.ell = ell;
          std::size_t K = k1 + k2;
          params.m1 = m1 ? *m1 : (K + 1) / 2;
          params.m2 = K - params.m1;
          validate_isd_params(inst, params, wide_v);
          Rng rng(seed);
          std::uint64_t cap = max_iters ? *max_iters : default_max_iters(inst, params, wide_v);
          IsdResult res = stern_decode(inst, params, rng, cap, wide_v);
          py::dict d;
          d["found"] = res.found;
          d["e"] = res.e;
          d["iterations"] = res.diag.iterations;
          return d;
        },
        py::arg("field"), py::arg("n"), py::arg("k1"), py::arg("k2"), py::arg("t"),
        py::arg("H"), py::arg("s"), py::arg("v") = 0, py::arg("ell") = 0,
        py::arg("m1") = std::nullopt, py::arg("seed") = 1, py::arg("max_iters") = std::nullopt,
        py::arg("wide_v") = false);

  py::class_<PyMcEliece>(m, "McEliece")
      .def(py::init([](std::size_t n, std::size_t k1, std::size_t k2, std::size_t t,
                       std::uint64_t seed) {
             PyMcEliece p;
             Rng rng(seed);
             p.kp = mceliece_keygen(gen_secret_code(n, k1, k2, t, rng), rng);
             return p;
           }),
           py::arg("n"), py::arg("k1"), py::arg("k2"), py::arg("t"), py::arg("seed"))
      .def_property_readonly("t", [](const PyMcEliece& p) { return p.kp.pub.t; })
      .def_property_readonly("dmin", [](const PyMcEliece& p) { return p.kp.priv.code.dmin; })
      .def("encrypt",
           [](const PyMcEliece& p, const Vec& x, std::uint64_t seed, bool exact_weight) {
             Rng rng(seed);
             return mceliece_encrypt(p.kp.pub, x, rng, exact_weight);
           },
           py::arg("x"), py::arg("seed"), py::arg("exact_weight") = true)
      .def("decrypt", [](const PyMcEliece& p, const Vec& y) { return mceliece_decrypt(p.kp, y); },
           py::arg("y"))
      .def("public_key_text", [](const PyMcEliece& p) { return write_mceliece_public(p.kp.pub); })
      .def("attack_self_test",
           [](const PyMcEliece& p, std::uint64_t seed) {
             Rng rng(seed);
             AttackReport rep = attack_self_test(p.kp, rng);
             py::dict d;
             d["recovered"] = rep.recovered;
             d["iterations"] = rep.iterations;
             d["expected_iterations"] = rep.expectedIterations;
             return d;
           },
           py::arg("seed"));

  py::class_<PyNiederreiter>(m, "Niederreiter")
      .def(py::init([](std::size_t n, std::size_t k1, std::size_t k2, std::size_t t,
                       std::uint64_t seed) {
             PyNiederreiter p;
             Rng rng(seed);
             p.kp = niederreiter_keygen(gen_secret_code(n, k1, k2, t, rng), rng);
             return p;
           }),
           py::arg("n"), py::arg("k1"), py::arg("k2"), py::arg("t"), py::arg("seed"))
      .def_property_readonly("t", [](const PyNiederreiter& p) { return p.kp.pub.t; })
      .def("encrypt",
           [](const PyNiederreiter& p, const Vec& x) { return niederreiter_encrypt(p.kp.pub, x); },
           py::arg("x"))
      .def("decrypt",
           [](const PyNiederreiter& p, const Vec& y) { return niederreiter_decrypt(p.kp, y); },
           py::arg("y"))
      .def("public_key_text",
           [](const PyNiederreiter& p) { return write_niederreiter_public(p.kp.pub); })
      .def("attack_self_test",
           [](const PyNiederreiter& p, std::uint64_t seed) {
             Rng rng(seed);
             AttackReport rep = attack_self_test(p.kp, rng);
             py::dict d;
             d["recovered"] = rep.recovered;
             d["iterations"] = rep.iterations;
             d["expected_iterations"] = rep.expectedIterations;
             return d;
           },
           py::arg("seed"));

  m.attr("__version__") = "1.0.0";
}
