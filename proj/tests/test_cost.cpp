#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "leeisd/cost.hpp"

using namespace leeisd;

TEST_CASE("binary collision cost on a hand-checked instance") {
  // n=10, k=4, t=2 with v=1, l=2, m1=m2=2.
  CostEstimate est = cost_stern_f2(10, 4, 2, IsdParams{1, 2, 2, 2});
  CHECK(est.gauss.get_ui() == 396);  // 6^2 * 11
  CHECK(est.setS.get_ui() == 0);     // L(2,1) - 2 = 0
  CHECK(est.setT.get_ui() == 4);     // l * C(2,1)
  CHECK(rat_str(est.collision) == "6");
  CHECK(rat_str(est.iterCost) == "406");
  CHECK(rat_str(est.successProb) == "4/45");
  CHECK(rat_str(est.totalWork) == "9135/2");
  CHECK(est.securityBits == doctest::Approx(12.1573).epsilon(1e-4));
  CHECK(est.attainable);
}

TEST_CASE("binary cost treats an overshooting window weight as unattainable") {
  // t - 2v < 0 is allowed and yields zero success probability.
  CostEstimate est = cost_stern_f2(10, 4, 1, IsdParams{1, 0, 2, 2});
  CHECK_FALSE(est.attainable);
  CHECK(rat_str(est.successProb) == "0");
  CHECK(rat_str(est.collision) == "0");
  CHECK(rat_str(est.totalWork) == "0");
  CHECK(est.securityBits == std::numeric_limits<double>::infinity());
}

TEST_CASE("parameter constraints are rejected with exceptions") {
  CHECK_THROWS_AS(cost_stern_f2(10, 12, 2, IsdParams{0, 0, 6, 6}), std::invalid_argument);
  CHECK_THROWS_AS(cost_stern_f2(10, 4, 11, IsdParams{0, 0, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cost_stern_f2(10, 4, 2, IsdParams{0, 0, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cost_stern_f2(10, 4, 2, IsdParams{0, 7, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cost_stern_f2(10, 4, 2, IsdParams{0, 5, 2, 2}), std::invalid_argument);

  CHECK_THROWS_AS(cost_stern_z4(10, 2, 2, 21, IsdParams{0, 0, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cost_stern_z4(10, 2, 2, 3, IsdParams{2, 0, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(cost_stern_z4(10, 2, 2, 3, IsdParams{2, 0, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cost_stern_z4(10, 2, 2, 4, IsdParams{0, 7, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cost_stern_z4(10, 2, 2, 9, IsdParams{1, 0, 2, 2}), std::invalid_argument);
}

TEST_CASE("wide window weights unlock v beyond min(m1, m2)") {
  CHECK_THROWS_AS(cost_stern_z4(12, 2, 2, 6, IsdParams{3, 0, 2, 2}, CostModel::plain2bit),
                  std::invalid_argument);
  CostEstimate est =
      cost_stern_z4(12, 2, 2, 6, IsdParams{3, 0, 2, 2}, CostModel::plain2bit, true);
  CHECK(est.attainable);
}

TEST_CASE("table-lookup model halves the quaternary symbol charges") {
  IsdParams p{1, 1, 2, 2};
  CostEstimate plain = cost_stern_z4(12, 2, 2, 3, p, CostModel::plain2bit);
  CostEstimate lut = cost_stern_z4(12, 2, 2, 3, p, CostModel::lut1bit);
  CHECK(plain.gauss == 2 * lut.gauss);
  CHECK(plain.successProb == lut.successProb);  // model affects cost, not probability
  CHECK(plain.totalWork > lut.totalWork);
  CHECK(cost_model_name(CostModel::plain2bit) == "paper-2bit");
  CHECK(cost_model_name(CostModel::lut1bit) == "lut-1bit");
}

TEST_CASE("published key sizes come out of the formulas exactly") {
  CHECK(key_size_binary(300, 26).get_ui() == 7124);
  CHECK(key_size_quaternary(150, 1, 50).get_ui() == 5198);
  CHECK(key_size_quaternary(150, 13, 26).get_ui() == 6110);
  CHECK(key_size_quaternary(425, 55, 370).get_ui() == 20350);
}

TEST_CASE("reference strategy reproduces the published operating points") {
  ParamChoice c = optimize_params_z4(150, 13, 26, 40, Strategy::reference);
  REQUIRE(c.feasible);
  CHECK(c.params.v == 19);
  CHECK(c.params.ell == 0);
  CHECK(c.params.m1 == 20);
  CHECK(c.params.m2 == 19);
  CHECK(c.est.securityBits == doctest::Approx(134.34).epsilon(1e-3));

  ParamChoice ex2 = optimize_params_z4(425, 55, 370, 42, Strategy::reference);
  REQUIRE(ex2.feasible);
  CHECK(ex2.params.v == 21);  // bumped above floor((t-1)/2) to fit the outside weight
  CHECK(ex2.est.securityBits == doctest::Approx(128.616).epsilon(1e-3));
}

TEST_CASE("wider strategies never do worse than narrower ones") {
  ParamChoice ref = optimize_params_z4(30, 4, 8, 5, Strategy::reference);
  ParamChoice sw = optimize_params_z4(30, 4, 8, 5, Strategy::sweep);
  ParamChoice full = optimize_params_z4(30, 4, 8, 5, Strategy::full);
  REQUIRE(ref.feasible);
  REQUIRE(sw.feasible);
  REQUIRE(full.feasible);
  CHECK(sw.est.totalWork <= ref.est.totalWork);
  CHECK(full.est.totalWork <= sw.est.totalWork);
}

TEST_CASE("binary optimization reaches the published comparison point") {
  ParamChoice c = optimize_params_f2(300, 26, 40, Strategy::full);
  REQUIRE(c.feasible);
  CHECK(c.est.securityBits == doctest::Approx(27.81).epsilon(1e-2));
}

TEST_CASE("sweeps are deterministic under threading") {
  ParamChoice lone = optimize_params_z4(40, 5, 10, 7, Strategy::full, CostModel::plain2bit, 1);
  ParamChoice four = optimize_params_z4(40, 5, 10, 7, Strategy::full, CostModel::plain2bit, 4);
  CHECK(lone.params.v == four.params.v);
  CHECK(lone.params.ell == four.params.ell);
  CHECK(lone.params.m1 == four.params.m1);
  CHECK(lone.est.totalWork == four.est.totalWork);
}

TEST_CASE("table scan derives the type from the dimension") {
  TableResult res = table_scan(150, 81, std::nullopt, 1, 0, Strategy::reference);
  REQUIRE(res.feasible);
  CHECK(res.t == 40);
  CHECK(res.dim == 26);
  REQUIRE(res.rows.size() == 25);
  CHECK(res.rows[0].k1 == 1);
  CHECK(res.rows[0].k2 == 50);
  CHECK(res.rows[0].keySize.get_ui() == 5198);
  CHECK(res.rows[24].keySize.get_ui() == 6446);

  TableResult none = table_scan(150, 301, std::nullopt, 1, 0, Strategy::reference);
  CHECK_FALSE(none.feasible);
  CHECK(none.rows.empty());
  CHECK(none.note.find("Gilbert-Varshamov") != std::string::npos);

  TableResult ex2 = table_scan(425, 85, 240, 55, 55, Strategy::reference);
  REQUIRE(ex2.rows.size() == 1);
  CHECK(ex2.rows[0].k2 == 370);
  CHECK(ex2.rows[0].note.find("20335") != std::string::npos);
}
