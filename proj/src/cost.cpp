#include "leeisd/cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "leeisd/lee.hpp"

namespace leeisd {

namespace {

// L(m, v) - m, floored at zero (the subtracted m counts the first column
// sweep already charged elsewhere; at v = 0 the sum is empty).
BigInt sum_minus_m(std::size_t m, std::size_t v) {
  BigInt s = sum_binom(m, v) - static_cast<long>(m);
  return s < 0 ? BigInt(0) : s;
}

void finish(CostEstimate& est) {
  est.iterCost = BigRat(est.gauss + est.setS + est.setT) + est.collision;
  if (est.successProb > 0) {
    est.attainable = true;
    est.totalWork = est.iterCost / est.successProb;
    est.totalWork.canonicalize();
    est.securityBits = log2_big(est.totalWork);
  } else {
    est.attainable = false;
    est.totalWork = 0;
    est.securityBits = std::numeric_limits<double>::infinity();
  }
}

}  // namespace

std::string cost_model_name(CostModel m) {
  return m == CostModel::plain2bit ? "paper-2bit" : "lut-1bit";
}

std::optional<Strategy> parse_strategy(const std::string& s) {
  if (s == "reference") return Strategy::reference;
  if (s == "sweep") return Strategy::sweep;
  if (s == "full") return Strategy::full;
  return std::nullopt;
}

CostEstimate cost_stern_f2(std::size_t n, std::size_t k, std::size_t t, const IsdParams& p,
                           CostModel) {
  if (k > n) throw std::invalid_argument("cost_stern_f2: k > n");
  if (t > n) throw std::invalid_argument("cost_stern_f2: t exceeds the code length");
  if (p.m1 + p.m2 != k) throw std::invalid_argument("cost_stern_f2: m1 + m2 must equal k");
  if (p.v > p.m1 || p.v > p.m2)
    throw std::invalid_argument("cost_stern_f2: v must not exceed m1 or m2");
  if (p.ell > n - k) throw std::invalid_argument("cost_stern_f2: ell exceeds n - k");
  long tail = static_cast<long>(t) - 2 * static_cast<long>(p.v);
  if (tail > static_cast<long>(n - k - p.ell))
    throw std::invalid_argument("cost_stern_f2: t - 2v exceeds n - k - ell");

  CostEstimate est;
  BigInt nk(static_cast<unsigned long>(n - k));
  est.gauss = nk * nk * static_cast<long>(n + 1);
  est.setS = BigInt(static_cast<long>(p.ell)) * sum_minus_m(p.m1, p.v);
  est.setT = BigInt(static_cast<long>(p.ell)) *
             (sum_minus_m(p.m2, p.v) + binomial(static_cast<long>(p.m2), static_cast<long>(p.v)));
  BigInt pairs = binomial(static_cast<long>(p.m1), static_cast<long>(p.v)) *
                 binomial(static_cast<long>(p.m2), static_cast<long>(p.v));
  if (tail >= 0) {
    est.collision = BigRat(pairs * (2 * (tail + 1) * (2 * static_cast<long>(p.v) + 1)),
                           pow2(p.ell));
    est.collision.canonicalize();
    BigRat succ(pairs * binomial(static_cast<long>(n - k - p.ell), tail),
                binomial(static_cast<long>(n), static_cast<long>(t)));
    succ.canonicalize();
    est.successProb = succ;
  }
  finish(est);
  return est;
}

CostEstimate cost_stern_z4(std::size_t n, std::size_t k1, std::size_t k2, std::size_t t,
                           const IsdParams& p, CostModel model, bool wide_v) {
  const std::size_t K = k1 + k2;
  if (K > n) throw std::invalid_argument("cost_stern_z4: k1 + k2 > n");
  if (t > 2 * n) throw std::invalid_argument("cost_stern_z4: t exceeds the maximum Lee weight");
  if (p.m1 + p.m2 != K) throw std::invalid_argument("cost_stern_z4: m1 + m2 must equal k1 + k2");
  const std::size_t vcap = wide_v ? 2 * std::min(p.m1, p.m2) : std::min(p.m1, p.m2);
  if (p.v > vcap) throw std::invalid_argument("cost_stern_z4: v exceeds the per-side cap");
  if (2 * p.v > t) throw std::invalid_argument("cost_stern_z4: 2v exceeds t");
  if (p.ell > n - K) throw std::invalid_argument("cost_stern_z4: ell exceeds n - k1 - k2");
  const std::size_t tail = t - 2 * p.v;
  if (tail > n - K - p.ell)
    throw std::invalid_argument("cost_stern_z4: t - 2v exceeds n - k1 - k2 - ell");

  const long z4c = model == CostModel::plain2bit ? 2 : 1;
  const long ell = static_cast<long>(p.ell);
  const long k2l = static_cast<long>(k2);

  CostEstimate est;
  BigInt nk1(static_cast<unsigned long>(n - k1));
  est.gauss = z4c * nk1 * nk1 * static_cast<long>(n + 1);
  est.setS = z4c * ell * sum_count_lee(p.m1, p.v) + k2l * sum_minus_m(p.m1, p.v);
  BigInt c2m2 = binomial(static_cast<long>(2 * p.m2), static_cast<long>(p.v));
  est.setT = z4c * ell * (sum_count_lee(p.m2, p.v) + c2m2) +
             k2l * (sum_minus_m(p.m2, p.v) + c2m2);
  BigInt pairs = binomial(static_cast<long>(2 * p.m1), static_cast<long>(p.v)) * c2m2;
  est.collision = BigRat(pairs * static_cast<long>(tail + 1) *
                             (z4c * (4 * static_cast<long>(p.v) + 1)),
                         pow2(k2 + 2 * p.ell));
  est.collision.canonicalize();
  BigRat succ(pairs * binomial(static_cast<long>(2 * (n - K - p.ell)), static_cast<long>(tail)),
              binomial(static_cast<long>(2 * n), static_cast<long>(t)));
  succ.canonicalize();
  est.successProb = succ;
  finish(est);
  return est;
}

namespace {

// Deterministic preference: attainable first, then least total work, ties by
// smaller ell, then v, then m1.
bool better(const ParamChoice& a, const ParamChoice& b) {
  if (!b.feasible) return a.feasible;
  if (!a.feasible) return false;
  if (a.est.attainable != b.est.attainable) return a.est.attainable;
  if (a.est.attainable && a.est.totalWork != b.est.totalWork)
    return a.est.totalWork < b.est.totalWork;
  if (a.params.ell != b.params.ell) return a.params.ell < b.params.ell;
  if (a.params.v != b.params.v) return a.params.v < b.params.v;
  return a.params.m1 < b.params.m1;
}

struct GridPoint {
  IsdParams p;
};

template <class Eval>
ParamChoice sweep_grid(const std::vector<GridPoint>& grid, const Eval& eval, unsigned threads) {
  if (grid.empty()) return {};
  threads = std::max(1u, threads);
  std::size_t nthreads = std::min<std::size_t>(threads, grid.size());
  std::vector<ParamChoice> best(nthreads);
  auto work = [&](std::size_t id) {
    for (std::size_t i = id; i < grid.size(); i += nthreads) {
      ParamChoice c;
      c.params = grid[i].p;
      c.est = eval(grid[i].p);
      c.feasible = true;
      if (better(c, best[id])) best[id] = c;
    }
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t id = 0; id < nthreads; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  ParamChoice overall;
  for (const auto& c : best)
    if (better(c, overall)) overall = c;
  return overall;
}

// Shared strategy driver. The rule point uses m1 = ceil(K/2) and
// v = min(m1, m2, floor((t-1)/2)), bumped minimally upward when t - 2v would
// overflow the window outside the information set.
ParamChoice optimize_generic(std::size_t n, std::size_t K, std::size_t t, Strategy strategy,
                             unsigned threads,
                             const std::function<CostEstimate(const IsdParams&)>& eval) {
  if (K == 0 || K > n) return {};
  const std::size_t m1 = (K + 1) / 2, m2 = K / 2;
  const std::size_t outside = n - K;

  auto rule_v = [&]() -> std::optional<std::size_t> {
    std::size_t v = std::min({m1, m2, t > 0 ? (t - 1) / 2 : 0});
    // Feasibility at ell = 0 needs t - 2v <= n - K; raising v shrinks the tail.
    while (t - 2 * v > outside) {
      if (v >= std::min(m1, m2) || 2 * (v + 1) > t) return std::nullopt;
      ++v;
    }
    return v;
  };

  std::vector<GridPoint> grid;
  switch (strategy) {
    case Strategy::reference: {
      auto v = rule_v();
      if (!v) return {};
      grid.push_back({IsdParams{*v, 0, m1, m2}});
      break;
    }
    case Strategy::sweep: {
      auto v = rule_v();
      if (!v) return {};
      for (std::size_t ell = 0; ell <= outside - (t - 2 * *v); ++ell)
        grid.push_back({IsdParams{*v, ell, m1, m2}});
      break;
    }
    case Strategy::full: {
      for (std::size_t a1 = std::max<std::size_t>(1, m1 >= 2 ? m1 - 2 : 1);
           a1 <= std::min(K - 1, m1 + 2); ++a1) {
        std::size_t a2 = K - a1;
        for (std::size_t v = 0; v <= std::min({a1, a2, t / 2}); ++v) {
          if (t - 2 * v > outside) continue;
          for (std::size_t ell = 0; ell <= outside - (t - 2 * v); ++ell)
            grid.push_back({IsdParams{v, ell, a1, a2}});
        }
      }
      break;
    }
  }
  return sweep_grid(grid, eval, threads);
}

}  // namespace

ParamChoice optimize_params_f2(std::size_t n, std::size_t k, std::size_t t, Strategy strategy,
                               CostModel model, unsigned threads) {
  return optimize_generic(n, k, t, strategy, threads, [&](const IsdParams& p) {
    return cost_stern_f2(n, k, t, p, model);
  });
}

ParamChoice optimize_params_z4(std::size_t n, std::size_t k1, std::size_t k2, std::size_t t,
                               Strategy strategy, CostModel model, unsigned threads) {
  return optimize_generic(n, k1 + k2, t, strategy, threads, [&](const IsdParams& p) {
    return cost_stern_z4(n, k1, k2, t, p, model, false);
  });
}

BigInt key_size_quaternary(std::size_t n, std::size_t k1, std::size_t k2) {
  if (k1 + k2 > n) throw std::invalid_argument("key_size_quaternary: k1 + k2 > n");
  return BigInt(static_cast<unsigned long>(k1)) * static_cast<unsigned long>(k2) +
         BigInt(static_cast<unsigned long>(2 * k1 + k2)) *
             static_cast<unsigned long>(n - k1 - k2);
}

BigInt key_size_binary(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("key_size_binary: k > n");
  return BigInt(static_cast<unsigned long>(k)) * static_cast<unsigned long>(n - k);
}

TableResult table_scan(std::size_t n, std::size_t d, std::optional<std::size_t> dim_override,
                       std::size_t k1_min, std::size_t k1_max, Strategy strategy, CostModel model,
                       unsigned threads) {
  TableResult res;
  res.n = n;
  res.d = d;
  res.t = (d - 1) / 2;
  res.dim = dim_override ? *dim_override : gv_max_dim(n, d);
  if (res.dim == 0) {
    res.feasible = false;
    res.note = "no positive dimension satisfies the Gilbert-Varshamov bound at this (n, d)";
    return res;
  }
  res.feasible = true;
  if (k1_min == 0) k1_min = 1;
  if (k1_max == 0) k1_max = res.dim - 1;
  for (std::size_t k1 = k1_min; k1 <= k1_max; ++k1) {
    TableRow row;
    row.k1 = k1;
    if (k1 > res.dim) {
      row.note = "skipped: k2 would be negative";
      res.rows.push_back(std::move(row));
      continue;
    }
    row.k2 = 2 * (res.dim - k1);
    if (k1 + row.k2 > n) {
      row.note = "skipped: type longer than the code";
      res.rows.push_back(std::move(row));
      continue;
    }
    row.keySize = key_size_quaternary(n, k1, row.k2);
    row.choice = optimize_params_z4(n, k1, row.k2, res.t, strategy, model, threads);
    if (n == 425 && k1 == 55 && row.k2 == 370)
      row.note =
          "formula gives 20350; 20335 circulates in earlier tabulations (15-bit discrepancy, "
          "formula value kept)";
    res.rows.push_back(std::move(row));
  }
  return res;
}

}  // namespace leeisd
