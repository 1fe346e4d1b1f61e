#include "linfx/validate.hpp"

#include <cmath>

namespace linfx {

FrameMatrix::FrameMatrix(Matrix entries, double g) : a(std::move(entries)), gamma(g) {
  if (a.rows() < 1 || a.cols() < 1)
    throw Error("model", "empty-matrix",
                {{"n", a.rows()}, {"N", a.cols()}});
  if (!a.allFinite())
    throw Error("model", "nonfinite-entry", {});
  if ((a.array() < 0.0).any())
    throw Error("model", "negative-entry", {});
  if (!(gamma > 0.0) || gamma > 1.0)
    throw Error("model", "gamma-out-of-range", {{"gamma", gamma}});
}

SignedBasisMatrix::SignedBasisMatrix(Matrix entries, std::vector<int> sigma, double g)
    : a(std::move(entries)), sigma_prime(std::move(sigma)), gamma(g) {
  if (a.rows() < 1 || a.cols() < 1)
    throw Error("model", "empty-matrix", {{"n", a.rows()}, {"N", a.cols()}});
  if (!a.allFinite())
    throw Error("model", "nonfinite-entry", {});
  for (int i : sigma_prime)
    if (i < 0 || i >= n())
      throw Error("model", "sigma-prime-out-of-range", {{"row", i}});
}

ordered_json ValidationReport::to_json() const {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks)
    arr.push_back(ordered_json{{"name", c.name},
                               {"pass", c.pass},
                               {"witness", c.witness},
                               {"value", c.value},
                               {"bound", c.bound}});
  return ordered_json{{"pass", pass}, {"checks", arr}};
}

ValidationReport validate_prop1(FrameMatrix& frame) {
  if (frame.N() < 2)
    throw Error("validate", "degenerate-instance",
                {{"N", frame.N()}, {"why", "log N bound vacuous"}});

  const int n = frame.n(), N = frame.N();
  const double logN = std::log(static_cast<double>(N));
  const double l1_bound = 3.0 * std::sqrt(logN);

  ValidationReport rep;

  // Column l2: sum_i a_i(j)^2 <= 1.
  {
    int worst = 0;
    double worst_val = -1.0;
    for (int j = 0; j < N; ++j) {
      const double v = frame.a.col(j).squaredNorm();
      if (v > worst_val) {
        worst_val = v;
        worst = j;
      }
    }
    rep.checks.push_back({"column-l2", std::sqrt(worst_val) <= 1.0 + kCheckTol, worst,
                          std::sqrt(worst_val), 1.0});
  }

  // Column l1: sum_i a_i(j) <= 3 sqrt(log N).
  {
    int worst = 0;
    double worst_val = -1.0;
    for (int j = 0; j < N; ++j) {
      const double v = frame.a.col(j).sum();
      if (v > worst_val) {
        worst_val = v;
        worst = j;
      }
    }
    rep.checks.push_back({"column-l1", worst_val <= l1_bound + kCheckTol, worst,
                          worst_val, l1_bound});
  }

  // Row max: max_j a_i(j) >= gamma.
  {
    int worst = 0;
    double worst_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double v = frame.a.row(i).maxCoeff();
      if (v < worst_val) {
        worst_val = v;
        worst = i;
      }
    }
    rep.checks.push_back({"row-max", worst_val >= frame.gamma - kCheckTol, worst,
                          worst_val, frame.gamma});
  }

  rep.pass = rep.checks[0].pass && rep.checks[1].pass && rep.checks[2].pass;
  frame.validated = rep.pass;
  return rep;
}

ValidationReport validate_frame2summ(SignedBasisMatrix& basis, double threshold) {
  if (basis.sigma_prime.empty())
    throw Error("validate", "empty-sigma-prime", {});

  const int N = basis.N();
  ValidationReport rep;

  // Column l2 over sigma' only.
  {
    int worst = 0;
    double worst_val = -1.0;
    for (int j = 0; j < N; ++j) {
      double v = 0.0;
      for (int i : basis.sigma_prime) v += basis.a(i, j) * basis.a(i, j);
      if (v > worst_val) {
        worst_val = v;
        worst = j;
      }
    }
    rep.checks.push_back({"column-l2", std::sqrt(worst_val) <= 1.0 + kCheckTol, worst,
                          std::sqrt(worst_val), 1.0});
  }

  // Row sup >= threshold for every row of sigma'.
  {
    int worst = basis.sigma_prime.front();
    double worst_val = std::numeric_limits<double>::infinity();
    for (int i : basis.sigma_prime) {
      const double v = basis.a.row(i).cwiseAbs().maxCoeff();
      if (v < worst_val) {
        worst_val = v;
        worst = i;
      }
    }
    rep.checks.push_back({"row-sup", worst_val >= threshold - kCheckTol, worst,
                          worst_val, threshold});
  }

  rep.pass = rep.checks[0].pass && rep.checks[1].pass;
  if (rep.pass) {
    basis.validated = true;
    basis.gamma = threshold;
  } else {
    basis.validated = false;
  }
  return rep;
}

ExtractParams ExtractParams::make(double eta, double gamma, int N, double C,
                                  std::uint64_t seed, int budget) {
  if (N < 2)
    throw Error("params", "degenerate-instance", {{"N", N}});
  if (!(eta > 0.0) || !(eta < gamma) || gamma > 1.0)
    throw Error("params", "precondition",
                {{"why", "need 0 < eta < gamma <= 1"}, {"eta", eta}, {"gamma", gamma}});
  if (!(C > 0.0))
    throw Error("params", "precondition", {{"why", "need C > 0"}, {"C", C}});
  if (budget < 1)
    throw Error("params", "precondition", {{"why", "need budget >= 1"}, {"budget", budget}});

  const double logN = std::log(static_cast<double>(N));
  ExtractParams p;
  p.eta = eta;
  p.gamma = gamma;
  p.C = C;
  p.delta = std::min(1.0, 2.0 * eta / std::sqrt(logN));
  p.epsilon = eta / logN;
  p.p = logN;
  p.seed = seed;
  p.budget = budget;
  return p;
}

}  // namespace linfx
