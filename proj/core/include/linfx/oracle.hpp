#pragma once

#include <cstdint>
#include <vector>

#include "linfx/types.hpp"

namespace linfx {

struct ExactEquivalence {
  double U_exact = 0.0;
  double L_exact = 0.0;
};

/// Exact best equivalence constants for the rows x_r of `x` (m <= 8,
/// N <= 1e5).  U_exact is the worst column absolute sum.  L_exact is the
/// minimum of ||sum alpha_r x_r||_inf over the 2m cube faces
/// {alpha_r0 = +-1, alpha in [-1,1]^m}, each face solved as a small dense LP.
ExactEquivalence exact_equivalence(const Matrix& x);

/// Exact (E (sum xi_i)^q)^(1/q) for independent Bernoulli(delta) selectors,
/// computed in log space.  n <= 500, 1 <= q <= 50 (q need not be integral).
double binomial_moment(int n, double delta, double q);

struct MomentRatioCell {
  int n = 0;
  double delta = 0.0;
  double q = 0.0;
  double moment = 0.0;
  double ratio = 0.0;  // moment / (delta n + q)
};

struct MomentRatioGrid {
  std::vector<MomentRatioCell> cells;
  MomentRatioCell best;
  double c_hat = 0.0;  // max ratio over the grid
};

/// Empirical universal constant for the selector moment bound
/// (E (sum xi)^q)^(1/q) <= C (delta n + q), maximized over the grid.
MomentRatioGrid lemma1_ratio_grid(const std::vector<int>& n_list,
                                  const std::vector<double>& delta_list,
                                  const std::vector<double>& q_list);

/// Fraction of (draw, column) pairs, over `trials` independent selector draws
/// at density min(1, sqrt(log N / n)), whose selected column sum exceeds
/// 3 sqrt(log N).
double selector_tail_rate(const FrameMatrix& frame, int trials, std::uint64_t seed);

/// Top singular value of an l x l matrix, l <= 3, via the characteristic
/// polynomial of T^T T (closed form; independent of any iterative solver).
double operator_norm_exact(const Eigen::MatrixXd& T);

}  // namespace linfx
