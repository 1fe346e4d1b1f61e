#pragma once

#include <cstdint>

#include "linfx/types.hpp"

namespace linfx {

/// Random frame satisfying the three frame hypotheses by construction:
/// sparse nonnegative columns rescaled into the l2/l1 budgets, then a gamma
/// entry planted for every row that lacks one (re-scaling only the natural
/// entries of the hosting column).  Throws generation-failure when the
/// planting is infeasible after `budget` fresh attempts.
FrameMatrix gen_prop1_instance(int n, int N, double gamma, double density,
                               std::uint64_t seed, int budget = 64);

/// n orthonormalized standard Gaussian rows in R^N; sigma_prime left empty
/// (the preprocessing stage fills it).
SignedBasisMatrix gen_random_subspace(int n, int N, std::uint64_t seed);

/// Nets on the Euclidean spheres of X = l_2^l and Y* = l_2^l, 1/2-separated
/// and 1/2-covering, and the induced embedding T -> (y*_i(T x_j))_{i,j}.
struct OperatorSpaceEmbedding {
  int l = 0;
  Eigen::MatrixXd net_x;      // columns are unit vectors
  Eigen::MatrixXd net_ystar;  // columns are unit vectors
  double covering_radius_x = 0.0;  // sampled estimate recorded at build time
  double covering_radius_y = 0.0;

  /// (y*_i(T x_j)) flattened, index i * |net_x| + j.
  Vector embed(const Eigen::MatrixXd& T) const;
  /// max_{i,j} y*_i(T x_j) (signed); satisfies net_sup <= ||T|| <= 4 net_sup.
  double net_sup(const Eigen::MatrixXd& T) const;
};

/// l in {1,2,3}; net sizes explode beyond that.
OperatorSpaceEmbedding gen_operator_space(int l, std::uint64_t seed);

}  // namespace linfx
