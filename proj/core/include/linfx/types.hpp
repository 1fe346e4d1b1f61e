#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace linfx {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using ordered_json = nlohmann::ordered_json;

// Comparison slack on hypothesis checks; generated instances sit exactly on
// constraint boundaries.
inline constexpr double kCheckTol = 1e-9;

// Exit codes used by the CLI and carried by every Error.
inline constexpr int kExitValidation = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitCertificate = 3;

/// Failure with a machine-readable locus: which stage, a short reason tag,
/// and a witness object (offending index, value, bound, ...).
class Error : public std::runtime_error {
 public:
  Error(std::string stage, std::string reason, ordered_json witness,
        int exit_code = kExitValidation)
      : std::runtime_error(stage + ": " + reason),
        stage_(std::move(stage)),
        reason_(std::move(reason)),
        witness_(std::move(witness)),
        exit_code_(exit_code) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::string& reason() const noexcept { return reason_; }
  const ordered_json& witness() const noexcept { return witness_; }
  int exit_code() const noexcept { return exit_code_; }

  ordered_json to_json() const {
    return ordered_json{{"stage", stage_}, {"reason", reason_}, {"witness", witness_}};
  }

 private:
  std::string stage_;
  std::string reason_;
  ordered_json witness_;
  int exit_code_;
};

/// Nonnegative n x N matrix [a_i(j)] with the per-row max lower bound gamma.
/// Downstream stages refuse frames whose `validated` flag has not been set by
/// validate_prop1.
struct FrameMatrix {
  Matrix a;
  double gamma = 0.0;
  bool validated = false;

  FrameMatrix() = default;
  FrameMatrix(Matrix entries, double g);

  int n() const { return static_cast<int>(a.rows()); }
  int N() const { return static_cast<int>(a.cols()); }
};

/// Signed vectors a_i whose rows span a subspace of l_inf^N, plus the row
/// subset sigma' on which the two-summing conditions hold.  `gamma` is the
/// sup-norm threshold backing sigma' (1/2 on the classical route, the
/// gamma_cut on the preprocessing route).
struct SignedBasisMatrix {
  Matrix a;
  std::vector<int> sigma_prime;
  double gamma = 0.0;
  bool validated = false;

  SignedBasisMatrix() = default;
  explicit SignedBasisMatrix(Matrix entries, std::vector<int> sigma = {}, double g = 0.0);

  int n() const { return static_cast<int>(a.rows()); }
  int N() const { return static_cast<int>(a.cols()); }
};

/// Parameters of a single extraction run.  delta, epsilon and p are derived
/// from (eta, N) in make(); all logarithms are natural.
struct ExtractParams {
  double eta = 0.1;
  double gamma = 0.5;
  double C = 4.0;
  double delta = 0.0;    // selection density min(1, 2 eta / sqrt(log N))
  double epsilon = 0.0;  // small/large split threshold eta / log N
  double p = 0.0;        // moment order log N (reporting only)
  std::uint64_t seed = 0;
  int budget = 64;

  static ExtractParams make(double eta, double gamma, int N, double C = 4.0,
                            std::uint64_t seed = 0, int budget = 64);
};

/// One greedy block: column label, absorbed row set, weight s = sum of the
/// column-j entries over the rows.
struct Block {
  int j = -1;
  std::vector<int> rows;
  double s = 0.0;
};

/// Output of the extractor: every greedy block (s nonincreasing), the chosen
/// (1+eta)-flat interval into them, and provenance for the run report.
struct BlockSelection {
  std::vector<Block> blocks;
  int interval_begin = 0;
  int interval_end = 0;
  std::vector<int> survivors;  // sigma rows never absorbed into a block
  std::vector<int> sigma;      // the delta-selected rows the greedy ran on
  int select_attempts = 0;

  int m() const { return interval_end - interval_begin; }
  std::vector<Block> selected() const {
    return {blocks.begin() + interval_begin, blocks.begin() + interval_end};
  }
};

/// Certified equivalence constants for an assembled basis.  U dominates every
/// column absolute sum; L_cert is the per-peak signed margin; together they
/// certify that the basis is (U/L_cert)-equivalent to the unit-vector basis
/// of l_inf^m.
struct EquivalenceReport {
  int m = 0;
  double scale = 1.0;
  double U = 0.0;
  double L_cert = 0.0;
  std::optional<double> L_exact;
  double distance = 0.0;
  double K_measured = 0.0;
};

struct HypothesisCheck {
  std::string name;
  bool pass = false;
  int witness = -1;    // worst column (or row)
  double value = 0.0;  // extremal value there
  double bound = 0.0;
};

struct ValidationReport {
  std::vector<HypothesisCheck> checks;
  bool pass = false;

  ordered_json to_json() const;
};

}  // namespace linfx
