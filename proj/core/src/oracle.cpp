#include "linfx/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "linfx/rng.hpp"

namespace linfx {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense two-phase simplex: maximize c.x subject to A x <= b, x >= 0.
// Classic tableau formulation with Bland-style tie breaking; the LPs built
// here have <= 9 variables, so pivot counts stay tiny.
class Simplex {
 public:
  Simplex(std::vector<std::vector<double>> A, std::vector<double> b, std::vector<double> c)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        nonbasic_(n_ + 1),
        basic_(m_),
        tab_(m_ + 2, std::vector<double>(n_ + 2, 0.0)) {
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j) tab_[i][j] = A[i][j];
    for (int i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;
      tab_[i][n_] = -1.0;
      tab_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      tab_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    tab_[m_ + 1][n_] = 1.0;
  }

  // Returns the optimum (+inf if unbounded, -inf if infeasible).
  double solve(std::vector<double>& x) {
    int r = 0;
    for (int i = 1; i < m_; ++i)
      if (tab_[i][n_ + 1] < tab_[r][n_ + 1]) r = i;
    if (tab_[r][n_ + 1] < -kEps) {
      pivot(r, n_);
      if (!run(2) || tab_[m_ + 1][n_ + 1] < -kEps) return -kInf;
      for (int i = 0; i < m_; ++i)
        if (basic_[i] == -1) {
          int s = 0;
          for (int j = 1; j <= n_; ++j)
            if (better(i, j, s)) s = j;
          pivot(i, s);
        }
    }
    const bool ok = run(1);
    x.assign(n_, 0.0);
    for (int i = 0; i < m_; ++i)
      if (basic_[i] < n_) x[basic_[i]] = tab_[i][n_ + 1];
    return ok ? tab_[m_][n_ + 1] : kInf;
  }

 private:
  static constexpr double kEps = 1e-11;

  bool better(int row, int j, int s) const {
    return std::pair(tab_[row][j], nonbasic_[j]) < std::pair(tab_[row][s], nonbasic_[s]);
  }

  void pivot(int r, int s) {
    auto& prow = tab_[r];
    const double inv = 1.0 / prow[s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(tab_[i][s]) <= kEps) continue;
      auto& row = tab_[i];
      const double f = row[s] * inv;
      for (int j = 0; j < n_ + 2; ++j) row[j] -= prow[j] * f;
      row[s] = prow[s] * f;
    }
    for (int j = 0; j < n_ + 2; ++j)
      if (j != s) prow[j] *= inv;
    for (int i = 0; i < m_ + 2; ++i)
      if (i != r) tab_[i][s] *= -inv;
    prow[s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  bool run(int phase) {
    const int objective = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (s == -1 || better(objective, j, s)) s = j;
      }
      if (tab_[objective][s] >= -kEps) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (tab_[i][s] <= kEps) continue;
        if (r == -1 ||
            std::pair(tab_[i][n_ + 1] / tab_[i][s], basic_[i]) <
                std::pair(tab_[r][n_ + 1] / tab_[r][s], basic_[r]))
          r = i;
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_, n_;
  std::vector<int> nonbasic_, basic_;
  std::vector<std::vector<double>> tab_;
};

// Minimum of ||sign * x_r0 + sum_{s != r0} alpha_s x_s||_inf over
// alpha in [-1,1]^(m-1), as an LP in beta = alpha + 1 in [0,2] and t >= 0:
// minimize t subject to |d(j) + sum beta_s x_s(j)| <= t.
double face_minimum(const Matrix& x, int r0, double sign) {
  const int m = static_cast<int>(x.rows());
  const int N = static_cast<int>(x.cols());

  std::vector<int> others;
  for (int s = 0; s < m; ++s)
    if (s != r0) others.push_back(s);
  const int k = static_cast<int>(others.size());

  Vector d = sign * x.row(r0).transpose();
  for (int s : others) d -= x.row(s).transpose();

  if (k == 0) return d.cwiseAbs().maxCoeff();

  const int vars = k + 1;  // beta_1..beta_k, t
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  A.reserve(2 * N + k);
  b.reserve(2 * N + k);
  for (int j = 0; j < N; ++j) {
    std::vector<double> pos(vars, 0.0), neg(vars, 0.0);
    for (int u = 0; u < k; ++u) {
      pos[u] = x(others[u], j);
      neg[u] = -x(others[u], j);
    }
    pos[k] = -1.0;
    neg[k] = -1.0;
    A.push_back(std::move(pos));
    b.push_back(-d[j]);
    A.push_back(std::move(neg));
    b.push_back(d[j]);
  }
  for (int u = 0; u < k; ++u) {
    std::vector<double> cap(vars, 0.0);
    cap[u] = 1.0;
    A.push_back(std::move(cap));
    b.push_back(2.0);
  }
  std::vector<double> c(vars, 0.0);
  c[k] = -1.0;  // maximize -t

  std::vector<double> sol;
  const double value = Simplex(std::move(A), std::move(b), std::move(c)).solve(sol);
  if (!std::isfinite(value))
    throw Error("oracle", "lp-failed", {{"face", r0}, {"sign", sign}});
  return -value;
}

double log_choose(int n, int k) { return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0); }

}  // namespace

ExactEquivalence exact_equivalence(const Matrix& x) {
  const int m = static_cast<int>(x.rows());
  const int N = static_cast<int>(x.cols());
  if (m < 1 || m > 8)
    throw Error("oracle", "size-refusal", {{"m", m}, {"max", 8}});
  if (N > 100000)
    throw Error("oracle", "size-refusal", {{"N", N}, {"max", 100000}});

  ExactEquivalence out;
  out.U_exact = x.cwiseAbs().colwise().sum().maxCoeff();
  out.L_exact = kInf;
  for (int r0 = 0; r0 < m; ++r0)
    for (double sign : {1.0, -1.0})
      out.L_exact = std::min(out.L_exact, face_minimum(x, r0, sign));
  return out;
}

double binomial_moment(int n, double delta, double q) {
  if (n < 1 || n > 500)
    throw Error("oracle", "size-refusal", {{"n", n}, {"max", 500}});
  if (q < 1.0 || q > 50.0)
    throw Error("oracle", "size-refusal", {{"q", q}, {"max", 50}});
  if (delta < 0.0 || delta > 1.0)
    throw Error("oracle", "precondition", {{"delta", delta}});

  if (delta == 0.0) return 0.0;
  if (delta == 1.0) return static_cast<double>(n);

  const double ld = std::log(delta), l1d = std::log1p(-delta);
  // log of sum_k C(n,k) delta^k (1-delta)^(n-k) k^q, via log-sum-exp with
  // compensated accumulation.  The k = 0 term vanishes (q >= 1).
  double max_term = -kInf;
  std::vector<double> terms(n);
  for (int k = 1; k <= n; ++k) {
    const double t = log_choose(n, k) + k * ld + (n - k) * l1d + q * std::log(k);
    terms[k - 1] = t;
    max_term = std::max(max_term, t);
  }
  double sum = 0.0, comp = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double y = std::exp(terms[k - 1] - max_term) - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return std::exp((max_term + std::log(sum)) / q);
}

MomentRatioGrid lemma1_ratio_grid(const std::vector<int>& n_list,
                                  const std::vector<double>& delta_list,
                                  const std::vector<double>& q_list) {
  MomentRatioGrid grid;
  grid.c_hat = -kInf;
  for (int n : n_list)
    for (double delta : delta_list)
      for (double q : q_list) {
        MomentRatioCell cell;
        cell.n = n;
        cell.delta = delta;
        cell.q = q;
        cell.moment = binomial_moment(n, delta, q);
        cell.ratio = cell.moment / (delta * n + q);
        if (cell.ratio > grid.c_hat) {
          grid.c_hat = cell.ratio;
          grid.best = cell;
        }
        grid.cells.push_back(cell);
      }
  return grid;
}

double selector_tail_rate(const FrameMatrix& frame, int trials, std::uint64_t seed) {
  if (!frame.validated)
    throw Error("oracle", "unvalidated-frame", {});
  const int n = frame.n(), N = frame.N();
  const double logN = std::log(static_cast<double>(N));
  const double density = std::min(1.0, std::sqrt(logN / n));
  const double bound = 3.0 * std::sqrt(logN);

  Philox rng(seed, rng_stream::tail_trials);
  Eigen::RowVectorXd colsum(N);
  long long violations = 0;
  for (int t = 0; t < trials; ++t) {
    colsum.setZero();
    for (int i = 0; i < n; ++i)
      if (rng.bernoulli(density)) colsum += frame.a.row(i);
    violations += (colsum.array() > bound + kCheckTol).count();
  }
  return static_cast<double>(violations) /
         (static_cast<double>(trials) * static_cast<double>(N));
}

double operator_norm_exact(const Eigen::MatrixXd& T) {
  const int l = static_cast<int>(T.rows());
  if (l != T.cols() || l < 1 || l > 3)
    throw Error("oracle", "size-refusal", {{"rows", T.rows()}, {"cols", T.cols()}});

  if (l == 1) return std::abs(T(0, 0));

  const Eigen::MatrixXd S = T.transpose() * T;
  if (l == 2) {
    const double a = S(0, 0), b = S(0, 1), c = S(1, 1);
    const double mid = 0.5 * (a + c);
    const double rad = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    return std::sqrt(std::max(0.0, mid + rad));
  }

  // Symmetric 3x3: trigonometric solution of the characteristic cubic.
  const double q = S.trace() / 3.0;
  const double p1 = S(0, 1) * S(0, 1) + S(0, 2) * S(0, 2) + S(1, 2) * S(1, 2);
  double p2 = 2.0 * p1;
  for (int i = 0; i < 3; ++i) p2 += (S(i, i) - q) * (S(i, i) - q);
  if (p2 <= 1e-300) return std::sqrt(std::max(0.0, q));
  const double p = std::sqrt(p2 / 6.0);
  Eigen::Matrix3d B = (S - q * Eigen::Matrix3d::Identity()) / p;
  const double r = std::clamp(B.determinant() / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  const double lam = q + 2.0 * p * std::cos(phi);
  return std::sqrt(std::max(0.0, lam));
}

}  // namespace linfx
