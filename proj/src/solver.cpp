#include "ccshaper/solver.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>

namespace ccs::solver {

double rank_cutoff(const Eigen::VectorXd& s) {
  if (s.size() == 0) return 0.0;
  return s(0) * 1e-12;
}

Decomposition decompose(const Eigen::MatrixXcd& p_cc, const Eigen::MatrixXcd& p_dc) {
  if (p_cc.rows() < 1 || p_cc.cols() < 1)
    throw ContractError("decompose: P_CC must have at least one row and column");
  if (p_dc.rows() != p_cc.rows())
    throw ContractError("decompose: P_DC and P_CC row counts differ");

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(p_cc, Eigen::ComputeThinU | Eigen::ComputeThinV);

  Decomposition dec;
  dec.u = svd.matrixU();
  dec.v = svd.matrixV();
  dec.s = svd.singularValues();
  if (!dec.s.allFinite()) {
    const double smax = dec.s.size() ? dec.s(0) : 0.0;
    const double smin = dec.s.size() ? dec.s(dec.s.size() - 1) : 0.0;
    throw NumericalError("decompose: SVD produced non-finite singular values (s_max=" +
                         std::to_string(smax) + ", s_min=" + std::to_string(smin) + ")");
  }

  dec.data_proj = dec.u.adjoint() * p_dc;
  dec.a_diag = dec.data_proj.rowwise().squaredNorm();
  // trace of A is invariant under the unitary change of basis, so the
  // unseen tail is the Frobenius-norm deficit
  dec.a_tail = std::max(0.0, p_dc.squaredNorm() - dec.a_diag.sum());
  dec.gamma = static_cast<std::size_t>(p_cc.rows());
  return dec;
}

namespace {

// Power curve f(theta) = sum_i A_ii s_i^2/(theta+s_i^2)^2 and its derivative.
// Rank-deficient modes are excluded; they carry no CC power.
void eval_power_curve(const Eigen::VectorXd& a_diag, const Eigen::VectorXd& s, double cutoff,
                      double theta, double& f, double& df) {
  f = 0.0;
  df = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double si = s(i);
    if (si <= cutoff) continue;
    const double denom = theta + si * si;
    const double t = si / denom;
    f += a_diag(i) * t * t;
    df += -2.0 * a_diag(i) * si * si / (denom * denom * denom);
  }
}

}  // namespace

ThetaSolve solve_power_multiplier(const Eigen::VectorXd& a_diag, const Eigen::VectorXd& s,
                                  const PowerBudget& budget) {
  if (budget.cap <= 0.0) throw ContractError("power budget cap must be positive");
  if (a_diag.size() != s.size())
    throw ContractError("solve_power_multiplier: a_diag and s sizes differ");

  ThetaSolve out;
  const double cutoff = rank_cutoff(s);
  if (s.size() == 0 || s(0) <= 0.0) {
    out.no_cancellation = true;
    return out;
  }

  double f0, df0;
  eval_power_curve(a_diag, s, cutoff, 0.0, f0, df0);
  if (f0 <= budget.cap) {
    out.predicted_cc_power = f0;
    return out;  // budget slack, constraint inactive
  }

  // f(theta_hi) <= sum A s^2 / theta_hi^2 = cap, so the root is bracketed.
  double weighted = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) weighted += a_diag(i) * s(i) * s(i);
  double lo = 0.0;                             // f(lo) > cap
  double hi = std::sqrt(weighted / budget.cap);  // f(hi) <= cap
  const double tol = 1e-9 * budget.cap;
  const int max_iter = 100;

  double x = 0.5 * hi;
  double f = 0.0, df = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    out.iterations = it + 1;
    eval_power_curve(a_diag, s, cutoff, x, f, df);
    if (std::abs(f - budget.cap) <= tol) break;
    if (f > budget.cap)
      lo = x;
    else
      hi = x;
    const double step = (f - budget.cap) / df;  // df < 0 on the bracket
    double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= std::numeric_limits<double>::epsilon() * hi) {
      x = next;
      eval_power_curve(a_diag, s, cutoff, x, f, df);
      break;
    }
    x = next;
  }
  out.theta = x;
  out.predicted_cc_power = f;
  return out;
}

Eigen::MatrixXcd shaping_matrix(const Decomposition& dec, double theta) {
  if (theta < 0.0) throw ContractError("shaping_matrix: theta must be non-negative");
  const double cutoff = rank_cutoff(dec.s);
  Eigen::VectorXd coef(dec.s.size());
  for (Eigen::Index i = 0; i < dec.s.size(); ++i) {
    const double si = dec.s(i);
    coef(i) = (si > cutoff) ? si / (theta + si * si) : 0.0;
  }
  return -(dec.v * coef.asDiagonal() * dec.data_proj);
}

double mean_cc_power(const Eigen::MatrixXcd& w) { return w.squaredNorm(); }

OobPower mean_oob_power(const Eigen::VectorXd& a_diag, const Eigen::VectorXd& s, double theta,
                        double a_tail, std::size_t gamma) {
  if (gamma == 0) throw ContractError("mean_oob_power: gamma must be positive");
  if (a_diag.size() != s.size())
    throw ContractError("mean_oob_power: a_diag and s sizes differ");

  const double cutoff = rank_cutoff(s);
  double head = 0.0;
  double total = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double si = s(i);
    // residual fraction per singular mode; a dropped mode stays uncancelled
    const double resid = (si > cutoff) ? theta / (theta + si * si) : 1.0;
    head += a_diag(i) * resid * resid;
    total += a_diag(i);
  }
  OobPower out;
  out.p_oob = (a_tail + head) / static_cast<double>(gamma);
  out.baseline = (a_tail + total) / static_cast<double>(gamma);
  return out;
}

Eigen::MatrixXcd residual_projection(const Eigen::MatrixXcd& p_cc, const Eigen::MatrixXcd& w,
                                     const Eigen::MatrixXcd& p_dc) {
  if (p_cc.cols() != w.rows() || w.cols() != p_dc.cols() || p_cc.rows() != p_dc.rows())
    throw ContractError("residual_projection: non-conformable shapes");
  if (w.rows() == 0) return p_dc;
  return p_cc * w + p_dc;
}

ShapingSolution design(const Eigen::MatrixXcd& p_cc, const Eigen::MatrixXcd& p_dc,
                       const PowerBudget& budget) {
  Decomposition dec = decompose(p_cc, p_dc);
  ThetaSolve ts = solve_power_multiplier(dec.a_diag, dec.s, budget);

  ShapingSolution sol;
  sol.w = shaping_matrix(dec, ts.theta);
  sol.theta = ts.theta;
  sol.s = dec.s;
  sol.a_diag = dec.a_diag;
  sol.a_tail = dec.a_tail;
  sol.mean_cc_power = mean_cc_power(sol.w);
  const OobPower oob = mean_oob_power(dec.a_diag, dec.s, ts.theta, dec.a_tail, dec.gamma);
  sol.p_oob = oob.p_oob;
  sol.p_oob_baseline = oob.baseline;
  sol.theta_iterations = ts.iterations;
  sol.no_cancellation = ts.no_cancellation;
  return sol;
}

}  // namespace ccs::solver
