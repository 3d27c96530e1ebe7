#pragma once

#include <Eigen/Dense>

#include <cstddef>

#include "ccshaper/types.hpp"

namespace ccs::solver {

/// Economy SVD of P_CC together with the pieces of
/// A = U^H * P_DC * P_DC^H * U needed downstream: the first delta diagonal
/// entries and the sum of the remaining gamma - delta ones (recovered from
/// the Frobenius norm of P_DC, so the full gamma x gamma U is never formed).
struct Decomposition {
  Eigen::MatrixXcd u;          // gamma x delta, orthonormal columns
  Eigen::MatrixXcd v;          // beta x delta, orthonormal columns
  Eigen::VectorXd s;           // delta singular values, descending
  Eigen::MatrixXcd data_proj;  // U^H * P_DC, delta x alpha
  Eigen::VectorXd a_diag;      // A_ii for i = 1..delta
  double a_tail = 0.0;         // sum of A_ii for i = delta+1..gamma
  std::size_t gamma = 0;

  std::size_t delta() const { return static_cast<std::size_t>(s.size()); }
};

Decomposition decompose(const Eigen::MatrixXcd& p_cc, const Eigen::MatrixXcd& p_dc);

/// Mean cancellation-carrier power cap (unit-power data symbols make the
/// natural cap equal to the number of CCs).
struct PowerBudget {
  double cap;
};

struct ThetaSolve {
  double theta = 0.0;
  double predicted_cc_power = 0.0;  // value of the power curve at theta
  int iterations = 0;
  bool no_cancellation = false;  // all singular values zero: nothing to shape
};

/// Finds the KKT multiplier for the mean-power constraint: theta = 0 when
/// the unconstrained solution already fits the budget, otherwise the unique
/// positive root of
///   sum_i A_ii s_i^2 / (theta + s_i^2)^2 = cap,
/// located by safeguarded Newton (bisection fallback) on a bracket whose
/// upper end sqrt(sum_i A_ii s_i^2 / cap) is guaranteed feasible.
ThetaSolve solve_power_multiplier(const Eigen::VectorXd& a_diag, const Eigen::VectorXd& s,
                                  const PowerBudget& budget);

/// CC-calculation matrix W = -V * diag(s_i / (theta + s_i^2)) * U^H * P_DC.
/// At theta = 0, singular values below the rank cutoff are dropped
/// (pseudo-inverse convention).
Eigen::MatrixXcd shaping_matrix(const Decomposition& dec, double theta);

/// Mean CC power tr(W^H W) for unit-variance data symbols.
double mean_cc_power(const Eigen::MatrixXcd& w);

struct OobPower {
  double p_oob;      // per-grid-point mean OOB power with CCs active
  double baseline;   // same system with no CCs: ||P_DC||_F^2 / gamma
};

/// Closed-form mean OOB power,
///   (1/gamma) * (sum_{i>delta} A_ii + sum_{i<=delta} A_ii (theta/(theta+s_i^2))^2).
OobPower mean_oob_power(const Eigen::VectorXd& a_diag, const Eigen::VectorXd& s, double theta,
                        double a_tail, std::size_t gamma);

/// Residual spectrum map G = P_CC * W + P_DC (data symbols -> grid samples
/// after cancellation).
Eigen::MatrixXcd residual_projection(const Eigen::MatrixXcd& p_cc, const Eigen::MatrixXcd& w,
                                     const Eigen::MatrixXcd& p_dc);

/// Full design output for one allocation.
struct ShapingSolution {
  Eigen::MatrixXcd w;  // beta x alpha
  double theta = 0.0;
  Eigen::VectorXd s;
  Eigen::VectorXd a_diag;
  double a_tail = 0.0;
  double mean_cc_power = 0.0;
  double p_oob = 0.0;
  double p_oob_baseline = 0.0;
  int theta_iterations = 0;
  bool no_cancellation = false;
};

ShapingSolution design(const Eigen::MatrixXcd& p_cc, const Eigen::MatrixXcd& p_dc,
                       const PowerBudget& budget);

// Singular values at or below this are treated as zero rank.
double rank_cutoff(const Eigen::VectorXd& s);

}  // namespace ccs::solver
