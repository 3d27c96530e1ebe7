#pragma once

#include <Eigen/Dense>

#include "ccshaper/types.hpp"

namespace ccs::spectral {

/// Analytic spectrum of subcarrier k at normalized frequency v:
/// the sum of exp(j*2*pi*n*(k-v)/N) over the n_cp prefix samples and the
/// N core samples. Evaluated in closed form (Dirichlet kernel); when k-v
/// is an exact multiple of N every summand is 1 and the value is
/// n + n_cp exactly.
Complex subcarrier_spectrum(double v, int k, const SystemGeometry& geom);

/// Per-grid-row, per-carrier-column spectrum samples of the data and
/// cancellation carrier sets.
struct ProjectionMatrices {
  Eigen::MatrixXcd p_dc;  // gamma x alpha
  Eigen::MatrixXcd p_cc;  // gamma x beta
};

ProjectionMatrices build_projection_matrices(const SystemGeometry& geom,
                                             const CarrierAllocation& alloc,
                                             const FrequencyGrid& grid);

/// Uniform sampling of a list of closed, ordered, disjoint intervals.
/// Both endpoints of every interval are included; each interval length
/// must be an integer multiple of step.
FrequencyGrid make_sampling_grid(const std::vector<Interval>& regions, double step);

}  // namespace ccs::spectral
