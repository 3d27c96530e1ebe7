#include "ccshaper/spectral.hpp"

#include <cmath>
#include <numbers>

namespace ccs::spectral {

namespace {
constexpr double kPi = std::numbers::pi;
}

Complex subcarrier_spectrum(double v, int k, const SystemGeometry& geom) {
  const double n = static_cast<double>(geom.n);
  const int m = geom.samples_per_symbol();

  // Only the fractional part of (k - v)/N matters: integer full cycles
  // contribute exp(j*2*pi*integer*n) = 1 at every integer sample index.
  const double cycles = (static_cast<double>(k) - v) / n;
  const double r = cycles - std::round(cycles);
  if (std::abs(r) < 1e-14) return Complex(static_cast<double>(m), 0.0);

  const double ratio = std::sin(kPi * r * m) / std::sin(kPi * r);
  const double mid = (n - 1.0 - geom.n_cp) / 2.0;  // sum midpoint, sets the phase
  return std::polar(ratio, 2.0 * kPi * r * mid);
}

ProjectionMatrices build_projection_matrices(const SystemGeometry& geom,
                                             const CarrierAllocation& alloc,
                                             const FrequencyGrid& grid) {
  alloc.check_against(geom);

  // Grid points must sample unoccupied spectrum only.
  for (double v : grid.points()) {
    const double nearest = std::round(v);
    if (std::abs(v - nearest) < 1e-9) {
      const int kv = static_cast<int>(nearest);
      const auto& dc = alloc.data_carriers();
      const auto& cc = alloc.cc_carriers();
      if (std::binary_search(dc.begin(), dc.end(), kv) ||
          std::binary_search(cc.begin(), cc.end(), kv))
        throw GridError("grid: sampling point " + std::to_string(v) +
                        " coincides with occupied carrier " + std::to_string(kv));
    }
  }

  const auto& v = grid.points();
  const auto& dc = alloc.data_carriers();
  const auto& cc = alloc.cc_carriers();

  ProjectionMatrices pm;
  pm.p_dc.resize(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(dc.size()));
  pm.p_cc.resize(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(cc.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < dc.size(); ++j)
      pm.p_dc(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          subcarrier_spectrum(v[i], dc[j], geom);
    for (std::size_t l = 0; l < cc.size(); ++l)
      pm.p_cc(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) =
          subcarrier_spectrum(v[i], cc[l], geom);
  }
  return pm;
}

FrequencyGrid make_sampling_grid(const std::vector<Interval>& regions, double step) {
  if (step <= 0.0) throw GridError("grid: step must be positive");
  if (regions.empty()) throw GridError("grid: at least one region required");

  std::vector<double> points;
  double prev_hi = 0.0;
  bool first = true;
  for (const auto& reg : regions) {
    if (reg.hi < reg.lo)
      throw GridError("grid: region upper bound below lower bound");
    if (!first && reg.lo <= prev_hi)
      throw GridError("grid: regions must be disjoint and ordered");
    prev_hi = reg.hi;
    first = false;

    const double len = reg.hi - reg.lo;
    const double steps_real = len / step;
    const auto count = static_cast<long>(std::llround(steps_real));
    if (std::abs(steps_real - static_cast<double>(count)) > 1e-9 * std::max(1.0, steps_real))
      throw GridError("grid: region length " + std::to_string(len) +
                      " is not an integer multiple of step " + std::to_string(step));
    for (long i = 0; i <= count; ++i) points.push_back(reg.lo + static_cast<double>(i) * step);
  }
  return FrequencyGrid(std::move(points));
}

}  // namespace ccs::spectral
