#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccs {

using Complex = std::complex<double>;

// Error taxonomy. Library entry points throw on contract violations;
// the CLI maps these to exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AllocationError : Error { using Error::Error; };
struct GridError : Error { using Error::Error; };
struct NumericalError : Error { using Error::Error; };
struct SelectionError : Error { using Error::Error; };
struct ContractError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

/// Transform order and guard-interval lengths of the multicarrier system.
/// n must be a power of two (the FFT-based simulator requires it); the
/// cyclic suffix n_cs only matters for time-domain windowing.
struct SystemGeometry {
  int n;
  int n_cp;
  int n_cs;

  SystemGeometry(int n_, int n_cp_, int n_cs_ = 0) : n(n_), n_cp(n_cp_), n_cs(n_cs_) {
    if (n <= 0 || (n & (n - 1)) != 0)
      throw ValidationError("geometry: n must be a positive power of two, got " + std::to_string(n));
    if (n_cp < 0 || n_cp >= n)
      throw ValidationError("geometry: n_cp must satisfy 0 <= n_cp < n, got " + std::to_string(n_cp));
    if (n_cs < 0 || n_cs >= n)
      throw ValidationError("geometry: n_cs must satisfy 0 <= n_cs < n, got " + std::to_string(n_cs));
  }

  // samples contributing to one symbol's spectrum (prefix + core)
  int samples_per_symbol() const { return n + n_cp; }
  int min_carrier() const { return -n / 2; }
  int max_carrier() const { return n / 2 - 1; }
};

/// Disjoint ordered data-carrier and cancellation-carrier index sets.
class CarrierAllocation {
 public:
  CarrierAllocation(std::vector<int> data, std::vector<int> cc)
      : i_dc_(std::move(data)), i_cc_(std::move(cc)) {
    std::sort(i_dc_.begin(), i_dc_.end());
    std::sort(i_cc_.begin(), i_cc_.end());
    if (i_dc_.empty()) throw AllocationError("allocation: at least one data carrier required");
    if (std::adjacent_find(i_dc_.begin(), i_dc_.end()) != i_dc_.end())
      throw AllocationError("allocation: duplicate data-carrier index");
    if (std::adjacent_find(i_cc_.begin(), i_cc_.end()) != i_cc_.end())
      throw AllocationError("allocation: duplicate cancellation-carrier index");
    std::vector<int> common;
    std::set_intersection(i_dc_.begin(), i_dc_.end(), i_cc_.begin(), i_cc_.end(),
                          std::back_inserter(common));
    if (!common.empty())
      throw AllocationError("allocation: index " + std::to_string(common.front()) +
                            " is both data and cancellation carrier");
  }

  const std::vector<int>& data_carriers() const { return i_dc_; }
  const std::vector<int>& cc_carriers() const { return i_cc_; }
  std::size_t alpha() const { return i_dc_.size(); }
  std::size_t beta() const { return i_cc_.size(); }

  void check_against(const SystemGeometry& geom) const {
    for (int k : i_dc_) check_index(k, geom, "data");
    for (int k : i_cc_) check_index(k, geom, "cancellation");
    if (alpha() + beta() > static_cast<std::size_t>(geom.n))
      throw AllocationError("allocation: more carriers than transform bins");
  }

 private:
  static void check_index(int k, const SystemGeometry& geom, const char* kind) {
    if (k < geom.min_carrier() || k > geom.max_carrier())
      throw AllocationError(std::string("allocation: ") + kind + "-carrier index " +
                            std::to_string(k) + " outside [" + std::to_string(geom.min_carrier()) +
                            ", " + std::to_string(geom.max_carrier()) + "]");
  }

  std::vector<int> i_dc_;
  std::vector<int> i_cc_;
};

/// Closed interval of normalized frequency (units of the subcarrier spacing).
struct Interval {
  double lo;
  double hi;
};

/// Ordered spectrum sampling points covering the out-of-band regions.
class FrequencyGrid {
 public:
  explicit FrequencyGrid(std::vector<double> points) : v_(std::move(points)) {
    if (v_.empty()) throw GridError("grid: at least one sampling point required");
    for (std::size_t i = 1; i < v_.size(); ++i)
      if (!(v_[i] > v_[i - 1]))
        throw GridError("grid: sampling points must be strictly increasing");
  }

  const std::vector<double>& points() const { return v_; }
  std::size_t size() const { return v_.size(); }

 private:
  std::vector<double> v_;
};

// Shared dB normalization: the per-subcarrier in-band peak power of the
// analytic spectrum, (n + n_cp)^2. Design predictions and waveform
// measurements are both reported against this reference.
inline double oob_reference_power(const SystemGeometry& geom) {
  const double m = static_cast<double>(geom.samples_per_symbol());
  return m * m;
}

inline double oob_power_db(double p_oob, const SystemGeometry& geom) {
  return 10.0 * std::log10(p_oob / oob_reference_power(geom));
}

}  // namespace ccs
