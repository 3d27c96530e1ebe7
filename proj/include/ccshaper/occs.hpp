#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ccshaper/solver.hpp"
#include "ccshaper/types.hpp"

namespace ccs::occs {

enum class Selector {
  max_column_power,  // convert the DC contributing most OOB power (default)
  min_column_power,
};

struct SelectionConfig {
  std::optional<double> stop_p_oob_db;  // required OOB level, shared dB normalization
  std::optional<std::size_t> max_cc;    // CC budget
  Selector selector = Selector::max_column_power;
  // cap as a function of the current CC count; defaults to cap = beta
  std::function<double(std::size_t)> power_cap;
};

struct SelectionStep {
  int chosen_index;
  double theta;
  double mean_cc_power;
  double p_oob_db;
};

struct SelectionTrace {
  double baseline_p_oob_db;  // beta = 0, before any selection
  std::vector<SelectionStep> steps;
  CarrierAllocation final_alloc;
  solver::ShapingSolution final_solution;
  bool unreached = false;  // stop level set but not met before running out of DCs
};

/// Per-data-carrier mean OOB power: squared column norms of G.
Eigen::VectorXd column_oob_power(const Eigen::MatrixXcd& g);

/// Chooses the data carrier whose residual column power is extremal under
/// the selector; ties go to the smallest subcarrier index.
int select_next_cc(const Eigen::MatrixXcd& g, const std::vector<int>& i_dc, Selector selector);

/// Iterative CC placement: starting from all-data, repeatedly convert the
/// selected DC into a CC and redesign W until the stop condition is met.
SelectionTrace run_occs(const SystemGeometry& geom, const std::vector<int>& occupied,
                        const FrequencyGrid& grid, const SelectionConfig& config);

/// Baseline placement at the band edges: walks inward from the outer
/// carriers of each occupied block, one edge per block per round.
/// Unoccupied gaps narrower than min_gap carriers do not split a block
/// (an isolated null carrier is not a band edge).
CarrierAllocation standard_edge_selection(const std::vector<int>& occupied, std::size_t beta,
                                          int min_gap = 2);

}  // namespace ccs::occs
