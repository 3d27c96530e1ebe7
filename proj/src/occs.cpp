#include "ccshaper/occs.hpp"

#include <algorithm>
#include <cmath>

#include "ccshaper/spectral.hpp"

namespace ccs::occs {

Eigen::VectorXd column_oob_power(const Eigen::MatrixXcd& g) {
  return g.colwise().squaredNorm().transpose();
}

int select_next_cc(const Eigen::MatrixXcd& g, const std::vector<int>& i_dc, Selector selector) {
  if (i_dc.empty()) throw SelectionError("select_next_cc: no data carriers left");
  if (static_cast<std::size_t>(g.cols()) != i_dc.size())
    throw ContractError("select_next_cc: column count does not match data-carrier count");

  const Eigen::VectorXd power = column_oob_power(g);
  Eigen::Index best = 0;
  for (Eigen::Index j = 1; j < power.size(); ++j) {
    // strict comparison keeps the smallest subcarrier index on ties
    // (columns follow the ascending carrier order)
    const bool better = selector == Selector::max_column_power ? power(j) > power(best)
                                                               : power(j) < power(best);
    if (better) best = j;
  }
  return i_dc[static_cast<std::size_t>(best)];
}

namespace {

solver::ShapingSolution baseline_solution(const Eigen::MatrixXcd& p_dc, std::size_t gamma) {
  solver::ShapingSolution sol;
  sol.w = Eigen::MatrixXcd::Zero(0, p_dc.cols());
  sol.a_tail = p_dc.squaredNorm();
  sol.p_oob = sol.a_tail / static_cast<double>(gamma);
  sol.p_oob_baseline = sol.p_oob;
  return sol;
}

}  // namespace

SelectionTrace run_occs(const SystemGeometry& geom, const std::vector<int>& occupied,
                        const FrequencyGrid& grid, const SelectionConfig& config) {
  if (occupied.empty()) throw SelectionError("run_occs: occupied carrier set is empty");
  if (!config.stop_p_oob_db && !config.max_cc)
    throw ValidationError("run_occs: set stop_p_oob_db and/or max_cc");
  if (config.max_cc && *config.max_cc >= occupied.size())
    throw ValidationError("run_occs: max_cc must leave at least one data carrier");

  std::vector<int> i_dc = occupied;
  std::sort(i_dc.begin(), i_dc.end());
  std::vector<int> i_cc;

  CarrierAllocation alloc(i_dc, i_cc);
  auto pm = spectral::build_projection_matrices(geom, alloc, grid);
  const std::size_t gamma = grid.size();

  solver::ShapingSolution sol = baseline_solution(pm.p_dc, gamma);
  Eigen::MatrixXcd g = pm.p_dc;
  double current_db = oob_power_db(sol.p_oob, geom);

  SelectionTrace trace{current_db, {}, alloc, sol, false};

  const auto cap_for = [&config](std::size_t beta) {
    return config.power_cap ? config.power_cap(beta) : static_cast<double>(beta);
  };

  while (true) {
    if (config.stop_p_oob_db && current_db <= *config.stop_p_oob_db) break;
    if (config.max_cc && i_cc.size() >= *config.max_cc) {
      trace.unreached = config.stop_p_oob_db && current_db > *config.stop_p_oob_db;
      break;
    }
    if (i_dc.size() <= 1) {
      trace.unreached = true;
      break;
    }

    const int m = select_next_cc(g, i_dc, config.selector);
    i_dc.erase(std::find(i_dc.begin(), i_dc.end(), m));
    i_cc.insert(std::upper_bound(i_cc.begin(), i_cc.end(), m), m);

    alloc = CarrierAllocation(i_dc, i_cc);
    pm = spectral::build_projection_matrices(geom, alloc, grid);
    sol = solver::design(pm.p_cc, pm.p_dc, {cap_for(i_cc.size())});
    g = solver::residual_projection(pm.p_cc, sol.w, pm.p_dc);
    current_db = oob_power_db(sol.p_oob, geom);

    trace.steps.push_back({m, sol.theta, sol.mean_cc_power, current_db});
  }

  trace.final_alloc = alloc;
  trace.final_solution = std::move(sol);
  return trace;
}

CarrierAllocation standard_edge_selection(const std::vector<int>& occupied, std::size_t beta,
                                          int min_gap) {
  if (beta > occupied.size())
    throw AllocationError("standard_edge_selection: beta exceeds occupied carrier count");

  std::vector<int> sorted = occupied;
  std::sort(sorted.begin(), sorted.end());

  // blocks of carriers; gaps narrower than min_gap stay inside one block
  std::vector<std::vector<int>> blocks;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] - sorted[i - 1] > min_gap) blocks.emplace_back();
    blocks.back().push_back(sorted[i]);
  }

  struct Edges {
    std::size_t left;
    std::size_t right;
  };
  std::vector<Edges> cursor;
  cursor.reserve(blocks.size());
  for (const auto& b : blocks) cursor.push_back({0, b.size() - 1});

  std::vector<int> cc;
  while (cc.size() < beta) {
    bool progressed = false;
    for (std::size_t bi = 0; bi < blocks.size() && cc.size() < beta; ++bi) {
      auto& cur = cursor[bi];
      if (cur.left <= cur.right) {
        cc.push_back(blocks[bi][cur.left]);
        progressed = true;
        if (cur.left == cur.right) {  // block exhausted
          cur.left = 1;
          cur.right = 0;
          continue;
        }
        ++cur.left;
      }
      if (cc.size() < beta && cur.left <= cur.right) {
        cc.push_back(blocks[bi][cur.right]);
        progressed = true;
        if (cur.right == 0 || cur.left == cur.right) {
          cur.left = 1;
          cur.right = 0;
        } else {
          --cur.right;
        }
      }
    }
    if (!progressed) break;
  }

  std::sort(cc.begin(), cc.end());
  std::vector<int> dc;
  std::set_difference(sorted.begin(), sorted.end(), cc.begin(), cc.end(),
                      std::back_inserter(dc));
  return CarrierAllocation(std::move(dc), std::move(cc));
}

}  // namespace ccs::occs
