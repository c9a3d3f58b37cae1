#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qek/atom_register.hpp"
#include "qek/graph.hpp"
#include "qek/pulse.hpp"

namespace qek {

struct MeanFieldResult {
    std::vector<double> times;
    Eigen::MatrixXd occupations;  // one row per time, one column per qubit
};

/// Factorized Bloch dynamics: qubit i precesses around (Omega, 0, -Delta_i)
/// with Delta_i = delta - sum_j U_ij <n_j>. With nn_only the interaction sum
/// runs over the edges of `graph` (whose layout is the register); otherwise
/// over all pairs. Fixed-step RK4 integration.
MeanFieldResult mean_field_evolve(const AtomRegister& reg, const Pulse& pulse,
                                  const std::vector<double>& t_grid, bool nn_only,
                                  const Graph* graph = nullptr, double dt_us = 1e-3);

}  // namespace qek
