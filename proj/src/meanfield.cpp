#include "qek/meanfield.hpp"

#include <cmath>

namespace qek {

namespace {

// Pairwise angular interaction strengths, restricted to graph edges when requested.
Eigen::MatrixXd coupling_matrix(const AtomRegister& reg, bool nn_only, const Graph* graph) {
    const int n = reg.qubit_count();
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (nn_only && !(graph && graph->has_edge(i, j))) continue;
            const double v = kTwoPi * interaction_strength(reg.distance(i, j), reg.c6_over_h);
            u(i, j) = v;
            u(j, i) = v;
        }
    }
    return u;
}

}  // namespace

MeanFieldResult mean_field_evolve(const AtomRegister& reg, const Pulse& pulse,
                                  const std::vector<double>& t_grid, bool nn_only, const Graph* graph,
                                  double dt_us) {
    pulse.validate();
    reg.validate();
    if (nn_only && graph == nullptr) throw DomainError("nn_only mean-field dynamics needs the graph");
    if (nn_only && graph->node_count() != reg.qubit_count())
        throw IntegrityError("graph size does not match the register");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()) || (!t_grid.empty() && t_grid.front() < 0.0))
        throw DomainError("time grid must be sorted and nonnegative");
    if (!(dt_us > 0.0)) throw DomainError("dt must be > 0");

    const int n = reg.qubit_count();
    const double omega = pulse.rabi_angular();
    const double delta = pulse.detuning_angular();
    const Eigen::MatrixXd u = coupling_matrix(reg, nn_only, graph);

    // State: 3 Bloch components per qubit; |0> is (0, 0, -1).
    Eigen::MatrixXd s(n, 3);
    for (int i = 0; i < n; ++i) s.row(i) << 0.0, 0.0, -1.0;

    auto derivative = [&](const Eigen::MatrixXd& state) {
        Eigen::VectorXd occ = 0.5 * (state.col(2).array() + 1.0).matrix();
        Eigen::VectorXd shift = u * occ;
        Eigen::MatrixXd d(n, 3);
        for (int i = 0; i < n; ++i) {
            const double bz = -(delta - shift[i]);
            // (omega, 0, bz) x s_i
            d(i, 0) = -bz * state(i, 1);
            d(i, 1) = bz * state(i, 0) - omega * state(i, 2);
            d(i, 2) = omega * state(i, 1);
        }
        return d;
    };

    MeanFieldResult out;
    out.times = t_grid;
    out.occupations.resize(static_cast<Eigen::Index>(t_grid.size()), n);

    double now = 0.0;
    for (size_t gi = 0; gi < t_grid.size(); ++gi) {
        const double span = t_grid[gi] - now;
        if (span < 0.0) throw DomainError("time grid must be sorted");
        if (span > 0.0) {
            const int steps = std::max(1, static_cast<int>(std::ceil(span / dt_us)));
            const double h = span / steps;
            for (int k = 0; k < steps; ++k) {
                Eigen::MatrixXd k1 = derivative(s);
                Eigen::MatrixXd k2 = derivative(s + 0.5 * h * k1);
                Eigen::MatrixXd k3 = derivative(s + 0.5 * h * k2);
                Eigen::MatrixXd k4 = derivative(s + h * k3);
                s += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }
        }
        now = t_grid[gi];
        out.occupations.row(gi) = (0.5 * (s.col(2).array() + 1.0)).transpose();
    }
    return out;
}

}  // namespace qek
