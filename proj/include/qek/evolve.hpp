#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qek/atom_register.hpp"
#include "qek/hamiltonian.hpp"
#include "qek/histogram.hpp"
#include "qek/pulse.hpp"

namespace qek {

struct QuantumState {
    Eigen::VectorXcd amplitudes;
    int num_qubits = 0;

    double norm() const { return amplitudes.norm(); }
};

inline QuantumState ground_state(int num_qubits) {
    QuantumState s;
    s.num_qubits = num_qubits;
    s.amplitudes = Eigen::VectorXcd::Zero(Eigen::Index(1) << num_qubits);
    s.amplitudes[0] = 1.0;
    return s;
}

struct EvolveOptions {
    int qubit_ceiling = kDefaultQubitCeiling;
    bool allow_hard_cap = false;  // raises the ceiling to kHardQubitCap
    double krylov_tolerance = 1e-11;
    int krylov_dim = 24;
};

/// Advances psi in place by exp(-i H t) using Lanczos-projected matrix
/// exponentials with adaptive substepping.
void krylov_propagate(const RydbergHamiltonian& h, Eigen::VectorXcd& psi, double t_us,
                      double tolerance = 1e-11, int krylov_dim = 24);

/// |psi> = exp(-i H t) |0...0> for the constant pulse.
QuantumState evolve(const AtomRegister& reg, const Pulse& pulse, const EvolveOptions& opts = {});

/// Sequential application of piecewise-constant pulse segments.
QuantumState evolve_sequence(const AtomRegister& reg, const PulseSequence& pulses,
                             const EvolveOptions& opts = {});

/// Exact Hamming-weight marginal of |amplitudes|^2.
ExcitationHistogram excitation_distribution(const QuantumState& state);

/// Per-qubit <n_i>.
Eigen::VectorXd local_occupations(const QuantumState& state);

}  // namespace qek
