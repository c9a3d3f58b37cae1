#pragma once

#include <Eigen/Dense>
#include <memory>

#include "qek/atom_register.hpp"
#include "qek/pulse.hpp"

namespace qek {

/// Interaction part of the diagonal, cached per register so that pulse
/// segments with different drive parameters can share it.
class RegisterInteractions {
  public:
    explicit RegisterInteractions(const AtomRegister& reg);

    int num_qubits() const { return n_; }
    /// Pairwise interaction energy (angular, rad/us) of basis state b.
    const Eigen::VectorXd& diagonal() const { return diag_; }

  private:
    int n_;
    Eigen::VectorXd diag_;
};

/// H/hbar in angular units (rad/us) over the 2^N computational basis,
/// bit = 1 meaning the Rydberg state. The full 1/r^6 interaction over all
/// atom pairs is kept; no unit-disk truncation happens here.
class RydbergHamiltonian {
  public:
    RydbergHamiltonian(std::shared_ptr<const RegisterInteractions> interactions, double rabi_mhz,
                       double detuning_mhz);
    RydbergHamiltonian(const AtomRegister& reg, const Pulse& pulse)
        : RydbergHamiltonian(std::make_shared<RegisterInteractions>(reg), pulse.rabi_mhz, pulse.detuning_mhz) {}

    int num_qubits() const { return n_; }
    Eigen::Index dimension() const { return diag_.size(); }
    bool diagonal_only() const { return half_rabi_ == 0.0; }
    const Eigen::VectorXd& diagonal() const { return diag_; }

    /// y = H x
    void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;

    /// <psi|H|psi> (real for Hermitian H)
    double expectation(const Eigen::VectorXcd& psi) const;

    /// Crude upper bound on the spectral radius, used for step control.
    double norm_bound() const;

  private:
    int n_;
    double half_rabi_;       // angular
    Eigen::VectorXd diag_;   // angular: interactions - delta * popcount
};

}  // namespace qek
