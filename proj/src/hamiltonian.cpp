#include "qek/hamiltonian.hpp"

#include <bit>

namespace qek {

RegisterInteractions::RegisterInteractions(const AtomRegister& reg) : n_(reg.qubit_count()) {
    reg.validate();
    const Eigen::Index dim = Eigen::Index(1) << n_;
    diag_ = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            const double u = kTwoPi * interaction_strength(reg.distance(i, j), reg.c6_over_h);
            const uint64_t mask = (uint64_t(1) << i) | (uint64_t(1) << j);
            // Add u to every basis state with both bits set.
            for (uint64_t b = mask; b < static_cast<uint64_t>(dim); b = (b + 1) | mask)
                if ((b & mask) == mask) diag_[static_cast<Eigen::Index>(b)] += u;
        }
    }
}

RydbergHamiltonian::RydbergHamiltonian(std::shared_ptr<const RegisterInteractions> interactions,
                                       double rabi_mhz, double detuning_mhz)
    : n_(interactions->num_qubits()), half_rabi_(0.5 * kTwoPi * rabi_mhz) {
    const Eigen::Index dim = interactions->diagonal().size();
    const double delta = kTwoPi * detuning_mhz;
    diag_.resize(dim);
    for (Eigen::Index b = 0; b < dim; ++b)
        diag_[b] = interactions->diagonal()[b] - delta * std::popcount(static_cast<uint64_t>(b));
}

void RydbergHamiltonian::apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
    const Eigen::Index dim = diag_.size();
    y = diag_.array() * x.array();
    if (half_rabi_ == 0.0) return;
    for (int q = 0; q < n_; ++q) {
        const Eigen::Index bit = Eigen::Index(1) << q;
        for (Eigen::Index base = 0; base < dim; base += 2 * bit) {
            for (Eigen::Index off = 0; off < bit; ++off) {
                const Eigen::Index lo = base + off;
                const Eigen::Index hi = lo + bit;
                y[lo] += half_rabi_ * x[hi];
                y[hi] += half_rabi_ * x[lo];
            }
        }
    }
}

double RydbergHamiltonian::expectation(const Eigen::VectorXcd& psi) const {
    Eigen::VectorXcd h_psi(psi.size());
    apply(psi, h_psi);
    return psi.dot(h_psi).real();
}

double RydbergHamiltonian::norm_bound() const {
    return diag_.cwiseAbs().maxCoeff() + std::abs(half_rabi_) * n_;
}

}  // namespace qek
