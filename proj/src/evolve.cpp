#include "qek/evolve.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace qek {

namespace {

using Complexd = std::complex<double>;

// Columns of V span the Krylov space; alpha/beta are the Lanczos tridiagonal
// entries. Returns the reached dimension (short on happy breakdown).
struct LanczosBasis {
    std::vector<Eigen::VectorXcd> v;
    Eigen::VectorXd alpha;
    Eigen::VectorXd beta;  // beta[k] couples v[k] and v[k+1]; beta[m-1] is the residual coupling
    int m = 0;
    bool breakdown = false;
};

LanczosBasis build_lanczos(const RydbergHamiltonian& h, const Eigen::VectorXcd& start, int m_max) {
    LanczosBasis basis;
    const Eigen::Index dim = start.size();
    const int m_cap = static_cast<int>(std::min<Eigen::Index>(m_max, dim));
    basis.alpha.resize(m_cap);
    basis.beta.resize(m_cap);
    basis.v.reserve(m_cap + 1);
    basis.v.push_back(start.normalized());

    Eigen::VectorXcd w(dim);
    for (int k = 0; k < m_cap; ++k) {
        h.apply(basis.v[k], w);
        basis.alpha[k] = basis.v[k].dot(w).real();
        w -= basis.alpha[k] * basis.v[k];
        if (k > 0) w -= basis.beta[k - 1] * basis.v[k - 1];
        // One full re-orthogonalization pass keeps the basis clean.
        for (int j = 0; j <= k; ++j) w -= basis.v[j].dot(w) * basis.v[j];
        basis.beta[k] = w.norm();
        basis.m = k + 1;
        if (basis.beta[k] < 1e-13) {
            basis.breakdown = true;
            return basis;
        }
        if (k + 1 < m_cap) basis.v.push_back(w / basis.beta[k]);
    }
    return basis;
}

// exp(-i T dt) e1 for the projected tridiagonal T, plus the magnitude of the
// final component used for the a-posteriori error estimate.
Eigen::VectorXcd tridiag_expm_e1(const LanczosBasis& basis, double dt) {
    const int m = basis.m;
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (int k = 0; k < m; ++k) {
        t(k, k) = basis.alpha[k];
        if (k + 1 < m) {
            t(k, k + 1) = basis.beta[k];
            t(k + 1, k) = basis.beta[k];
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    Eigen::VectorXd first_row = es.eigenvectors().row(0);
    Eigen::VectorXcd phases(m);
    for (int k = 0; k < m; ++k)
        phases[k] = std::polar(1.0, -es.eigenvalues()[k] * dt) * first_row[k];
    return es.eigenvectors() * phases;
}

}  // namespace

void krylov_propagate(const RydbergHamiltonian& h, Eigen::VectorXcd& psi, double t_us,
                      double tolerance, int krylov_dim) {
    if (t_us == 0.0) return;
    if (h.diagonal_only()) {
        // Pure phase evolution; exact.
        const Eigen::Index dim = psi.size();
        for (Eigen::Index b = 0; b < dim; ++b)
            psi[b] *= std::polar(1.0, -h.diagonal()[b] * t_us);
        return;
    }

    double remaining = t_us;
    // Initial guess for the substep from the norm bound; refined per step by
    // the Lanczos residual estimate, which is reusable across step sizes.
    double dt = std::min(remaining, 2.0 * krylov_dim / std::max(h.norm_bound(), 1e-12));
    while (remaining > 1e-15) {
        dt = std::min(dt, remaining);
        LanczosBasis basis = build_lanczos(h, psi, krylov_dim);
        Eigen::VectorXcd w;
        if (basis.breakdown) {
            dt = remaining;  // the subspace is invariant, so the step is exact
            w = tridiag_expm_e1(basis, dt);
        } else {
            const double budget = tolerance * dt / t_us;
            for (;;) {
                w = tridiag_expm_e1(basis, dt);
                const double err = basis.beta[basis.m - 1] * std::abs(w[basis.m - 1]) * dt;
                if (err <= budget || dt < 1e-12) break;
                dt *= 0.5;
            }
        }
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(psi.size());
        for (int k = 0; k < basis.m; ++k) next += w[k] * basis.v[k];
        psi = next;
        psi /= psi.norm();
        remaining -= dt;
        dt *= 1.4;  // cautious growth back toward larger steps
    }
}

QuantumState evolve(const AtomRegister& reg, const Pulse& pulse, const EvolveOptions& opts) {
    return evolve_sequence(reg, PulseSequence{pulse}, opts);
}

QuantumState evolve_sequence(const AtomRegister& reg, const PulseSequence& pulses,
                             const EvolveOptions& opts) {
    const int n = reg.qubit_count();
    const int ceiling = opts.allow_hard_cap ? kHardQubitCap : std::min(opts.qubit_ceiling, kHardQubitCap);
    if (n > ceiling)
        throw CapabilityError("register of " + std::to_string(n) + " qubits exceeds the ceiling of " +
                              std::to_string(ceiling));
    auto interactions = std::make_shared<RegisterInteractions>(reg);
    QuantumState state = ground_state(n);
    for (const Pulse& pulse : pulses) {
        pulse.validate();
        RydbergHamiltonian h(interactions, pulse.rabi_mhz, pulse.detuning_mhz);
        krylov_propagate(h, state.amplitudes, pulse.duration_us, opts.krylov_tolerance, opts.krylov_dim);
    }
    return state;
}

ExcitationHistogram excitation_distribution(const QuantumState& state) {
    const Eigen::Index dim = state.amplitudes.size();
    ExcitationHistogram hist;
    hist.probs = Eigen::ArrayXd::Zero(state.num_qubits + 1);
    for (Eigen::Index b = 0; b < dim; ++b)
        hist.probs[std::popcount(static_cast<uint64_t>(b))] += std::norm(state.amplitudes[b]);
    const double total = hist.probs.sum();
    if (std::abs(total - 1.0) > 1e-9)
        throw DomainError("state is not normalized: |psi|^2 = " + std::to_string(total));
    hist.probs /= total;
    return hist;
}

Eigen::VectorXd local_occupations(const QuantumState& state) {
    const Eigen::Index dim = state.amplitudes.size();
    Eigen::VectorXd occ = Eigen::VectorXd::Zero(state.num_qubits);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const double p = std::norm(state.amplitudes[b]);
        if (p == 0.0) continue;
        uint64_t bits = static_cast<uint64_t>(b);
        while (bits) {
            occ[std::countr_zero(bits)] += p;
            bits &= bits - 1;
        }
    }
    return occ;
}

}  // namespace qek
