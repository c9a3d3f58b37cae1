#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qek/evolve.hpp"
#include "qek/histogram.hpp"

namespace qek {

/// i.i.d. computational-basis samples from |amplitudes|^2, one bitstring per
/// shot, deterministic under seed.
std::vector<uint64_t> sample_bitstrings(const QuantumState& state, int shots, uint64_t seed);

/// Probability of reading out `measured` when `prepared` is the true state,
/// with independent per-qubit false-positive (eps) and false-negative
/// (eps_prime) rates.
double detection_outcome_probability(uint64_t prepared, uint64_t measured, int num_qubits, double eps,
                                     double eps_prime);

/// Flips each bit of each shot independently: 0->1 with eps, 1->0 with eps_prime.
std::vector<uint64_t> apply_detection_errors(const std::vector<uint64_t>& shots, int num_qubits, double eps,
                                             double eps_prime, uint64_t seed);

/// Exact pushforward of an excitation-count distribution through the
/// detection channel: each of the k excited atoms survives with 1-eps_prime,
/// each ground atom false-fires with eps.
ExcitationHistogram apply_detection_errors(const ExcitationHistogram& hist, double eps, double eps_prime);

/// Detection-adjusted per-qubit occupation.
inline double detected_occupation(double n, double eps, double eps_prime) {
    return (1.0 - eps_prime) * n + eps * (1.0 - n);
}

ExcitationHistogram histogram_from_counts(const std::vector<uint64_t>& shots, int num_qubits);

/// Leave-one-out jackknife standard error of an arbitrary statistic of the
/// shot collection.
double jackknife_error(const std::vector<uint64_t>& samples,
                       const std::function<double(const std::vector<uint64_t>&)>& statistic);

/// Trajectory-unravelled dephasing: each qubit acquires instantaneous Z kicks
/// at Poisson rate gamma/2, which reproduces the master-equation coherence
/// decay exp(-gamma t) on average. Detection errors are applied to the
/// trajectory-averaged distribution.
ExcitationHistogram evolve_noisy(const AtomRegister& reg, const Pulse& pulse, const NoiseModel& noise,
                                 uint64_t seed, const EvolveOptions& opts = {});

/// One scan point of a noisy observable curve.
struct NoisyObservablePoint {
    double t_us = 0.0;
    ExcitationHistogram histogram;   // detection errors applied; empirical when shots set
    Eigen::VectorXd mean_occupation; // per qubit, detection-adjusted
    Eigen::VectorXd occupation_se;   // jackknife SE per qubit (zero when exact)
};

/// Evolves the register once per trajectory, snapshotting every grid time.
/// With `shots`, measurement statistics come from that many sampled,
/// detection-corrupted bitstrings per grid point (spread over trajectories);
/// otherwise the exact trajectory-averaged quantities are returned.
std::vector<NoisyObservablePoint> noisy_observable_scan(const AtomRegister& reg, const Pulse& pulse,
                                                        const std::vector<double>& t_grid,
                                                        const NoiseModel& noise, uint64_t seed,
                                                        std::optional<int> shots,
                                                        const EvolveOptions& opts = {});

}  // namespace qek
