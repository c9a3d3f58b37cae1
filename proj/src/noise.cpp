#include "qek/noise.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace qek {

namespace {

// Binomial pmf table: row k holds Binomial(k, p) over 0..k.
Eigen::MatrixXd binomial_table(int n_max, double p) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
    t(0, 0) = 1.0;
    for (int k = 1; k <= n_max; ++k) {
        t(k, 0) = t(k - 1, 0) * (1.0 - p);
        for (int s = 1; s <= k; ++s)
            t(k, s) = t(k - 1, s) * (1.0 - p) + t(k - 1, s - 1) * p;
    }
    return t;
}

struct ZKick {
    double t;
    int qubit;
};

// Poisson(gamma/2) kick times per qubit over [0, duration].
std::vector<ZKick> draw_kicks(int num_qubits, double duration, double gamma_angular, std::mt19937_64& rng) {
    std::vector<ZKick> kicks;
    if (gamma_angular <= 0.0 || duration <= 0.0) return kicks;
    const double rate = 0.5 * gamma_angular;
    std::exponential_distribution<double> gap(rate);
    for (int q = 0; q < num_qubits; ++q) {
        double t = gap(rng);
        while (t < duration) {
            kicks.push_back({t, q});
            t += gap(rng);
        }
    }
    std::sort(kicks.begin(), kicks.end(), [](const ZKick& a, const ZKick& b) { return a.t < b.t; });
    return kicks;
}

void apply_z_kick(Eigen::VectorXcd& psi, int qubit) {
    const Eigen::Index bit = Eigen::Index(1) << qubit;
    for (Eigen::Index b = 0; b < psi.size(); ++b)
        if ((b & bit) == 0) psi[b] = -psi[b];
}

}  // namespace

std::vector<uint64_t> sample_bitstrings(const QuantumState& state, int shots, uint64_t seed) {
    if (shots < 1) throw DomainError("shots must be >= 1");
    const Eigen::Index dim = state.amplitudes.size();
    std::vector<double> cdf(dim);
    double acc = 0.0;
    for (Eigen::Index b = 0; b < dim; ++b) {
        acc += std::norm(state.amplitudes[b]);
        cdf[b] = acc;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, acc);
    std::vector<uint64_t> out(shots);
    for (int s = 0; s < shots; ++s) {
        double r = unif(rng);
        out[s] = static_cast<uint64_t>(std::lower_bound(cdf.begin(), cdf.end(), r) - cdf.begin());
    }
    return out;
}

double detection_outcome_probability(uint64_t prepared, uint64_t measured, int num_qubits, double eps,
                                     double eps_prime) {
    double p = 1.0;
    for (int k = 0; k < num_qubits; ++k) {
        const bool was = (prepared >> k) & 1;
        const bool got = (measured >> k) & 1;
        const double flip = was ? eps_prime : eps;
        p *= (was == got) ? (1.0 - flip) : flip;
    }
    return p;
}

std::vector<uint64_t> apply_detection_errors(const std::vector<uint64_t>& shots, int num_qubits, double eps,
                                             double eps_prime, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<uint64_t> out;
    out.reserve(shots.size());
    for (uint64_t s : shots) {
        uint64_t m = s;
        for (int k = 0; k < num_qubits; ++k) {
            const bool was = (s >> k) & 1;
            const double flip = was ? eps_prime : eps;
            if (flip > 0.0 && unif(rng) < flip) m ^= uint64_t(1) << k;
        }
        out.push_back(m);
    }
    return out;
}

ExcitationHistogram apply_detection_errors(const ExcitationHistogram& hist, double eps, double eps_prime) {
    hist.validate(1e-6);
    const int n = hist.max_excitations();
    const Eigen::MatrixXd survive = binomial_table(n, 1.0 - eps_prime);
    const Eigen::MatrixXd fire = binomial_table(n, eps);
    ExcitationHistogram out;
    out.shots = hist.shots;
    out.probs = Eigen::ArrayXd::Zero(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (hist.probs[k] == 0.0) continue;
        for (int s = 0; s <= k; ++s) {
            const double ps = survive(k, s);
            if (ps == 0.0) continue;
            for (int f = 0; f <= n - k; ++f)
                out.probs[s + f] += hist.probs[k] * ps * fire(n - k, f);
        }
    }
    out.probs /= out.probs.sum();
    return out;
}

ExcitationHistogram histogram_from_counts(const std::vector<uint64_t>& shots, int num_qubits) {
    if (shots.empty()) throw DomainError("no shots");
    ExcitationHistogram h;
    h.probs = Eigen::ArrayXd::Zero(num_qubits + 1);
    for (uint64_t s : shots) h.probs[std::popcount(s)] += 1.0;
    h.probs /= static_cast<double>(shots.size());
    h.shots = static_cast<int>(shots.size());
    return h;
}

double jackknife_error(const std::vector<uint64_t>& samples,
                       const std::function<double(const std::vector<uint64_t>&)>& statistic) {
    const size_t n = samples.size();
    if (n < 2) throw DomainError("jackknife needs at least 2 samples");
    std::vector<double> loo(n);
    std::vector<uint64_t> reduced(samples.begin() + 1, samples.end());
    for (size_t i = 0; i < n; ++i) {
        // reduced currently omits element i
        loo[i] = statistic(reduced);
        if (i + 1 < n) reduced[i] = samples[i];
    }
    double mean = 0.0;
    for (double v : loo) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : loo) ss += (v - mean) * (v - mean);
    return std::sqrt(ss * (static_cast<double>(n) - 1.0) / static_cast<double>(n));
}

ExcitationHistogram evolve_noisy(const AtomRegister& reg, const Pulse& pulse, const NoiseModel& noise,
                                 uint64_t seed, const EvolveOptions& opts) {
    auto points = noisy_observable_scan(reg, pulse, {pulse.duration_us}, noise, seed, std::nullopt, opts);
    return points.back().histogram;
}

std::vector<NoisyObservablePoint> noisy_observable_scan(const AtomRegister& reg, const Pulse& pulse,
                                                        const std::vector<double>& t_grid,
                                                        const NoiseModel& noise, uint64_t seed,
                                                        std::optional<int> shots,
                                                        const EvolveOptions& opts) {
    noise.validate();
    pulse.validate();
    const int n = reg.qubit_count();
    const int ceiling = opts.allow_hard_cap ? kHardQubitCap : std::min(opts.qubit_ceiling, kHardQubitCap);
    if (n > ceiling)
        throw CapabilityError("register of " + std::to_string(n) + " qubits exceeds the ceiling of " +
                              std::to_string(ceiling));
    for (double t : t_grid)
        if (t < 0.0) throw DomainError("scan times must be >= 0");
    if (!std::is_sorted(t_grid.begin(), t_grid.end()))
        throw DomainError("scan times must be sorted");

    const double gamma = kTwoPi * noise.dephasing_mhz;
    const int num_traj = gamma > 0.0 ? noise.trajectories : 1;
    const size_t num_points = t_grid.size();

    auto interactions = std::make_shared<RegisterInteractions>(reg);
    RydbergHamiltonian h(interactions, pulse.rabi_mhz, pulse.detuning_mhz);

    const double horizon = t_grid.empty() ? 0.0 : t_grid.back();
    std::mt19937_64 rng(seed);

    std::vector<Eigen::ArrayXd> hist_acc(num_points, Eigen::ArrayXd::Zero(n + 1));
    std::vector<Eigen::VectorXd> occ_acc(num_points, Eigen::VectorXd::Zero(n));
    std::vector<std::vector<uint64_t>> shot_acc(num_points);

    // Shots are spread as evenly as possible over trajectories.
    std::vector<int> shots_per_traj(num_traj, 0);
    if (shots) {
        for (int s = 0; s < *shots; ++s) ++shots_per_traj[s % num_traj];
    }

    for (int traj = 0; traj < num_traj; ++traj) {
        auto kicks = draw_kicks(n, horizon, gamma, rng);
        size_t next_kick = 0;
        QuantumState state = ground_state(n);
        double now = 0.0;
        for (size_t gi = 0; gi < num_points; ++gi) {
            const double target = t_grid[gi];
            while (next_kick < kicks.size() && kicks[next_kick].t <= target) {
                krylov_propagate(h, state.amplitudes, kicks[next_kick].t - now, opts.krylov_tolerance,
                                 opts.krylov_dim);
                apply_z_kick(state.amplitudes, kicks[next_kick].qubit);
                now = kicks[next_kick].t;
                ++next_kick;
            }
            krylov_propagate(h, state.amplitudes, target - now, opts.krylov_tolerance, opts.krylov_dim);
            now = target;

            if (shots) {
                if (shots_per_traj[traj] > 0) {
                    auto raw = sample_bitstrings(state, shots_per_traj[traj], rng());
                    auto measured = apply_detection_errors(raw, n, noise.eps, noise.eps_prime, rng());
                    auto& bucket = shot_acc[gi];
                    bucket.insert(bucket.end(), measured.begin(), measured.end());
                } else {
                    rng();
                    rng();  // keep the stream aligned across trajectories
                }
            } else {
                hist_acc[gi] += excitation_distribution(state).probs;
                occ_acc[gi] += local_occupations(state);
            }
        }
    }

    std::vector<NoisyObservablePoint> out(num_points);
    for (size_t gi = 0; gi < num_points; ++gi) {
        out[gi].t_us = t_grid[gi];
        if (shots) {
            const auto& bucket = shot_acc[gi];
            out[gi].histogram = histogram_from_counts(bucket, n);
            out[gi].mean_occupation = Eigen::VectorXd::Zero(n);
            out[gi].occupation_se = Eigen::VectorXd::Zero(n);
            for (uint64_t s : bucket) {
                for (int q = 0; q < n; ++q)
                    if ((s >> q) & 1) out[gi].mean_occupation[q] += 1.0;
            }
            out[gi].mean_occupation /= static_cast<double>(bucket.size());
            for (int q = 0; q < n; ++q) {
                out[gi].occupation_se[q] = jackknife_error(bucket, [q](const std::vector<uint64_t>& ss) {
                    double m = 0.0;
                    for (uint64_t s : ss) m += (s >> q) & 1;
                    return m / static_cast<double>(ss.size());
                });
            }
        } else {
            ExcitationHistogram avg;
            avg.probs = hist_acc[gi] / static_cast<double>(num_traj);
            out[gi].histogram = apply_detection_errors(avg, noise.eps, noise.eps_prime);
            out[gi].mean_occupation = occ_acc[gi] / static_cast<double>(num_traj);
            for (int q = 0; q < n; ++q)
                out[gi].mean_occupation[q] =
                    detected_occupation(out[gi].mean_occupation[q], noise.eps, noise.eps_prime);
            out[gi].occupation_se = Eigen::VectorXd::Zero(n);
        }
    }
    return out;
}

}  // namespace qek
