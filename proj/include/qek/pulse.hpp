#pragma once

#include <cmath>
#include <vector>

#include "qek/errors.hpp"

namespace qek {

constexpr double kTwoPi = 6.283185307179586;

/// Constant laser drive. Frequencies follow the nu-convention used on
/// hardware (Omega/2pi and delta/2pi in MHz); durations are in microseconds.
/// Angular frequencies (rad/us) are derived where the dynamics needs them.
struct Pulse {
    double rabi_mhz = 1.0;
    double detuning_mhz = 0.0;
    double duration_us = 0.0;

    double rabi_angular() const { return kTwoPi * rabi_mhz; }
    double detuning_angular() const { return kTwoPi * detuning_mhz; }

    void validate() const {
        if (!(duration_us >= 0.0)) throw DomainError("pulse duration must be >= 0");
        if (!std::isfinite(rabi_mhz) || !std::isfinite(detuning_mhz) || !std::isfinite(duration_us))
            throw DomainError("pulse parameters must be finite");
    }
};

using PulseSequence = std::vector<Pulse>;

/// Detection errors plus an effective dephasing rate, realized by a
/// trajectory unravelling. dephasing_mhz is the single-qubit coherence decay
/// rate divided by 2pi, matching the master-equation convention.
struct NoiseModel {
    double eps = 0.03;            // P(measure 1 | prepared 0)
    double eps_prime = 0.08;      // P(measure 0 | prepared 1)
    double dephasing_mhz = 0.06;  // gamma / 2pi
    int trajectories = 100;

    void validate() const {
        if (eps < 0.0 || eps > 1.0 || eps_prime < 0.0 || eps_prime > 1.0)
            throw DomainError("detection error probabilities must be in [0, 1]");
        if (dephasing_mhz < 0.0) throw DomainError("dephasing rate must be >= 0");
        if (trajectories < 1) throw DomainError("at least one trajectory required");
    }

    bool pure() const { return eps == 0.0 && eps_prime == 0.0 && dephasing_mhz == 0.0; }
};

}  // namespace qek
