#pragma once

#include <Eigen/Dense>
#include <optional>

#include "qek/errors.hpp"

namespace qek {

/// Probability distribution over total excitation counts 0..N.
struct ExcitationHistogram {
    Eigen::ArrayXd probs;
    std::optional<int> shots;  // set when the histogram came from finite sampling

    int max_excitations() const { return static_cast<int>(probs.size()) - 1; }

    void validate(double tol = 1e-9) const {
        if (probs.size() == 0) throw DomainError("empty histogram");
        if ((probs < -1e-15).any()) throw DomainError("histogram has negative entries");
        if (std::abs(probs.sum() - 1.0) > tol)
            throw DomainError("histogram not normalized: sum = " + std::to_string(probs.sum()));
    }
};

/// Zero-pads h to the given support length (counts 0..len-1).
inline Eigen::ArrayXd zero_padded(const Eigen::ArrayXd& p, Eigen::Index len) {
    if (p.size() >= len) return p;
    Eigen::ArrayXd out = Eigen::ArrayXd::Zero(len);
    out.head(p.size()) = p;
    return out;
}

}  // namespace qek
