#pragma once

#include <Eigen/Dense>

#include "qek/errors.hpp"

namespace qek {

constexpr double kDefaultC6OverH = 138000.0;  // MHz * um^6
constexpr double kDefaultNNDistance = 5.3;    // um
constexpr int kDefaultQubitCeiling = 20;
constexpr int kHardQubitCap = 24;

/// Van der Waals interaction between two atoms at distance r_um, returned in
/// the nu-convention (MHz): C6/h divided by r^6.
inline double interaction_strength(double r_um, double c6_over_h = kDefaultC6OverH) {
    if (!(r_um > 0.0)) throw DomainError("interaction distance must be > 0");
    double r3 = r_um * r_um * r_um;
    return c6_over_h / (r3 * r3);
}

/// Planar arrangement of qubits, one row of coordinates (um) per atom.
struct AtomRegister {
    Eigen::Matrix<double, Eigen::Dynamic, 2> positions;
    double c6_over_h = kDefaultC6OverH;

    int qubit_count() const { return static_cast<int>(positions.rows()); }

    double distance(int i, int j) const { return (positions.row(i) - positions.row(j)).norm(); }

    void validate() const {
        const int n = qubit_count();
        if (n < 1) throw IntegrityError("register needs at least one atom");
        if (!positions.allFinite()) throw IntegrityError("register coordinates must be finite");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (distance(i, j) <= 0.0)
                    throw IntegrityError("atoms " + std::to_string(i) + " and " + std::to_string(j) +
                                         " are coincident");
    }
};

}  // namespace qek
