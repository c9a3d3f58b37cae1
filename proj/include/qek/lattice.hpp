#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>

namespace qek {

/// Integer coordinates on the triangular lattice with basis
/// a1 = (1, 0), a2 = (1/2, sqrt(3)/2), in units of the lattice spacing.
struct LatticePoint {
    int u = 0;
    int v = 0;
    bool operator==(const LatticePoint&) const = default;
    auto operator<=>(const LatticePoint&) const = default;
};

inline Eigen::Vector2d lattice_position(LatticePoint p, double spacing) {
    return spacing * Eigen::Vector2d(p.u + 0.5 * p.v, 0.8660254037844386 * p.v);
}

/// The six triangular-lattice neighbors of p.
inline std::array<LatticePoint, 6> lattice_neighbors(LatticePoint p) {
    return {LatticePoint{p.u + 1, p.v}, LatticePoint{p.u - 1, p.v},
            LatticePoint{p.u, p.v + 1}, LatticePoint{p.u, p.v - 1},
            LatticePoint{p.u + 1, p.v - 1}, LatticePoint{p.u - 1, p.v + 1}};
}

/// Honeycomb sublattice: triangular sites minus the (u - v) % 3 == 0 class.
inline bool on_honeycomb(LatticePoint p) {
    int r = (p.u - p.v) % 3;
    return (r + 3) % 3 != 0;
}

/// Kagome sublattice: triangular sites minus the both-coordinates-even class.
inline bool on_kagome(LatticePoint p) {
    return (p.u & 1) != 0 || (p.v & 1) != 0;
}

struct LatticePointHash {
    size_t operator()(const LatticePoint& p) const {
        return std::hash<int64_t>()((static_cast<int64_t>(p.u) << 32) ^ static_cast<uint32_t>(p.v));
    }
};

}  // namespace qek
