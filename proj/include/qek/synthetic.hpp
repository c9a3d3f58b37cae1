#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "qek/dataset.hpp"
#include "qek/graph.hpp"

namespace qek {

enum class SyntheticClass { A, B };  // A favors honeycomb sites, B kagome sites

/// Graph plus the lattice coordinates of its nodes (units of lattice spacing).
struct SyntheticGraph {
    Graph graph{1};
    Eigen::Matrix<double, Eigen::Dynamic, 2> sites;
};

/// Samples a weighted random walk on the triangular lattice: neighbors on the
/// favored sublattice are chosen with weight 1, all others with weight p. The
/// walk runs until n_nodes distinct sites are visited; the returned graph
/// connects nearest-neighbor site pairs (unit-disk threshold between 1 and
/// sqrt(3) lattice spacings).
SyntheticGraph generate_synthetic(SyntheticClass cls, double p, int n_nodes, uint64_t seed);

/// Dataset of walk graphs together with their lattice-unit node coordinates.
struct SyntheticDataset {
    GraphDataset dataset;
    std::vector<Eigen::Matrix<double, Eigen::Dynamic, 2>> sites;
};

/// per_class labeled graphs per class (A -> +1, B -> -1), deterministic under seed.
SyntheticDataset generate_synthetic_corpus(double p, int per_class, int n_nodes, uint64_t seed);

inline GraphDataset generate_synthetic_dataset(double p, int per_class, int n_nodes, uint64_t seed) {
    return generate_synthetic_corpus(p, per_class, n_nodes, seed).dataset;
}

}  // namespace qek
