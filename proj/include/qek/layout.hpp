#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>

#include "qek/atom_register.hpp"
#include "qek/graph.hpp"

namespace qek {

/// 2-D atom coordinates (micrometers), one row per node.
struct Layout {
    Eigen::Matrix<double, Eigen::Dynamic, 2> positions;

    int node_count() const { return static_cast<int>(positions.rows()); }
    double distance(int i, int j) const { return (positions.row(i) - positions.row(j)).norm(); }
    double min_pairwise_distance() const;

    AtomRegister to_register(double c6_over_h = kDefaultC6OverH) const {
        return AtomRegister{positions, c6_over_h};
    }
};

/// min over edges of U_ij divided by max over non-edges; +inf sentinel when
/// the graph has no non-edges. ratio > 1 means the layout is unit-disk
/// faithful.
struct EmbeddingQuality {
    double ratio = std::numeric_limits<double>::infinity();
    bool has_non_edges = false;

    bool faithful() const { return ratio > 1.0; }
};

EmbeddingQuality interaction_ratio(const Graph& g, const Layout& layout,
                                   double c6_over_h = kDefaultC6OverH);

/// Force-directed layout, rescaled so the median edge length equals
/// nn_target micrometers.
Layout fruchterman_reingold(const Graph& g, uint64_t seed, int iterations = 50,
                            double nn_target = kDefaultNNDistance);

struct UDOptimizerConfig {
    int sweeps = 3;
    double initial_step = 1.5;      // um
    double step_shrink = 0.5;       // per sweep
    double min_distance = 4.0;      // hardware floor, um
    double nn_target = kDefaultNNDistance;
};

/// Coordinate-descent refinement of the embedding ratio: each node in turn
/// tries 8-direction local moves; a move is kept when it improves the
/// objective without violating the distance floor. Never returns a layout
/// with a lower ratio than the start.
Layout optimize_ud_layout(const Graph& g, const Layout& start, const UDOptimizerConfig& config = {});

}  // namespace qek
