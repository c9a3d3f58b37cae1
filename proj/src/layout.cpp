#include "qek/layout.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "qek/errors.hpp"

namespace qek {

double Layout::min_pairwise_distance() const {
    const int n = node_count();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) best = std::min(best, distance(i, j));
    return best;
}

EmbeddingQuality interaction_ratio(const Graph& g, const Layout& layout, double c6_over_h) {
    if (layout.node_count() != g.node_count()) throw IntegrityError("layout does not match the graph");
    const int n = g.node_count();
    double min_edge_u = std::numeric_limits<double>::infinity();
    double max_nonedge_u = 0.0;
    bool any_nonedge = false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = layout.distance(i, j);
            if (d <= 0.0) throw DomainError("coincident nodes " + std::to_string(i) + "," + std::to_string(j));
            const double u = interaction_strength(d, c6_over_h);
            if (g.has_edge(i, j)) {
                min_edge_u = std::min(min_edge_u, u);
            } else {
                any_nonedge = true;
                max_nonedge_u = std::max(max_nonedge_u, u);
            }
        }
    }
    EmbeddingQuality q;
    q.has_non_edges = any_nonedge;
    if (any_nonedge && g.edge_count() > 0)
        q.ratio = min_edge_u / max_nonedge_u;
    else if (!any_nonedge)
        q.ratio = std::numeric_limits<double>::infinity();
    else
        q.ratio = 0.0;  // edgeless graph with non-edges: nothing to protect
    return q;
}

namespace {

double median_edge_length(const Graph& g, const Layout& layout) {
    std::vector<double> lengths;
    lengths.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) lengths.push_back(layout.distance(u, v));
    if (lengths.empty()) return 0.0;
    std::sort(lengths.begin(), lengths.end());
    const size_t m = lengths.size();
    return m % 2 == 1 ? lengths[m / 2] : 0.5 * (lengths[m / 2 - 1] + lengths[m / 2]);
}

void rescale_to_target(const Graph& g, Layout& layout, double nn_target) {
    const double med = median_edge_length(g, layout);
    if (med > 0.0) layout.positions *= nn_target / med;
}

// Objective maximized by the optimizer: the log of the embedding ratio, with
// a small compactness pull so that ratio ties (e.g. graphs without non-edges)
// still contract toward the target edge length.
double layout_objective(const Graph& g, const Layout& layout, double nn_target) {
    const int n = g.node_count();
    double max_edge = 0.0;
    double min_nonedge = std::numeric_limits<double>::infinity();
    double edge_sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = layout.distance(i, j);
            if (g.has_edge(i, j)) {
                max_edge = std::max(max_edge, d);
                edge_sum += d;
            } else {
                min_nonedge = std::min(min_nonedge, d);
            }
        }
    }
    double obj = 0.0;
    if (g.edge_count() > 0 && std::isfinite(min_nonedge))
        obj = 6.0 * (std::log(min_nonedge) - std::log(max_edge));
    else if (g.edge_count() > 0)
        obj = -6.0 * std::log(max_edge / nn_target);  // no non-edges: shrink edges
    const double mean_edge = g.edge_count() > 0 ? edge_sum / g.edge_count() : nn_target;
    return obj - 1e-3 * std::abs(mean_edge - nn_target) / nn_target;
}

}  // namespace

Layout fruchterman_reingold(const Graph& g, uint64_t seed, int iterations, double nn_target) {
    if (iterations < 1) throw DomainError("iterations must be >= 1");
    const int n = g.node_count();
    Layout layout;
    layout.positions.resize(n, 2);
    if (n == 1) {
        layout.positions.setZero();
        return layout;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-0.5, 0.5);
    for (int i = 0; i < n; ++i) layout.positions.row(i) << unif(rng), unif(rng);

    const double k = std::sqrt(1.0 / n);  // ideal spring length in unit-square units
    double temperature = 0.1;
    const double cooling = temperature / iterations;

    Eigen::Matrix<double, Eigen::Dynamic, 2> disp(n, 2);
    for (int it = 0; it < iterations; ++it) {
        disp.setZero();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                Eigen::RowVector2d delta = layout.positions.row(i) - layout.positions.row(j);
                double d = std::max(delta.norm(), 1e-9);
                Eigen::RowVector2d dir = delta / d;
                Eigen::RowVector2d rep = dir * (k * k / d);
                disp.row(i) += rep;
                disp.row(j) -= rep;
            }
        }
        for (auto [u, v] : g.edges()) {
            Eigen::RowVector2d delta = layout.positions.row(u) - layout.positions.row(v);
            double d = std::max(delta.norm(), 1e-9);
            Eigen::RowVector2d att = (delta / d) * (d * d / k);
            disp.row(u) -= att;
            disp.row(v) += att;
        }
        for (int i = 0; i < n; ++i) {
            double d = std::max(disp.row(i).norm(), 1e-12);
            layout.positions.row(i) += disp.row(i) / d * std::min(d, temperature);
        }
        temperature = std::max(temperature - cooling, 1e-4);
    }

    if (g.edge_count() > 0) {
        rescale_to_target(g, layout, nn_target);
    } else {
        // Edgeless: spread nodes at the target spacing instead.
        double min_d = layout.min_pairwise_distance();
        if (min_d > 0.0) layout.positions *= nn_target / min_d;
    }
    layout.positions.rowwise() -= layout.positions.colwise().mean();
    return layout;
}

Layout optimize_ud_layout(const Graph& g, const Layout& start, const UDOptimizerConfig& config) {
    if (start.node_count() != g.node_count()) throw IntegrityError("start layout does not match the graph");
    if (config.min_distance > config.nn_target)
        throw ConstraintError("distance floor exceeds the nearest-neighbor target");

    const int n = g.node_count();
    Layout layout = start;

    // The floor must hold before local moves begin; rescale up if violated.
    const double min_d = layout.min_pairwise_distance();
    if (n > 1 && min_d < config.min_distance) {
        if (min_d <= 0.0) throw ConstraintError("start layout has coincident nodes");
        layout.positions *= config.min_distance / min_d;
    }

    const EmbeddingQuality start_quality = interaction_ratio(g, layout);

    static const double dirs[8][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                      {0.7071067811865476, 0.7071067811865476},
                                      {-0.7071067811865476, 0.7071067811865476},
                                      {0.7071067811865476, -0.7071067811865476},
                                      {-0.7071067811865476, -0.7071067811865476}};

    auto floor_ok = [&](int node) {
        for (int j = 0; j < n; ++j)
            if (j != node && layout.distance(node, j) < config.min_distance) return false;
        return true;
    };

    double step = config.initial_step;
    double best_obj = layout_objective(g, layout, config.nn_target);
    for (int sweep = 0; sweep < config.sweeps; ++sweep) {
        for (int node = 0; node < n; ++node) {
            bool improved = true;
            while (improved) {
                improved = false;
                const Eigen::RowVector2d saved = layout.positions.row(node);
                for (const auto& d : dirs) {
                    layout.positions.row(node) = saved + step * Eigen::RowVector2d(d[0], d[1]);
                    if (floor_ok(node)) {
                        const double obj = layout_objective(g, layout, config.nn_target);
                        if (obj > best_obj + 1e-12) {
                            best_obj = obj;
                            improved = true;
                            break;
                        }
                    }
                    layout.positions.row(node) = saved;
                }
            }
        }
        step *= config.step_shrink;
    }

    rescale_to_target(g, layout, config.nn_target);
    // Rescaling toward the target spacing must not break the floor.
    if (n > 1) {
        const double d = layout.min_pairwise_distance();
        if (d < config.min_distance) layout.positions *= config.min_distance / d;
    }
    layout.positions.rowwise() -= layout.positions.colwise().mean();

    const EmbeddingQuality final_quality = interaction_ratio(g, layout);
    if (final_quality.has_non_edges && start_quality.has_non_edges &&
        final_quality.ratio < start_quality.ratio) {
        Layout fallback = start;
        fallback.positions.rowwise() -= fallback.positions.colwise().mean();
        return fallback;
    }
    return layout;
}

}  // namespace qek
