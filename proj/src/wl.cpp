#include "qek/wl.hpp"

#include <algorithm>

namespace qek {

namespace {

using Signature = std::pair<int, std::vector<int>>;

// One refinement round; returns false if the partition did not change.
bool refine_round(const Graph& g, std::vector<int>& colors) {
    const int n = g.node_count();
    std::vector<Signature> sigs(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        nb.reserve(g.neighbors(v).size());
        for (int u : g.neighbors(v)) nb.push_back(colors[u]);
        std::sort(nb.begin(), nb.end());
        sigs[v] = {colors[v], std::move(nb)};
    }
    std::vector<Signature> distinct(sigs);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
        next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sigs[v]) - distinct.begin());

    bool changed = false;
    for (int v = 0; v < n && !changed; ++v)
        if (next[v] != colors[v]) changed = true;
    colors.swap(next);
    return changed;
}

}  // namespace

WLColoring wl_refine(const Graph& g, int max_iters) {
    if (max_iters < 0) throw DomainError("max_iters must be >= 0");
    WLColoring out;
    out.colors.assign(g.node_count(), 0);
    for (int it = 0; it < max_iters; ++it) {
        if (!refine_round(g, out.colors)) {
            out.stable = true;
            return out;
        }
    }
    // Budget exhausted; probe whether the current coloring is already a fixed point.
    std::vector<int> probe = out.colors;
    out.stable = !refine_round(g, probe);
    return out;
}

bool wl_equivalent(const Graph& g1, const Graph& g2) {
    if (g1.node_count() != g2.node_count()) return false;
    const int n = g1.node_count();
    Graph joint(2 * n);
    for (auto [u, v] : g1.edges()) joint.add_edge(u, v);
    for (auto [u, v] : g2.edges()) joint.add_edge(n + u, n + v);

    std::vector<int> colors(2 * n, 0);
    for (int it = 0; it < 2 * n + 1; ++it)
        if (!refine_round(joint, colors)) break;

    std::map<int, int> h1, h2;
    for (int v = 0; v < n; ++v) ++h1[colors[v]];
    for (int v = 0; v < n; ++v) ++h2[colors[n + v]];
    return h1 == h2;
}

}  // namespace qek
