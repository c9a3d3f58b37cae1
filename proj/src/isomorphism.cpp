#include "qek/isomorphism.hpp"

#include <algorithm>

namespace qek {

namespace {

// Backtracking: map nodes of g1 in order onto unused nodes of g2 with equal
// degree, checking adjacency against all previously mapped nodes.
bool extend(const Graph& g1, const Graph& g2, std::vector<int>& map, std::vector<bool>& used, int v) {
    const int n = g1.node_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || g2.degree(w) != g1.degree(v)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g1.has_edge(u, v) != g2.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend(g1, g2, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.node_count() > kIsomorphismOracleLimit || g2.node_count() > kIsomorphismOracleLimit)
        throw CapabilityError("isomorphism oracle is limited to " + std::to_string(kIsomorphismOracleLimit) +
                              " nodes");
    if (g1.node_count() != g2.node_count() || g1.edge_count() != g2.edge_count()) return false;
    if (g1.degree_sequence() != g2.degree_sequence()) return false;
    std::vector<int> map(g1.node_count(), -1);
    std::vector<bool> used(g1.node_count(), false);
    return extend(g1, g2, map, used, 0);
}

}  // namespace qek
