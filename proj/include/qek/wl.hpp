#pragma once

#include <map>
#include <vector>

#include "qek/graph.hpp"

namespace qek {

/// Result of 1-WL color refinement. Colors are canonical: they are assigned
/// by sorted refinement signatures, so two runs on isomorphic graphs produce
/// identical color histograms without any shared state.
struct WLColoring {
    std::vector<int> colors;
    bool stable = false;

    /// color -> multiplicity
    std::map<int, int> histogram() const {
        std::map<int, int> h;
        for (int c : colors) ++h[c];
        return h;
    }
};

/// Standard 1-WL refinement from a uniform initial coloring, at most
/// max_iters rounds. stable is true when a fixed point was reached.
WLColoring wl_refine(const Graph& g, int max_iters);

/// True when the two graphs have identical stable WL color histograms
/// (refined jointly on the disjoint union, so colors are comparable).
bool wl_equivalent(const Graph& g1, const Graph& g2);

}  // namespace qek
