#pragma once

#include "qek/graph.hpp"

namespace qek {

/// Exact isomorphism test by permutation search with degree pruning.
/// Intended as a test oracle; limited to graphs of at most 12 nodes.
bool is_isomorphic(const Graph& g1, const Graph& g2);

constexpr int kIsomorphismOracleLimit = 12;

}  // namespace qek
