#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "qek/graph.hpp"

namespace qek {

/// Two non-isomorphic 6-node, 7-edge graphs with identical local structure:
/// every border node (degree 2) has one degree-3 and one degree-2 neighbor,
/// every center node (degree 3) has two degree-2 neighbors and one degree-3
/// neighbor. The first graph is a six-cycle with a long chord (two unit
/// squares sharing an edge); the second is two triangles joined by an edge.
std::pair<Graph, Graph> locally_equivalent_pair();

/// Border (degree-2) node indices of either pair member.
std::vector<int> border_nodes(const Graph& g);
/// Center (degree-3) node indices.
std::vector<int> center_nodes(const Graph& g);

/// Canonical unit-disk embeddings of the pair with every edge at exactly
/// nn_distance (micrometers) and all non-edges strictly farther.
std::pair<Eigen::Matrix<double, Eigen::Dynamic, 2>, Eigen::Matrix<double, Eigen::Dynamic, 2>>
locally_equivalent_layouts(double nn_distance);

}  // namespace qek
