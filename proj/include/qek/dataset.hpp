#pragma once

#include <map>
#include <string>
#include <vector>

#include "qek/graph.hpp"

namespace qek {

/// Ordered collection of graphs; indices are stable across pipeline stages.
struct GraphDataset {
    std::vector<Graph> graphs;
    std::string name;
    std::string provenance;

    int size() const { return static_cast<int>(graphs.size()); }
    bool fully_labeled() const {
        for (const auto& g : graphs)
            if (!g.label) return false;
        return true;
    }
    std::vector<int> labels() const;
};

/// Reads a dataset in the TU bench format: a directory holding
/// <prefix>_A.txt (1-based directed edge list, symmetrized on load),
/// <prefix>_graph_indicator.txt and <prefix>_graph_labels.txt.
/// Node/edge attribute files are ignored. Labels are mapped to -1/+1.
GraphDataset load_tudataset(const std::string& directory);

/// Keeps the graphs with node_count <= max_nodes, preserving order.
GraphDataset truncate_dataset(const GraphDataset& ds, int max_nodes);

/// Per-class node-count histogram: (size, class) -> count.
std::map<std::pair<int, int>, int> size_histogram(const GraphDataset& ds);

std::string dataset_to_json(const GraphDataset& ds);
GraphDataset dataset_from_json(const std::string& text);

}  // namespace qek
