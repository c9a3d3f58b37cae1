#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qek/errors.hpp"

namespace qek {

/// Undirected, unlabeled graph on nodes 0..n-1. Edges are stored as a
/// sorted, deduplicated list of (u, v) pairs with u < v, mirrored into
/// per-node adjacency lists.
class Graph {
  public:
    Graph() = default;

    explicit Graph(int node_count) : n_(node_count), adj_(node_count) {
        if (node_count < 1) throw IntegrityError("graph must have at least one node");
    }

    Graph(int node_count, const std::vector<std::pair<int, int>>& edges) : Graph(node_count) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int node_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Inserts the undirected edge {u, v}; duplicates are ignored.
    void add_edge(int u, int v) {
        if (u == v) throw IntegrityError("self-loop on node " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw IntegrityError("edge endpoint out of range: (" + std::to_string(u) + "," +
                                 std::to_string(v) + ") with n=" + std::to_string(n_));
        if (u > v) std::swap(u, v);
        auto e = std::make_pair(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it != edges_.end() && *it == e) return;
        edges_.insert(it, e);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        std::sort(adj_[u].begin(), adj_[u].end());
        std::sort(adj_[v].begin(), adj_[v].end());
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
    }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(n_);
        for (int i = 0; i < n_; ++i) d[i] = degree(i);
        std::sort(d.begin(), d.end());
        return d;
    }

    Eigen::MatrixXd adjacency_matrix() const {
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
        for (auto [u, v] : edges_) {
            a(u, v) = 1.0;
            a(v, u) = 1.0;
        }
        return a;
    }

    /// Graph with identical structure under the node permutation perm
    /// (node i of this graph becomes node perm[i]).
    Graph permuted(const std::vector<int>& perm) const {
        Graph g(n_);
        for (auto [u, v] : edges_) g.add_edge(perm[u], perm[v]);
        return g;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    std::optional<int> label;  // +1 toxic / -1 non-toxic when labeled

  private:
    int n_ = 1;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_{1};
};

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace qek
