#include "qek/locally_equivalent.hpp"

namespace qek {

std::pair<Graph, Graph> locally_equivalent_pair() {
    // Six-cycle 0-1-2-3-4-5 plus the chord (0,3): centers 0 and 3.
    Graph g1(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    // Triangles (0,1,2) and (3,4,5) bridged by (2,3): centers 2 and 3.
    Graph g2(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
    return {g1, g2};
}

std::vector<int> border_nodes(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.node_count(); ++v)
        if (g.degree(v) == 2) out.push_back(v);
    return out;
}

std::vector<int> center_nodes(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.node_count(); ++v)
        if (g.degree(v) == 3) out.push_back(v);
    return out;
}

std::pair<Eigen::Matrix<double, Eigen::Dynamic, 2>, Eigen::Matrix<double, Eigen::Dynamic, 2>>
locally_equivalent_layouts(double nn_distance) {
    const double s = nn_distance;
    Eigen::Matrix<double, Eigen::Dynamic, 2> p1(6, 2), p2(6, 2);

    // Two unit squares sharing the vertical edge (0,3); closest non-edge is a
    // square diagonal at sqrt(2) s.
    p1 << 0.0, 0.0,   //
        s, 0.0,       //
        s, s,         //
        0.0, s,       //
        -s, s,        //
        -s, 0.0;

    // Two equilateral triangles whose apexes 2 and 3 are bridged; the closest
    // non-edge pair sits at ~1.93 s.
    const double c = 0.8660254037844386;  // cos(30 deg)
    p2 << -c * s, 0.5 * s,                //
        -c * s, -0.5 * s,                 //
        0.0, 0.0,                         //
        s, 0.0,                           //
        s + c * s, 0.5 * s,               //
        s + c * s, -0.5 * s;
    return {p1, p2};
}

}  // namespace qek
