#include "qek/synthetic.hpp"

#include <random>
#include <unordered_set>
#include <vector>

#include "qek/errors.hpp"
#include "qek/lattice.hpp"

namespace qek {

namespace {

constexpr int kMaxRetries = 100;

bool favored(SyntheticClass cls, LatticePoint p) {
    return cls == SyntheticClass::A ? on_honeycomb(p) : on_kagome(p);
}

// Uniform favored-sublattice site in a small window around the origin; the
// lattice is translation invariant, so the window size is immaterial.
LatticePoint random_start(SyntheticClass cls, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coord(-8, 8);
    for (;;) {
        LatticePoint p{coord(rng), coord(rng)};
        if (favored(cls, p)) return p;
    }
}

bool try_walk(SyntheticClass cls, double p, int n_nodes, std::mt19937_64& rng,
              std::vector<LatticePoint>& out) {
    out.clear();
    std::unordered_set<LatticePoint, LatticePointHash> visited;
    LatticePoint cur = random_start(cls, rng);
    visited.insert(cur);
    out.push_back(cur);

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    // Walk length is bounded to keep pathological weight choices finite.
    const long max_steps = 4000L * n_nodes + 4000;
    for (long step = 0; static_cast<int>(out.size()) < n_nodes; ++step) {
        if (step > max_steps) return false;
        auto nb = lattice_neighbors(cur);
        double weights[6];
        double total = 0.0;
        for (int k = 0; k < 6; ++k) {
            weights[k] = favored(cls, nb[k]) ? 1.0 : p;
            total += weights[k];
        }
        if (total <= 0.0) return false;  // stuck: no reachable neighbor has weight
        double r = unif(rng) * total;
        int pick = 0;
        for (; pick < 5; ++pick) {
            r -= weights[pick];
            if (r <= 0.0) break;
        }
        cur = nb[pick];
        if (visited.insert(cur).second) out.push_back(cur);
    }
    return true;
}

}  // namespace

SyntheticGraph generate_synthetic(SyntheticClass cls, double p, int n_nodes, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw DomainError("walk weight p must be in [0, 1]");
    if (n_nodes < 1) throw DomainError("n_nodes must be >= 1");

    std::mt19937_64 rng(seed);
    std::vector<LatticePoint> sites;
    bool ok = false;
    for (int attempt = 0; attempt < kMaxRetries && !ok; ++attempt) ok = try_walk(cls, p, n_nodes, rng, sites);
    if (!ok) throw ConstraintError("synthetic walk failed to reach " + std::to_string(n_nodes) +
                                   " sites after " + std::to_string(kMaxRetries) + " retries");

    SyntheticGraph out;
    out.graph = Graph(n_nodes);
    out.sites.resize(n_nodes, 2);
    for (int i = 0; i < n_nodes; ++i) {
        Eigen::Vector2d xy = lattice_position(sites[i], 1.0);
        out.sites.row(i) = xy.transpose();
    }
    // Nearest neighbors on the triangular lattice sit at distance 1; the next
    // shell is at sqrt(3). Any threshold in between gives the same graph.
    for (int i = 0; i < n_nodes; ++i) {
        for (int j = i + 1; j < n_nodes; ++j) {
            int du = sites[j].u - sites[i].u, dv = sites[j].v - sites[i].v;
            bool nn = (du == 1 && dv == 0) || (du == -1 && dv == 0) || (du == 0 && dv == 1) ||
                      (du == 0 && dv == -1) || (du == 1 && dv == -1) || (du == -1 && dv == 1);
            if (nn) out.graph.add_edge(i, j);
        }
    }
    return out;
}

SyntheticDataset generate_synthetic_corpus(double p, int per_class, int n_nodes, uint64_t seed) {
    if (per_class < 1) throw DomainError("per_class must be >= 1");
    SyntheticDataset out;
    out.dataset.name = "synthetic";
    out.dataset.provenance = "walk(p=" + std::to_string(p) + ",n=" + std::to_string(n_nodes) + ")";
    std::mt19937_64 seeder(seed);
    for (int c = 0; c < 2; ++c) {
        SyntheticClass cls = c == 0 ? SyntheticClass::A : SyntheticClass::B;
        for (int i = 0; i < per_class; ++i) {
            SyntheticGraph sg = generate_synthetic(cls, p, n_nodes, seeder());
            sg.graph.label = cls == SyntheticClass::A ? +1 : -1;
            out.dataset.graphs.push_back(std::move(sg.graph));
            out.sites.push_back(std::move(sg.sites));
        }
    }
    return out;
}

}  // namespace qek
