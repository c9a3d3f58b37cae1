#include "qek/dataset.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qek/errors.hpp"

namespace fs = std::filesystem;

namespace qek {

std::vector<int> GraphDataset::labels() const {
    std::vector<int> y;
    y.reserve(graphs.size());
    for (const auto& g : graphs) {
        if (!g.label) throw IntegrityError("dataset '" + name + "' has unlabeled graphs");
        y.push_back(*g.label);
    }
    return y;
}

namespace {

// Locates "<prefix>_A.txt" in the directory and returns the prefix.
std::string detect_prefix(const std::string& directory) {
    const std::string suffix = "_A.txt";
    for (const auto& entry : fs::directory_iterator(directory)) {
        const std::string fn = entry.path().filename().string();
        if (fn.size() > suffix.size() && fn.compare(fn.size() - suffix.size(), suffix.size(), suffix) == 0)
            return fn.substr(0, fn.size() - suffix.size());
    }
    throw ParseError("no *_A.txt edge file found in " + directory);
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

long parse_int(const std::string& tok, const std::string& file, size_t lineno) {
    try {
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError(file + ":" + std::to_string(lineno) + ": expected integer, got '" + tok + "'");
    }
}

}  // namespace

GraphDataset load_tudataset(const std::string& directory) {
    const std::string prefix = detect_prefix(directory);
    const std::string base = (fs::path(directory) / prefix).string();

    // graph_indicator: 1-based graph id per node (node ids are 1-based, global).
    const std::string ind_file = base + "_graph_indicator.txt";
    std::vector<int> node_graph;  // node -> graph index (0-based)
    int num_graphs = 0;
    {
        auto lines = read_lines(ind_file);
        size_t lineno = 0;
        for (const auto& line : lines) {
            ++lineno;
            if (blank(line)) continue;
            long gid = parse_int(line, ind_file, lineno);
            if (gid < 1) throw IntegrityError(ind_file + ":" + std::to_string(lineno) + ": graph id must be >= 1");
            node_graph.push_back(static_cast<int>(gid) - 1);
            num_graphs = std::max(num_graphs, static_cast<int>(gid));
        }
    }
    if (node_graph.empty()) throw ParseError(ind_file + ": empty indicator file");

    // Nodes of each graph are consecutive in TU format; record offsets and sizes.
    std::vector<int> first_node(num_graphs, -1), node_count(num_graphs, 0);
    for (size_t node = 0; node < node_graph.size(); ++node) {
        int g = node_graph[node];
        if (first_node[g] < 0) first_node[g] = static_cast<int>(node);
        ++node_count[g];
    }
    for (int g = 0; g < num_graphs; ++g)
        if (node_count[g] == 0) throw IntegrityError(ind_file + ": graph " + std::to_string(g + 1) + " has no nodes");

    GraphDataset ds;
    ds.name = prefix;
    ds.provenance = "tudataset:" + directory;
    ds.graphs.reserve(num_graphs);
    for (int g = 0; g < num_graphs; ++g) ds.graphs.emplace_back(node_count[g]);

    // Edge list: "u, v" with 1-based global node ids. Treated as directed and
    // symmetrized; duplicates collapse in Graph::add_edge.
    const std::string edge_file = base + "_A.txt";
    {
        auto lines = read_lines(edge_file);
        size_t lineno = 0;
        for (const auto& line : lines) {
            ++lineno;
            if (blank(line)) continue;
            auto comma = line.find(',');
            if (comma == std::string::npos)
                throw ParseError(edge_file + ":" + std::to_string(lineno) + ": expected 'u, v'");
            long u = parse_int(line.substr(0, comma), edge_file, lineno);
            long v = parse_int(line.substr(comma + 1), edge_file, lineno);
            if (u < 1 || v < 1 || u > static_cast<long>(node_graph.size()) || v > static_cast<long>(node_graph.size()))
                throw IntegrityError(edge_file + ":" + std::to_string(lineno) + ": node id out of range");
            int gu = node_graph[u - 1], gv = node_graph[v - 1];
            if (gu != gv)
                throw IntegrityError(edge_file + ":" + std::to_string(lineno) + ": edge crosses graphs " +
                                     std::to_string(gu + 1) + " and " + std::to_string(gv + 1));
            int lu = static_cast<int>(u - 1) - first_node[gu];
            int lv = static_cast<int>(v - 1) - first_node[gu];
            if (lu == lv) continue;  // self-loops are dropped
            ds.graphs[gu].add_edge(lu, lv);
        }
    }

    // Labels, one per graph, mapped to -1/+1 (any positive value -> +1).
    const std::string label_file = base + "_graph_labels.txt";
    {
        auto lines = read_lines(label_file);
        size_t lineno = 0;
        int g = 0;
        for (const auto& line : lines) {
            ++lineno;
            if (blank(line)) continue;
            if (g >= num_graphs) throw IntegrityError(label_file + ": more labels than graphs");
            long raw = parse_int(line, label_file, lineno);
            ds.graphs[g].label = raw > 0 ? +1 : -1;
            ++g;
        }
        if (g != num_graphs) throw IntegrityError(label_file + ": " + std::to_string(g) + " labels for " +
                                                  std::to_string(num_graphs) + " graphs");
    }
    return ds;
}

GraphDataset truncate_dataset(const GraphDataset& ds, int max_nodes) {
    if (max_nodes < 1) throw DomainError("max_nodes must be >= 1");
    GraphDataset out;
    out.name = ds.name;
    out.provenance = ds.provenance + ";truncated<=" + std::to_string(max_nodes);
    for (const auto& g : ds.graphs)
        if (g.node_count() <= max_nodes) out.graphs.push_back(g);
    return out;
}

std::map<std::pair<int, int>, int> size_histogram(const GraphDataset& ds) {
    std::map<std::pair<int, int>, int> hist;
    for (const auto& g : ds.graphs) {
        if (!g.label) throw IntegrityError("size_histogram requires a labeled dataset");
        ++hist[{g.node_count(), *g.label}];
    }
    return hist;
}

std::string dataset_to_json(const GraphDataset& ds) {
    nlohmann::ordered_json j;
    j["name"] = ds.name;
    j["provenance"] = ds.provenance;
    j["graphs"] = nlohmann::ordered_json::array();
    for (const auto& g : ds.graphs) {
        nlohmann::ordered_json jg;
        jg["node_count"] = g.node_count();
        auto edges = nlohmann::ordered_json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        jg["edges"] = std::move(edges);
        if (g.label) jg["label"] = *g.label;
        j["graphs"].push_back(std::move(jg));
    }
    return j.dump(2);
}

GraphDataset dataset_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("dataset JSON: ") + e.what());
    }
    GraphDataset ds;
    ds.name = j.value("name", "");
    ds.provenance = j.value("provenance", "");
    for (const auto& jg : j.at("graphs")) {
        Graph g(jg.at("node_count").get<int>());
        for (const auto& e : jg.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        if (jg.contains("label")) g.label = jg.at("label").get<int>();
        ds.graphs.push_back(std::move(g));
    }
    return ds;
}

}  // namespace qek
