#ifndef CUTLAB_IO_HPP
#define CUTLAB_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutlab/graph.hpp"
#include "cutlab/partition.hpp"

namespace cutlab {

/// Edge-list text format: first line "n m", then m lines "u v" with u < v.
inline Graph read_edge_list(std::istream& in) {
    int n = 0;
    long m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        edges.push_back({u, v});
    }
    return Graph::build(n, edges);
}

/// Canonical output: edges sorted lexicographically.
inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

/// Parses "1,2|3,4" style partition strings; empty segments are empty parts.
inline Partition parse_partition(const std::string& s, int n) {
    std::vector<VertexSet> parts;
    std::string seg;
    std::istringstream ss(s);
    while (std::getline(ss, seg, '|')) {
        VertexSet part(n);
        std::istringstream ps(seg);
        std::string item;
        while (std::getline(ps, item, ','))
            if (!item.empty()) part.add(std::stoi(item));
        parts.push_back(std::move(part));
    }
    if (!s.empty() && s.back() == '|') parts.push_back(VertexSet(n));
    return Partition(n, parts);
}

/// Parses "1-2,3-4" style edge lists.
inline std::vector<Edge> parse_edges(const std::string& s) {
    std::vector<Edge> out;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw std::invalid_argument("bad edge '" + item + "': expected u-v");
        out.push_back(make_edge(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))));
    }
    return out;
}

}  // namespace cutlab

#endif
