#ifndef CUTLAB_GRAPH_HPP
#define CUTLAB_GRAPH_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cutlab/bitvec.hpp"

namespace cutlab {

using Edge = std::pair<int, int>;  // (u, v) with 1 <= u < v <= n

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Subset of the vertex set [n] = {1, ..., n}.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : bits_(n) {}
    VertexSet(int n, std::initializer_list<int> vs) : bits_(n) {
        for (int v : vs) add(v);
    }

    int universe() const { return bits_.capacity(); }
    bool contains(int v) const { return v >= 1 && v <= universe() && bits_.test(v - 1); }
    void add(int v) {
        if (v < 1 || v > universe())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(universe()));
        bits_.set(v - 1);
    }
    void remove(int v) {
        if (v >= 1 && v <= universe()) bits_.reset(v - 1);
    }
    int size() const { return bits_.count(); }
    bool empty() const { return bits_.empty(); }

    const Bitvec& bits() const { return bits_; }
    Bitvec& bits() { return bits_; }

    std::vector<int> members() const {
        std::vector<int> out;
        bits_.for_each([&](int i) { out.push_back(i + 1); });
        return out;
    }

    bool operator==(const VertexSet& o) const { return bits_ == o.bits_; }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 1; v <= n; ++v) s.add(v);
        return s;
    }
    static VertexSet from_bits(Bitvec b) {
        VertexSet s;
        s.bits_ = std::move(b);
        return s;
    }

private:
    Bitvec bits_;
};

/// Immutable simple graph on vertices 1..n with bitset adjacency rows.
class Graph {
public:
    /// Validates and builds; rejects out-of-range endpoints, loops and
    /// duplicate edges, naming the offending pair.
    static Graph build(int n, const std::vector<Edge>& edges) {
        if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, Bitvec(n));
        for (auto [u, v] : edges) {
            if (u == v)
                throw std::invalid_argument("loop at vertex " + std::to_string(u));
            if (u < 1 || v < 1 || u > n || v > n || u > v)
                throw std::invalid_argument("bad edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + "): endpoints must satisfy 1 <= u < v <= n");
            if (g.adj_[u - 1].test(v - 1))
                throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ")");
            g.adj_[u - 1].set(v - 1);
            g.adj_[v - 1].set(u - 1);
        }
        g.m_ = int(edges.size());
        return g;
    }

    static Graph complete(int n) {
        std::vector<Edge> es;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) es.push_back({u, v});
        return build(n, es);
    }

    static Graph cycle(int n) {
        std::vector<Edge> es;
        for (int v = 1; v < n; ++v) es.push_back({v, v + 1});
        if (n >= 3) es.push_back({1, n});
        return build(n, es);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        return adj_[u - 1].test(v - 1);
    }
    int degree(int v) const { return adj_[v - 1].count(); }

    /// Neighborhood of v as a 0-indexed bit row.
    const Bitvec& row(int v) const { return adj_[v - 1]; }

    VertexSet neighbors(int v) const { return VertexSet::from_bits(adj_[v - 1]); }

    /// Sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 1; u <= n_; ++u)
            adj_[u - 1].for_each([&](int i) {
                if (i + 1 > u) out.push_back({u, i + 1});
            });
        return out;
    }

    Graph with_edges_added(const std::vector<Edge>& extra) const {
        auto es = edges();
        es.insert(es.end(), extra.begin(), extra.end());
        return build(n_, es);
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    Graph() = default;
    int n_ = 0;
    int m_ = 0;
    std::vector<Bitvec> adj_;
};

namespace detail {
inline void check_vertex_set(const Graph& g, const VertexSet& x, const char* name) {
    if (x.universe() != g.vertex_count())
        throw std::invalid_argument(std::string(name) + ": universe mismatch with graph");
}
}  // namespace detail

/// e(G;X): edges with both endpoints in X.
inline int edge_count(const Graph& g, const VertexSet& x) {
    detail::check_vertex_set(g, x, "X");
    int c = 0;
    x.bits().for_each([&](int i) { c += g.row(i + 1).count_and(x.bits()); });
    return c / 2;
}

/// e(G;X,Y): edges with one endpoint in X and one in Y; edges inside X∩Y
/// are counted only once.
inline int edge_count(const Graph& g, const VertexSet& x, const VertexSet& y) {
    detail::check_vertex_set(g, x, "X");
    detail::check_vertex_set(g, y, "Y");
    int c = 0;
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v)
            if (g.has_edge(u, v) &&
                ((x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u))))
                ++c;
    return c;
}

struct CliqueList {
    std::vector<VertexSet> cliques;  // lexicographic by member list
    bool truncated = false;
};

/// All vertex sets of size l inducing complete subgraphs, lexicographic,
/// truncated at limit. An untruncated empty list certifies K_l-freeness.
inline CliqueList enumerate_cliques(const Graph& g, int l, int limit = 1 << 20) {
    if (l < 2) throw std::invalid_argument("clique size must be >= 2");
    if (limit < 1) throw std::invalid_argument("limit must be >= 1");
    CliqueList out;
    const int n = g.vertex_count();
    std::vector<int> stack;
    // DFS in increasing vertex order; cand holds common neighbors above the
    // last chosen vertex, so output comes out lexicographically sorted.
    auto rec = [&](auto&& self, const Bitvec& cand, int depth) -> void {
        if (out.truncated) return;
        if (depth == l) {
            if (int(out.cliques.size()) == limit) {
                out.truncated = true;
                return;
            }
            VertexSet s(n);
            for (int v : stack) s.add(v);
            out.cliques.push_back(std::move(s));
            return;
        }
        // Not enough room below n to finish the clique: cheap cutoff.
        cand.for_each([&](int i) {
            if (out.truncated) return;
            stack.push_back(i + 1);
            Bitvec next = cand & g.row(i + 1);
            // keep only vertices after i
            Bitvec mask(n);
            for (int j = i + 1; j < n; ++j) mask.set(j);
            next &= mask;
            self(self, next, depth + 1);
            stack.pop_back();
        });
    };
    Bitvec all(n);
    for (int i = 0; i < n; ++i) all.set(i);
    rec(rec, all, 0);
    return out;
}

inline bool has_clique(const Graph& g, int l) {
    return !enumerate_cliques(g, l, 1).cliques.empty();
}

/// |∩_{v∈T} Γ(G;v) ∩ U|.
inline int common_neighborhood(const Graph& g, const std::vector<int>& t, const VertexSet& u) {
    if (t.empty()) throw std::invalid_argument("tuple T must be nonempty");
    detail::check_vertex_set(g, u, "U");
    Bitvec acc = g.row(t[0]);
    for (std::size_t i = 1; i < t.size(); ++i) acc &= g.row(t[i]);
    return acc.count_and(u.bits());
}

}  // namespace cutlab

#endif
