#ifndef CUTLAB_RANDGEN_HPP
#define CUTLAB_RANDGEN_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "cutlab/graph.hpp"

namespace cutlab {

/// (master_seed, stream_index) fully determines a sampler's output, so
/// parallel trials replay deterministically.
struct RngSeed {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(const RngSeed& seed) {
    // mt19937_64's raw output is fully specified by the standard; distributions
    // are not, so all draws below go through our own bounded samplers.
    return std::mt19937_64(splitmix64(seed.master_seed ^ splitmix64(seed.stream_index)));
}

/// Uniform integer in [0, bound), rejection method.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::logic_error("uniform_below: zero bound");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    // threshold comparison on the raw 64-bit stream
    long double t = (long double)p * 18446744073709551616.0L;
    return (long double)rng() < t;
}

/// Floyd's algorithm: uniform k-subset of {0, ..., total-1}, returned sorted.
inline std::vector<std::uint64_t> sample_subset(std::mt19937_64& rng, std::uint64_t total,
                                                std::uint64_t k) {
    std::vector<std::uint64_t> chosen;
    chosen.reserve(k);
    auto contains = [&](std::uint64_t x) {
        for (auto c : chosen)
            if (c == x) return true;
        return false;
    };
    for (std::uint64_t j = total - k; j < total; ++j) {
        std::uint64_t t = uniform_below(rng, j + 1);
        chosen.push_back(contains(t) ? j : t);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

inline Edge edge_from_index(int n, std::uint64_t idx) {
    // lexicographic pair order: (1,2),(1,3),...,(1,n),(2,3),...
    std::uint64_t row = 0, remaining = idx;
    for (int u = 1; u < n; ++u) {
        std::uint64_t cnt = n - u;
        if (remaining < cnt) return {u, int(u + 1 + remaining)};
        remaining -= cnt;
        ++row;
    }
    throw std::logic_error("edge index out of range");
}

}  // namespace detail

inline std::uint64_t pair_count(int n) { return std::uint64_t(n) * (n - 1) / 2; }

/// G_{n,p}: each pair included independently with probability p.
inline Graph sample_gnp(int n, double p, const RngSeed& seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_gnp: p must be in [0,1]");
    auto rng = detail::make_rng(seed);
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (detail::bernoulli(rng, p)) edges.push_back({u, v});
    return Graph::build(n, edges);
}

/// G_{n,M}: uniformly random M-edge graph, exact uniformity via Floyd's
/// subset sampling over pair indices.
inline Graph sample_gnm(int n, std::uint64_t m, const RngSeed& seed) {
    if (m > pair_count(n)) throw std::invalid_argument("sample_gnm: M exceeds C(n,2)");
    auto rng = detail::make_rng(seed);
    std::vector<Edge> edges;
    for (auto idx : detail::sample_subset(rng, pair_count(n), m))
        edges.push_back(detail::edge_from_index(n, idx));
    return Graph::build(n, edges);
}

/// Adds t distinct non-edges chosen uniformly at random without replacement.
inline Graph evolve(const Graph& g, std::uint64_t t, const RngSeed& seed) {
    const int n = g.vertex_count();
    std::vector<Edge> nonEdges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.has_edge(u, v)) nonEdges.push_back({u, v});
    if (t > nonEdges.size())
        throw std::invalid_argument("evolve: t exceeds non-edge count");
    if (t == 0) return g;
    auto rng = detail::make_rng(seed);
    std::vector<Edge> extra;
    for (auto idx : detail::sample_subset(rng, nonEdges.size(), t))
        extra.push_back(nonEdges[idx]);
    return g.with_edges_added(extra);
}

struct TriangleFreeSample {
    std::optional<Graph> graph;  // empty: rejection budget exhausted
    std::uint64_t attempts = 0;
};

/// Rejection sampler for the uniform triangle-free graph with n vertices and
/// m edges. Exactly uniform over its support; fails loudly past max_tries.
inline TriangleFreeSample sample_uniform_triangle_free(int n, std::uint64_t m,
                                                       const RngSeed& seed,
                                                       std::uint64_t max_tries = 10000) {
    if (n > 30)
        throw std::invalid_argument("sample_uniform_triangle_free: rejection limited to n <= 30");
    if (m > pair_count(n))
        throw std::invalid_argument("sample_uniform_triangle_free: m exceeds C(n,2)");
    auto rng = detail::make_rng(seed);
    TriangleFreeSample out;
    for (std::uint64_t k = 0; k < max_tries; ++k) {
        ++out.attempts;
        std::vector<Edge> edges;
        for (auto idx : detail::sample_subset(rng, pair_count(n), m))
            edges.push_back(detail::edge_from_index(n, idx));
        Graph g = Graph::build(n, edges);
        if (!has_clique(g, 3)) {
            out.graph = std::move(g);
            return out;
        }
    }
    return out;
}

}  // namespace cutlab

#endif
