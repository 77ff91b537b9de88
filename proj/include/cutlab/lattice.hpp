#ifndef CUTLAB_LATTICE_HPP
#define CUTLAB_LATTICE_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cutlab/graph.hpp"
#include "cutlab/partition.hpp"
#include "cutlab/randgen.hpp"

namespace cutlab {

namespace detail {

struct Kahan {
    double sum = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::uint64_t total = pair_count(n);
    for (std::uint64_t i = 0; i < total; ++i)
        if ((mask >> i) & 1) edges.push_back(edge_from_index(n, i));
    return Graph::build(n, edges);
}

inline void check_same_n(const Graph& g, const Graph& h, const Partition& pi) {
    if (g.vertex_count() != h.vertex_count() || g.vertex_count() != pi.n())
        throw std::invalid_argument("lattice: graph/partition size mismatch");
}

}  // namespace detail

/// G <= H in the partition order: every cross edge of G is in H and every
/// inside edge of H is in G.
inline bool lattice_leq(const Graph& g, const Graph& h, const Partition& pi) {
    detail::check_same_n(g, h, pi);
    const int n = g.vertex_count();
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            bool cross = pi.part_of(u) != pi.part_of(v);
            if (cross) {
                if (g.has_edge(u, v) && !h.has_edge(u, v)) return false;
            } else {
                if (h.has_edge(u, v) && !g.has_edge(u, v)) return false;
            }
        }
    return true;
}

/// -1, 0, +1 for G < H, G = H, G > H; nullopt when incomparable.
inline std::optional<int> lattice_compare(const Graph& g, const Graph& h, const Partition& pi) {
    bool le = lattice_leq(g, h, pi);
    bool ge = lattice_leq(h, g, pi);
    if (le && ge) return 0;
    if (le) return -1;
    if (ge) return 1;
    return std::nullopt;
}

namespace detail {
inline Graph combine(const Graph& g, const Graph& h, const Partition& pi, bool crossUnion) {
    check_same_n(g, h, pi);
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            bool inG = g.has_edge(u, v), inH = h.has_edge(u, v);
            bool cross = pi.part_of(u) != pi.part_of(v);
            bool keep = (cross == crossUnion) ? (inG || inH) : (inG && inH);
            if (keep) edges.push_back({u, v});
        }
    return Graph::build(n, edges);
}
}  // namespace detail

/// Join: union of cross edges, intersection of inside edges.
inline Graph lattice_join(const Graph& g, const Graph& h, const Partition& pi) {
    return detail::combine(g, h, pi, true);
}

/// Meet: intersection of cross edges, union of inside edges.
inline Graph lattice_meet(const Graph& g, const Graph& h, const Partition& pi) {
    return detail::combine(g, h, pi, false);
}

/// Product measure of G(n,p): p^e(G) (1-p)^(C(n,2)-e(G)).
inline double measure_mu(const Graph& g, double p) {
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("measure_mu: p must be in (0,1)");
    const double e = g.edge_count();
    const double total = double(pair_count(g.vertex_count()));
    return std::pow(p, e) * std::pow(1.0 - p, total - e);
}

inline double log_measure_mu(const Graph& g, double p) {
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("measure_mu: p must be in (0,1)");
    const double e = g.edge_count();
    const double total = double(pair_count(g.vertex_count()));
    return e * std::log(p) + (total - e) * std::log1p(-p);
}

struct FkgReport {
    double e_fg = 0, e_f = 0, e_g = 0;
    double slack = 0;  // e_f * e_g - e_fg; nonnegative when the bound holds
    bool holds = false;
};

/// Exhaustive check of E[fg] <= E[f]E[g] for f increasing and g decreasing
/// in the partition order, over all 2^C(n,2) graphs under mu.
template <typename F, typename G>
FkgReport fkg_check(int n, double p, F&& f, G&& g, double tol = 1e-12) {
    if (n > 5) throw std::invalid_argument("fkg_check: exhaustive check limited to n <= 5");
    const std::uint64_t total = std::uint64_t(1) << pair_count(n);
    detail::Kahan efg, ef, eg;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph gr = detail::graph_from_mask(n, mask);
        double mu = measure_mu(gr, p);
        double fv = double(f(gr)), gv = double(g(gr));
        efg.add(mu * fv * gv);
        ef.add(mu * fv);
        eg.add(mu * gv);
    }
    FkgReport out;
    out.e_fg = efg.sum;
    out.e_f = ef.sum;
    out.e_g = eg.sum;
    out.slack = out.e_f * out.e_g - out.e_fg;
    out.holds = out.e_fg <= out.e_f * out.e_g + tol;
    return out;
}

struct MonotonicityReport {
    long pairs_checked = 0;
    long violations = 0;
    std::optional<std::pair<Graph, Graph>> first_violation;  // (lower, upper)
};

/// Checks an event over every one-edge-difference comparable pair of graphs
/// on [n]. increasing: event(lower) implies event(upper); decreasing: the
/// reverse.
template <typename F>
MonotonicityReport monotonicity_audit(int n, const Partition& pi, F&& event, bool increasing) {
    if (n > 5) throw std::invalid_argument("monotonicity_audit: exhaustive check limited to n <= 5");
    if (pi.n() != n) throw std::invalid_argument("monotonicity_audit: partition size mismatch");
    const std::uint64_t pairs = pair_count(n);
    const std::uint64_t total = std::uint64_t(1) << pairs;
    MonotonicityReport out;
    std::vector<bool> cross(pairs);
    for (std::uint64_t i = 0; i < pairs; ++i) {
        auto [u, v] = detail::edge_from_index(n, i);
        cross[i] = pi.part_of(u) != pi.part_of(v);
    }
    std::vector<char> value(total);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        value[mask] = event(detail::graph_from_mask(n, mask)) ? 1 : 0;
    for (std::uint64_t mask = 0; mask < total; ++mask)
        for (std::uint64_t i = 0; i < pairs; ++i) {
            if ((mask >> i) & 1) continue;
            std::uint64_t with = mask | (std::uint64_t(1) << i);
            // adding a cross edge moves up; adding an inside edge moves down
            std::uint64_t lower = cross[i] ? mask : with;
            std::uint64_t upper = cross[i] ? with : mask;
            ++out.pairs_checked;
            bool ok = increasing ? (!value[lower] || value[upper])
                                 : (!value[upper] || value[lower]);
            if (!ok) {
                ++out.violations;
                if (!out.first_violation)
                    out.first_violation = {detail::graph_from_mask(n, lower),
                                           detail::graph_from_mask(n, upper)};
            }
        }
    return out;
}

}  // namespace cutlab

#endif
