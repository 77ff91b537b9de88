#ifndef CUTLAB_CUT_HPP
#define CUTLAB_CUT_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cutlab/graph.hpp"
#include "cutlab/partition.hpp"

namespace cutlab {

struct NearOptimalEntry {
    Partition partition;
    int gap;
    int dist_to_canonical;
};

struct CutSurvey {
    int b_value = 0;
    std::optional<Partition> canonical;
    std::vector<NearOptimalEntry> near_optimal;
    int gap_bound = -1;  // -1: near-optimal enumeration not requested
    int max_pairwise_optimal_distance = 0;
};

namespace detail {

/// Edges of g leaving the vertex set given by 0-indexed bits a.
inline int cross_edges(const Graph& g, const Bitvec& a) {
    int c = 0;
    a.for_each([&](int i) { c += g.row(i + 1).count() - g.row(i + 1).count_and(a); });
    return c;
}

/// Canonical bipartition order: bipartitions are represented by the part
/// containing vertex 1, ordered by that part's characteristic bitvector read
/// as a binary number (vertex v contributes 2^(v-1)), ascending. Code k in
/// [0, 2^(n-1)) has bit j set iff vertex j+2 joins vertex 1's part.
inline Bitvec part_bits_from_code(int n, std::uint64_t code) {
    Bitvec a(n);
    a.set(0);
    for (int j = 0; j + 2 <= n; ++j)
        if ((code >> j) & 1) a.set(j + 1);
    return a;
}

inline Partition partition_from_part_bits(int n, const Bitvec& a) {
    return Partition::bipartition(n, VertexSet::from_bits(a));
}

/// Exhaustive scan over all 2^(n-1) bipartitions in canonical order.
/// Returns (b, canonical part bits).
inline std::pair<int, Bitvec> max_cut_2_enumerate(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    Bitvec bestBits(n);
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << (n - 1)); ++code) {
        Bitvec a = part_bits_from_code(n, code);
        int c = cross_edges(g, a);
        if (c > best) {
            best = c;
            bestBits = a;
        }
    }
    return {best, bestBits};
}

/// Branch-and-bound over vertex assignments. Vertices are fixed from n down
/// to 2 (vertex 1 pinned to part A), trying "B" before "A" so that leaves
/// appear in canonical order; with strict improvement recording, the reported
/// optimum is the canonical one.
class MaxCut2Solver {
public:
    explicit MaxCut2Solver(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    std::pair<int, Bitvec> solve() {
        best_ = -1;
        a_ = Bitvec(n_);
        b_ = Bitvec(n_);
        a_.set(0);
        rec(n_, 0);
        return {best_, bestBits_};
    }

private:
    void rec(int v, int cur) {
        if (v == 1) {
            if (cur > best_) {
                best_ = cur;
                bestBits_ = a_;
            }
            return;
        }
        if (upper_bound(v, cur) < best_) return;
        // remaining vertices are 2..v; assign v now
        const Bitvec& row = g_.row(v);
        int toA = row.count_and(a_);
        int toB = row.count_and(b_);
        b_.set(v - 1);
        rec(v - 1, cur + toA);
        b_.reset(v - 1);
        a_.set(v - 1);
        rec(v - 1, cur + toB);
        a_.reset(v - 1);
    }

    /// cur + per-vertex best attachment + all edges among unassigned.
    int upper_bound(int v, int cur) const {
        int ub = cur;
        Bitvec unassigned(n_);
        for (int u = 2; u <= v; ++u) unassigned.set(u - 1);
        int among = 0;
        for (int u = 2; u <= v; ++u) {
            const Bitvec& row = g_.row(u);
            ub += std::max(row.count_and(a_), row.count_and(b_));
            among += row.count_and(unassigned);
        }
        return ub + among / 2;
    }

    const Graph& g_;
    int n_;
    int best_ = -1;
    Bitvec a_, b_, bestBits_;
};

/// Exhaustive l-cut over restricted-growth assignments (part indices
/// canonicalized by first occurrence), lexicographic; strict improvements
/// yield the canonical optimum. Prunes with a remaining-edges bound.
class MaxCutLSolver {
public:
    MaxCutLSolver(const Graph& g, int l) : g_(g), n_(g.vertex_count()), l_(l) {}

    std::pair<int, std::vector<int>> solve() {
        assign_.assign(n_ + 1, -1);
        parts_.assign(l_, Bitvec(n_));
        // suffix_[v]: edges whose larger endpoint is >= v (undecided at depth v)
        suffix_.assign(n_ + 2, 0);
        for (int v = n_; v >= 1; --v) {
            int c = 0;
            for (int u = 1; u < v; ++u)
                if (g_.has_edge(u, v)) ++c;
            suffix_[v] = suffix_[v + 1] + c;
        }
        best_ = -1;
        rec(1, 0, 0);
        return {best_, bestAssign_};
    }

private:
    void rec(int v, int used, int cur) {
        if (v > n_) {
            if (cur > best_) {
                best_ = cur;
                bestAssign_.assign(assign_.begin() + 1, assign_.end());
            }
            return;
        }
        if (cur + suffix_[v] < best_) return;
        int limit = std::min(used + 1, l_);
        for (int j = 0; j < limit; ++j) {
            int inside = g_.row(v).count_and(parts_[j]);
            int toAssigned = 0;
            for (int k = 0; k < used; ++k) toAssigned += g_.row(v).count_and(parts_[k]);
            parts_[j].set(v - 1);
            assign_[v] = j;
            rec(v + 1, std::max(used, j + 1), cur + toAssigned - inside);
            parts_[j].reset(v - 1);
            assign_[v] = -1;
        }
    }

    const Graph& g_;
    int n_, l_;
    std::vector<int> assign_, bestAssign_;
    std::vector<Bitvec> parts_;
    std::vector<int> suffix_;
    int best_ = -1;
};

inline Partition partition_from_assignment(int n, int l, const std::vector<int>& assign) {
    std::vector<VertexSet> parts(l, VertexSet(n));
    for (int v = 1; v <= n; ++v) parts[assign[v - 1]].add(v);
    return Partition(n, parts);
}

inline void check_feasible(const Graph& g, int l) {
    const int n = g.vertex_count();
    if (l < 2) throw std::invalid_argument("max_cut: l must be >= 2");
    if (l == 2) {
        if (n > 28) throw std::invalid_argument("max_cut: exact bipartite solve limited to n <= 28");
    } else {
        double bits = n * std::log2(double(l));
        if (bits > 28.0)
            throw std::invalid_argument("max_cut: l^n enumeration infeasible (need n*log2(l) <= 28)");
    }
}

}  // namespace detail

/// Exact b(G) (or max l-cut) with the canonical optimal partition.
inline CutSurvey max_cut(const Graph& g, int l = 2) {
    detail::check_feasible(g, l);
    const int n = g.vertex_count();
    CutSurvey out;
    if (l == 2) {
        auto [b, bits] = n <= 20 ? detail::max_cut_2_enumerate(g)
                                 : detail::MaxCut2Solver(g).solve();
        out.b_value = b;
        out.canonical = detail::partition_from_part_bits(n, bits);
    } else {
        auto [b, assign] = detail::MaxCutLSolver(g, l).solve();
        out.b_value = b;
        out.canonical = detail::partition_from_assignment(n, l, assign);
    }
    if (2 * out.b_value < g.edge_count())
        throw std::logic_error("max_cut: solver returned b < m/2");  // unreachable
    return out;
}

/// gap(G;Pi) = b(G) - |E(G;Pi)|.
inline int gap(const Graph& g, const Partition& pi) {
    return max_cut(g, pi.part_count()).b_value - cut_size(g, pi);
}

/// gap(G;Pi,Pi') = |E(G;Pi)| - |E(G;Pi')| (may be negative).
inline int pair_gap(const Graph& g, const Partition& pi, const Partition& pi2) {
    return cut_size(g, pi) - cut_size(g, pi2);
}

/// All partitions with gap <= g, annotated with gap and distance to the
/// canonical optimum, plus the maximum pairwise distance among optima.
inline CutSurvey enumerate_near_optimal(const Graph& g, int gap_bound, int l = 2) {
    detail::check_feasible(g, l);
    const int n = g.vertex_count();
    CutSurvey out = max_cut(g, l);
    out.gap_bound = gap_bound;
    const Partition& canon = *out.canonical;

    auto consider = [&](Partition pi, int cut) {
        int gp = out.b_value - cut;
        if (gp <= gap_bound) {
            int dist = partition_distance(pi, canon);
            out.near_optimal.push_back({std::move(pi), gp, dist});
        }
    };
    if (l == 2) {
        for (std::uint64_t code = 0; code < (std::uint64_t(1) << (n - 1)); ++code) {
            Bitvec a = detail::part_bits_from_code(n, code);
            int c = detail::cross_edges(g, a);
            if (out.b_value - c <= gap_bound) consider(detail::partition_from_part_bits(n, a), c);
        }
    } else {
        // full RGS scan, no pruning (we need every near-optimal assignment)
        std::vector<int> assign(n, 0);
        auto rec = [&](auto&& self, int v, int used, int cur, std::vector<Bitvec>& parts) -> void {
            if (v > n) {
                consider(detail::partition_from_assignment(n, l, assign), cur);
                return;
            }
            int limit = std::min(used + 1, l);
            for (int j = 0; j < limit; ++j) {
                int toAssigned = 0;
                for (int k = 0; k < used; ++k) toAssigned += g.row(v).count_and(parts[k]);
                int inside = g.row(v).count_and(parts[j]);
                parts[j].set(v - 1);
                assign[v - 1] = j;
                self(self, v + 1, std::max(used, j + 1), cur + toAssigned - inside, parts);
                parts[j].reset(v - 1);
            }
        };
        std::vector<Bitvec> parts(l, Bitvec(n));
        rec(rec, 1, 0, 0, parts);
    }
    // maximum pairwise distance among gap-0 partitions
    std::vector<const Partition*> optima;
    for (const auto& e : out.near_optimal)
        if (e.gap == 0) optima.push_back(&e.partition);
    for (std::size_t i = 0; i < optima.size(); ++i)
        for (std::size_t j = i + 1; j < optima.size(); ++j)
            out.max_pairwise_optimal_distance = std::max(
                out.max_pairwise_optimal_distance, partition_distance(*optima[i], *optima[j]));
    return out;
}

/// Ordered quadruple (V1, W1, V2, W2) of disjoint sets covering 1..n.
struct OrderedQuad {
    VertexSet v1, w1, v2, w2;

    OrderedQuad(VertexSet v1_, VertexSet w1_, VertexSet v2_, VertexSet w2_)
        : v1(std::move(v1_)), w1(std::move(w1_)), v2(std::move(v2_)), w2(std::move(w2_)) {
        int n = v1.universe();
        if (w1.universe() != n || v2.universe() != n || w2.universe() != n)
            throw std::invalid_argument("quad: universe mismatch");
        Bitvec seen(n);
        for (const VertexSet* s : {&v1, &w1, &v2, &w2}) {
            if (seen.intersects(s->bits())) throw std::invalid_argument("quad: parts overlap");
            seen |= s->bits();
        }
        if (seen.count() != n) throw std::invalid_argument("quad: parts do not cover 1..n");
    }

    long size() const { return long(v1.size()) * w1.size() + long(v2.size()) * w2.size(); }
};

/// ebar(G;Gamma) = |Gamma| - e(G;V1,W1) - e(G;V2,W2).
inline long non_edges_across(const Graph& g, const OrderedQuad& q) {
    if (q.v1.universe() != g.vertex_count())
        throw std::invalid_argument("non_edges_across: size mismatch");
    return q.size() - edge_count(g, q.v1, q.w1) - edge_count(g, q.v2, q.w2);
}

/// The derived quads Gamma_X, Gamma_Y of a pair (Pi, Pi*), after relabeling
/// so that |A*| >= |B*| and s = |A∩B*| + |A*∩B| <= |A∩A*| + |B∩B*|.
/// Satisfies |Gamma_X| + |Gamma_Y| = s(n-s).
inline std::pair<OrderedQuad, OrderedQuad> derived_quads(const Partition& pi,
                                                         const Partition& pistar) {
    if (pi.part_count() != 2 || pistar.part_count() != 2)
        throw std::invalid_argument("derived_quads: bipartitions only");
    if (pi.n() != pistar.n()) throw std::invalid_argument("derived_quads: n mismatch");
    Bitvec as = pistar.part(0).bits(), bs = pistar.part(1).bits();
    if (as.count() < bs.count()) std::swap(as, bs);
    Bitvec a = pi.part(0).bits(), b = pi.part(1).bits();
    int s = a.count_and(bs) + as.count_and(b);
    int keep = a.count_and(as) + b.count_and(bs);
    if (s > keep) std::swap(a, b);
    auto inter = [&](const Bitvec& x, const Bitvec& y) { return VertexSet::from_bits(x & y); };
    OrderedQuad gx(inter(as, b), inter(as, a), inter(bs, a), inter(bs, b));
    OrderedQuad gy(inter(as, b), inter(bs, b), inter(bs, a), inter(as, a));
    return {gx, gy};
}

/// min over optimal nontrivial bipartitions of |A||B| - e(G;Pi).
inline long min_nonedges_optimal(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("min_nonedges_optimal: need n >= 2");
    detail::check_feasible(g, 2);
    int b = max_cut(g, 2).b_value;
    long best = -1;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << (n - 1)); ++code) {
        Bitvec a = detail::part_bits_from_code(n, code);
        int sa = a.count();
        if (sa == n) continue;  // empty opposite part
        int c = detail::cross_edges(g, a);
        if (c != b) continue;
        long val = long(sa) * (n - sa) - c;
        if (best < 0 || val < best) best = val;
    }
    return best;
}

}  // namespace cutlab

#endif
