#ifndef CUTLAB_EXTREMAL_HPP
#define CUTLAB_EXTREMAL_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutlab/cut.hpp"
#include "cutlab/graph.hpp"
#include "cutlab/partition.hpp"

namespace cutlab {

namespace detail {

/// 128-bit edge mask; edge slots follow the graph's lexicographic edge list.
struct EdgeMask {
    std::uint64_t lo = 0, hi = 0;

    bool test(int i) const { return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1) != 0; }
    void set(int i) { (i < 64 ? lo : hi) |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { (i < 64 ? lo : hi) &= ~(std::uint64_t(1) << (i & 63)); }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool none() const { return lo == 0 && hi == 0; }

    EdgeMask operator&(const EdgeMask& o) const { return {lo & o.lo, hi & o.hi}; }
    EdgeMask operator|(const EdgeMask& o) const { return {lo | o.lo, hi | o.hi}; }
    EdgeMask and_not(const EdgeMask& o) const { return {lo & ~o.lo, hi & ~o.hi}; }
    bool intersects(const EdgeMask& o) const { return (lo & o.lo) | (hi & o.hi); }
    bool subset_of(const EdgeMask& o) const { return !(lo & ~o.lo) && !(hi & ~o.hi); }
    bool operator==(const EdgeMask& o) const { return lo == o.lo && hi == o.hi; }
    bool operator<(const EdgeMask& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }

    template <typename F>
    void for_each(F&& f) const {
        std::uint64_t w = lo;
        while (w) {
            f(std::countr_zero(w));
            w &= w - 1;
        }
        w = hi;
        while (w) {
            f(64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
};

/// Index map between a graph's edges and mask slots.
class EdgeIndexer {
public:
    explicit EdgeIndexer(const Graph& g) : n_(g.vertex_count()), edges_(g.edges()) {
        if (edges_.size() > 128)
            throw std::invalid_argument("edge mask limited to m <= 128 edges");
        index_.assign(std::size_t(n_) * n_, -1);
        for (int i = 0; i < int(edges_.size()); ++i) {
            auto [u, v] = edges_[i];
            index_[(u - 1) * n_ + (v - 1)] = i;
            index_[(v - 1) * n_ + (u - 1)] = i;
        }
    }

    int size() const { return int(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(int i) const { return edges_[i]; }
    int index(int u, int v) const { return index_[(u - 1) * n_ + (v - 1)]; }
    bool has(int u, int v) const { return index(u, v) >= 0; }

    EdgeMask full() const {
        EdgeMask m;
        for (int i = 0; i < size(); ++i) m.set(i);
        return m;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<int> index_;
};

/// Minimum set of allowed edges whose deletion destroys every clique in the
/// list. Branch-and-bound on an uncovered clique with a greedy edge-disjoint
/// packing lower bound. Cliques are given as edge masks.
class HittingSetSolver {
public:
    HittingSetSolver(std::vector<EdgeMask> cliques, EdgeMask allowed)
        : cliques_(std::move(cliques)), allowed_(allowed) {}

    /// Least k <= budget such that k deletions suffice; nullopt if > budget
    /// or infeasible (a clique has no allowed edge). When the node budget
    /// runs out, best-so-far is returned and exceeded() reports it.
    std::optional<int> solve(int budget, long node_budget = 200'000'000) {
        for (const auto& c : cliques_)
            if ((c & allowed_).none()) return std::nullopt;
        best_ = budget + 1;
        nodes_ = 0;
        node_budget_ = node_budget;
        exceeded_ = false;
        rec(EdgeMask{}, EdgeMask{}, 0);
        if (best_ > budget) return std::nullopt;
        return best_;
    }

    bool exceeded() const { return exceeded_; }

    /// All minimal deletion sets of size exactly k, as masks; capped.
    std::vector<EdgeMask> enumerate(int k, std::size_t cap, bool& truncated) {
        target_ = k;
        cap_ = cap;
        truncated_ = false;
        found_.clear();
        recEnum(EdgeMask{}, EdgeMask{}, 0);
        truncated = truncated_;
        return {found_.begin(), found_.end()};
    }

    long nodes() const { return nodes_; }

private:
    const EdgeMask* first_alive(const EdgeMask& deleted) const {
        for (const auto& c : cliques_)
            if (!c.intersects(deleted)) return &c;
        return nullptr;
    }

    /// Greedy edge-disjoint packing of cliques untouched by `deleted`.
    int packing_bound(const EdgeMask& deleted) const {
        EdgeMask used = deleted;
        int cnt = 0;
        for (const auto& c : cliques_)
            if (!c.intersects(used)) {
                used = used | c;
                ++cnt;
            }
        return cnt;
    }

    // Children partition the solution space by the first branchable edge of
    // the chosen clique that gets deleted; earlier edges are frozen as kept,
    // so no deletion set is ever visited twice.
    void rec(EdgeMask deleted, EdgeMask kept, int count) {
        if (exceeded_) return;
        if (++nodes_ > node_budget_) {
            exceeded_ = true;
            return;
        }
        if (count >= best_) return;
        const EdgeMask* c = first_alive(deleted);
        if (!c) {
            best_ = count;
            return;
        }
        if (count + packing_bound(deleted) >= best_) return;
        EdgeMask branch = (*c & allowed_).and_not(kept);
        EdgeMask frozen = kept;
        branch.for_each([&](int e) {
            EdgeMask d = deleted;
            d.set(e);
            rec(d, frozen, count + 1);
            frozen.set(e);
        });
    }

    void recEnum(EdgeMask deleted, EdgeMask kept, int count) {
        if (truncated_) return;
        const EdgeMask* c = first_alive(deleted);
        if (!c) {
            if (count == target_) {
                if (found_.size() >= cap_ && !found_.count(deleted)) {
                    truncated_ = true;
                    return;
                }
                found_.insert(deleted);
            }
            return;
        }
        if (count + packing_bound(deleted) > target_) return;
        EdgeMask branch = (*c & allowed_).and_not(kept);
        EdgeMask frozen = kept;
        branch.for_each([&](int e) {
            EdgeMask d = deleted;
            d.set(e);
            recEnum(d, frozen, count + 1);
            frozen.set(e);
        });
    }

    std::vector<EdgeMask> cliques_;
    EdgeMask allowed_;
    int best_ = 0;
    int target_ = 0;
    std::size_t cap_ = 0;
    bool truncated_ = false;
    bool exceeded_ = false;
    std::set<EdgeMask> found_;
    long nodes_ = 0;
    long node_budget_ = 200'000'000;
};

inline std::vector<EdgeMask> clique_edge_masks(const Graph& g, const EdgeIndexer& idx, int l) {
    std::vector<EdgeMask> out;
    for (const auto& c : enumerate_cliques(g, l).cliques) {
        auto vs = c.members();
        EdgeMask m;
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) m.set(idx.index(vs[i], vs[j]));
        out.push_back(m);
    }
    return out;
}

}  // namespace detail

struct KPartiteResult {
    bool value = false;
    std::vector<VertexSet> coloring;  // k classes when value
    std::vector<int> odd_cycle;       // minimal obstruction, k=2 only
};

/// Exact k-colorability with a witness; for k=2 a shortest odd cycle is
/// returned on failure.
inline KPartiteResult is_k_partite(const Graph& t, int k) {
    if (k < 1) throw std::invalid_argument("is_k_partite: k must be >= 1");
    const int n = t.vertex_count();
    KPartiteResult out;
    if (k == 1) {
        out.value = t.edge_count() == 0;
        if (out.value) out.coloring = {VertexSet::full(n)};
        return out;
    }
    if (k == 2) {
        std::vector<int> color(n + 1, -1), parent(n + 1, 0);
        VertexSet a(n), b(n);
        for (int s = 1; s <= n; ++s) {
            if (color[s] != -1) continue;
            color[s] = 0;
            std::vector<int> queue{s};
            for (std::size_t h = 0; h < queue.size(); ++h) {
                int u = queue[h];
                std::vector<int> nbrs = t.neighbors(u).members();
                for (int v : nbrs) {
                    if (color[v] == -1) {
                        color[v] = 1 - color[u];
                        parent[v] = u;
                        queue.push_back(v);
                    } else if (color[v] == color[u]) {
                        // walk both endpoints up to the meeting point
                        std::vector<int> pu{u}, pv{v};
                        auto depth = [&](int x) {
                            int d = 0;
                            while (x != s) x = parent[x], ++d;
                            return d;
                        };
                        int du = depth(u), dv = depth(v), uu = u, vv = v;
                        while (du > dv) uu = parent[uu], --du, pu.push_back(uu);
                        while (dv > du) vv = parent[vv], --dv, pv.push_back(vv);
                        while (uu != vv) {
                            uu = parent[uu];
                            vv = parent[vv];
                            pu.push_back(uu);
                            pv.push_back(vv);
                        }
                        out.odd_cycle = pu;
                        for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it)
                            out.odd_cycle.push_back(*it);
                        out.value = false;
                        return out;
                    }
                }
            }
        }
        for (int v = 1; v <= n; ++v) (color[v] == 0 ? a : b).add(v);
        out.value = true;
        out.coloring = {a, b};
        return out;
    }
    if (n > 20) throw std::invalid_argument("is_k_partite: exact coloring limited to n <= 20 for k >= 3");
    std::vector<int> color(n + 1, -1);
    auto rec = [&](auto&& self, int v, int used) -> bool {
        if (v > n) return true;
        int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            std::vector<int> nbrs = t.neighbors(v).members();
            for (int u : nbrs)
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    out.value = rec(rec, 1, 0);
    if (out.value) {
        out.coloring.assign(k, VertexSet(n));
        for (int v = 1; v <= n; ++v) out.coloring[color[v]].add(v);
    }
    return out;
}

struct ExtremalBudget {
    int max_n = 16;
    int max_m = 60;
    long node_budget = 200'000'000;
};

struct ExtremalSolution {
    int l = 3;
    int t_value = 0;  // exact iff optimal; otherwise a certified lower bound
    bool optimal = true;
    std::vector<std::vector<Edge>> witnesses;  // sorted lexicographically
    bool witnesses_truncated = false;
    bool all_k_partite = true;   // over the enumerated witnesses
    bool verdict_partial = false;  // witnesses were truncated
    std::optional<std::vector<Edge>> non_k_partite_witness;
};

/// Exact maximum K_l-free subgraph via minimum clique edge-hitting set,
/// with witness enumeration and an (l-1)-partiteness verdict per witness.
inline ExtremalSolution max_clique_free(const Graph& g, int l, int witness_limit = 64,
                                        const ExtremalBudget& budget = {}) {
    if (l < 3) throw std::invalid_argument("max_clique_free: l must be >= 3");
    if (witness_limit < 1) throw std::invalid_argument("max_clique_free: witness_limit >= 1");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (n > budget.max_n && m > budget.max_m)
        throw std::invalid_argument("max_clique_free: instance exceeds solver guard (n <= " +
                                    std::to_string(budget.max_n) + " or m <= " +
                                    std::to_string(budget.max_m) + ")");
    ExtremalSolution out;
    out.l = l;

    detail::EdgeIndexer idx(g);
    auto cliques = detail::clique_edge_masks(g, idx, l);

    int incumbent;  // achievable number of deletions
    if (cliques.empty()) {
        incumbent = 0;
    } else {
        // cross edges of an optimal (l-1)-cut form a K_l-free subgraph
        incumbent = m - max_cut(g, l - 1).b_value;
    }
    detail::HittingSetSolver solver(cliques, idx.full());
    auto exact = solver.solve(incumbent, budget.node_budget);
    if (solver.exceeded()) {
        // best-known lower bound from the incumbent or the partial search
        out.t_value = m - (exact ? *exact : incumbent);
        out.optimal = false;
        out.verdict_partial = true;
        return out;
    }
    if (!exact)
        throw std::logic_error("max_clique_free: hitting set exceeded its own incumbent");
    int kmin = *exact;
    out.t_value = m - kmin;
    out.optimal = true;

    bool truncated = false;
    auto deletions = solver.enumerate(kmin, std::size_t(witness_limit), truncated);
    out.witnesses_truncated = truncated;
    for (const auto& d : deletions) {
        std::vector<Edge> witness;
        for (int i = 0; i < idx.size(); ++i)
            if (!d.test(i)) witness.push_back(idx.edge(i));
        out.witnesses.push_back(std::move(witness));
    }
    std::sort(out.witnesses.begin(), out.witnesses.end());

    out.verdict_partial = truncated;
    for (const auto& w : out.witnesses) {
        Graph wt = Graph::build(n, w);
        if (!is_k_partite(wt, l - 1).value) {
            out.all_k_partite = false;
            out.non_k_partite_witness = w;
            break;
        }
    }
    return out;
}

namespace detail {

/// Minimum |X|, X a subset of the cross edges of Pi, such that
/// (E(G;Pi)\X) ∪ S is triangle-free. nullopt when impossible.
inline std::optional<int> min_cross_deletions(const Graph& g, const Partition& pi,
                                              const std::vector<Edge>& s) {
    const int n = g.vertex_count();
    // graph H = cross(Pi) ∪ S
    std::vector<Edge> cross;
    for (auto [u, v] : g.edges())
        if (pi.part_of(u) != pi.part_of(v)) cross.push_back({u, v});
    std::vector<Edge> hedges = cross;
    for (auto e : s)
        if (std::find(hedges.begin(), hedges.end(), e) == hedges.end()) hedges.push_back(e);
    std::sort(hedges.begin(), hedges.end());
    Graph h = Graph::build(n, hedges);
    EdgeIndexer idx(h);
    EdgeMask allowed;
    for (auto [u, v] : cross) allowed.set(idx.index(u, v));
    auto cliques = clique_edge_masks(h, idx, 3);
    HittingSetSolver solver(cliques, allowed);
    return solver.solve(int(cross.size()));
}

inline void validate_inside(const Partition& pi, const std::vector<Edge>& s) {
    for (auto [u, v] : s)
        if (pi.part_of(u) != pi.part_of(v))
            throw std::invalid_argument("S edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") is not inside the partition");
}

}  // namespace detail

/// Event E(Pi,S) without the S ⊆ E(G) requirement (the lattice module
/// evaluates it over every graph with S fixed).
inline bool event_E_total(const Graph& g, const Partition& pi, const std::vector<Edge>& s) {
    detail::validate_inside(pi, s);
    auto minx = detail::min_cross_deletions(g, pi, s);
    if (!minx) return false;
    return int(s.size()) - *minx >= gap(g, pi);
}

/// Event E2(Pi,S), likewise total in G.
inline bool event_E2_total(const Graph& g, const Partition& pi, const std::vector<Edge>& s) {
    detail::validate_inside(pi, s);
    auto minx = detail::min_cross_deletions(g, pi, s);
    return minx && *minx <= int(s.size());
}

namespace detail {
inline void validate_perturbation(const Graph& g, const Partition& pi,
                                  const std::vector<Edge>& s) {
    for (auto [u, v] : s)
        if (!g.has_edge(u, v))
            throw std::invalid_argument("S edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") is not an edge of G");
    validate_inside(pi, s);
}
}  // namespace detail

/// ∃X ⊆ E(G;Pi): (E(G;Pi)\X) ∪ S triangle-free and |S| - |X| >= gap(G;Pi).
inline bool perturbation_event(const Graph& g, const Partition& pi, const std::vector<Edge>& s) {
    detail::validate_perturbation(g, pi, s);
    return event_E_total(g, pi, s);
}

/// ∃X ⊆ E(G;Pi), |X| <= |S|, with (E(G;Pi)\X) ∪ S triangle-free.
inline bool event_E2(const Graph& g, const Partition& pi, const std::vector<Edge>& s) {
    detail::validate_perturbation(g, pi, s);
    return event_E2_total(g, pi, s);
}

/// gap(G;Pi) <= r0 and every bipartition Pi' with pair-gap <= r0 is within
/// distance s0 of Pi. Exhaustive over all 2^(n-1) bipartitions.
inline bool event_E1(const Graph& g, const Partition& pi, int r0, int s0) {
    if (pi.part_count() != 2) throw std::invalid_argument("event_E1: bipartitions only");
    const int n = g.vertex_count();
    if (n > 18) throw std::invalid_argument("event_E1: exhaustive check limited to n <= 18");
    int b = max_cut(g, 2).b_value;
    int cutPi = cut_size(g, pi);
    if (b - cutPi > r0) return false;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << (n - 1)); ++code) {
        Bitvec a = detail::part_bits_from_code(n, code);
        int c = detail::cross_edges(g, a);
        if (cutPi - c > r0) continue;
        Partition pi2 = detail::partition_from_part_bits(n, a);
        if (partition_distance(pi, pi2) > s0) return false;
    }
    return true;
}

struct DegreeProfile {
    std::vector<int> horizontal;  // d_H(v), index v-1
    std::vector<int> missing;     // d_M(v)

    int horizontal_total() const {
        int s = 0;
        for (int x : horizontal) s += x;
        return s;
    }
    int missing_total() const {
        int s = 0;
        for (int x : missing) s += x;
        return s;
    }
};

/// Horizontal and missing degrees of T within G relative to Pi.
inline DegreeProfile degree_profile(const Graph& g, const Graph& t, const Partition& pi) {
    const int n = g.vertex_count();
    if (t.vertex_count() != n || pi.n() != n)
        throw std::invalid_argument("degree_profile: size mismatch");
    for (auto [u, v] : t.edges())
        if (!g.has_edge(u, v))
            throw std::invalid_argument("degree_profile: T is not a subgraph of G");
    DegreeProfile out;
    out.horizontal.assign(n, 0);
    out.missing.assign(n, 0);
    for (int v = 1; v <= n; ++v) {
        int part = pi.part_of(v);
        const Bitvec& same = pi.part(part).bits();
        out.horizontal[v - 1] = t.row(v).count_and(same);
        int gOther = g.row(v).count() - g.row(v).count_and(same);
        int tOther = t.row(v).count() - t.row(v).count_and(same);
        out.missing[v - 1] = gOther - tOther;
    }
    return out;
}

/// Ordered chord triples (x,y,z): x,y in restrict_a with {x,y} horizontal in
/// T, z in restrict_b, {y,z} in G and {x,z} in G\T.
inline long count_chords(const Graph& g, const Graph& t, const Partition& pi,
                         const VertexSet& restrict_a, const VertexSet& restrict_b) {
    if (pi.part_count() != 2) throw std::invalid_argument("count_chords: bipartitions only");
    if (!restrict_a.bits().subset_of(pi.part(0).bits()) ||
        !restrict_b.bits().subset_of(pi.part(1).bits()))
        throw std::invalid_argument("count_chords: restrict sets must lie in the two parts");
    long count = 0;
    auto as = restrict_a.members();
    auto bs = restrict_b.members();
    for (int x : as)
        for (int y : as) {
            if (x == y || !t.has_edge(x, y)) continue;
            for (int z : bs)
                if (g.has_edge(y, z) && g.has_edge(x, z) && !t.has_edge(x, z)) ++count;
        }
    return count;
}

/// l-partite chord configurations: a horizontal T-edge {x,y} inside
/// restricts[0], one vertex from each other restrict, all remaining pairs in
/// G, exactly one of them missing (in G but not T).
inline long count_chords_general(const Graph& g, const Graph& t, const Partition& pi,
                                 const std::vector<VertexSet>& restricts) {
    const int l = pi.part_count();
    if (int(restricts.size()) != l)
        throw std::invalid_argument("count_chords_general: one restrict set per part");
    for (int i = 0; i < l; ++i)
        if (!restricts[i].bits().subset_of(pi.part(i).bits()))
            throw std::invalid_argument("count_chords_general: restrict outside its part");
    long count = 0;
    auto first = restricts[0].members();
    std::vector<std::vector<int>> others;
    for (int i = 1; i < l; ++i) others.push_back(restricts[i].members());
    std::vector<int> pick(l - 1);
    auto rec = [&](auto&& self, int depth, int x, int y) -> void {
        if (depth == l - 1) {
            std::vector<int> vs{x, y};
            vs.insert(vs.end(), pick.begin(), pick.end());
            int missing = 0;
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    if (i == 0 && j == 1) continue;  // the horizontal edge
                    if (!g.has_edge(vs[i], vs[j])) return;
                    if (!t.has_edge(vs[i], vs[j])) ++missing;
                }
            if (missing == 1) ++count;
            return;
        }
        for (int v : others[depth]) {
            pick[depth] = v;
            self(self, depth + 1, x, y);
        }
    };
    for (std::size_t i = 0; i < first.size(); ++i)
        for (std::size_t j = i + 1; j < first.size(); ++j)
            if (t.has_edge(first[i], first[j])) rec(rec, 0, first[i], first[j]);
    return count;
}

struct ExceptionalSets {
    VertexSet x1_a, x1_b, x2_a, x2_b, x3_a, x3_b;
    VertexSet q_a, q_b;  // greedy covers behind the B2 sets
    double epsilon = 0, p = 0;

    VertexSet x1() const { return VertexSet::from_bits(x1_a.bits() | x1_b.bits()); }
    VertexSet x2() const { return VertexSet::from_bits(x2_a.bits() | x2_b.bits()); }
    VertexSet x3() const { return VertexSet::from_bits(x3_a.bits() | x3_b.bits()); }
};

namespace detail {

/// Vertices whose neighborhood count in U deviates from p|U| by >= p|U|/4.
inline Bitvec b1_set(const Graph& g, const VertexSet& u, double p) {
    const int n = g.vertex_count();
    Bitvec out(n);
    double expect = p * u.size();
    for (int v = 1; v <= n; ++v) {
        double dev = std::abs(double(g.row(v).count_and(u.bits())) - expect);
        if (dev >= expect / 4.0) out.set(v - 1);
    }
    return out;
}

/// Greedy vertex cover of the pairs whose common neighborhood in U deviates
/// from p^2|U| by >= p^2|U|/4.
inline Bitvec q_set(const Graph& g, const VertexSet& u, double p) {
    const int n = g.vertex_count();
    double expect = p * p * u.size();
    std::vector<std::pair<int, int>> violating;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) {
            int common = (g.row(x) & g.row(y)).count_and(u.bits());
            if (std::abs(double(common) - expect) >= expect / 4.0) violating.push_back({x, y});
        }
    Bitvec cover(n);
    while (!violating.empty()) {
        std::vector<int> hits(n + 1, 0);
        for (auto [x, y] : violating) ++hits[x], ++hits[y];
        int pick = 1;
        for (int v = 2; v <= n; ++v)
            if (hits[v] > hits[pick]) pick = v;
        cover.set(pick - 1);
        std::erase_if(violating, [&](auto pr) { return pr.first == pick || pr.second == pick; });
    }
    return cover;
}

}  // namespace detail

/// The exceptional vertex sets X1, X2, X3 per side of a bipartition.
inline ExceptionalSets exceptional_sets(const Graph& g, const Partition& pi, const Graph& t,
                                        double epsilon, double p) {
    if (pi.part_count() != 2) throw std::invalid_argument("exceptional_sets: bipartitions only");
    const int n = g.vertex_count();
    DegreeProfile prof = degree_profile(g, t, pi);
    ExceptionalSets out;
    out.epsilon = epsilon;
    out.p = p;
    const VertexSet& a = pi.part(0);
    const VertexSet& b = pi.part(1);
    Bitvec b1 = detail::b1_set(g, a, p) | detail::b1_set(g, b, p);
    out.q_a = VertexSet::from_bits(detail::q_set(g, a, p));
    out.q_b = VertexSet::from_bits(detail::q_set(g, b, p));
    Bitvec bad = b1 | out.q_a.bits() | out.q_b.bits();
    out.x1_a = VertexSet::from_bits(bad & a.bits());
    out.x1_b = VertexSet::from_bits(bad & b.bits());

    double degThreshold = epsilon * p * n;
    auto side = [&](const VertexSet& part, const VertexSet& x1, VertexSet& x2, VertexSet& x3) {
        Bitvec hi(n), mi(n);
        part.bits().for_each([&](int i) {
            if (prof.horizontal[i] >= degThreshold) hi.set(i);
            if (prof.missing[i] >= prof.horizontal[i] + 5 * degThreshold) mi.set(i);
        });
        x2 = VertexSet::from_bits(hi.subtract(x1.bits()));
        Bitvec m3 = mi;
        m3.subtract(x1.bits());
        m3.subtract(x2.bits());
        x3 = VertexSet::from_bits(m3);
    };
    side(a, out.x1_a, out.x2_a, out.x3_a);
    side(b, out.x1_b, out.x2_b, out.x3_b);
    return out;
}

/// Maximum number of pairwise edge-disjoint transversal K_t's (one vertex in
/// each S_i); exact search or the greedy lexicographic lower bound.
inline int clique_packing(const Graph& g, const std::vector<VertexSet>& sets, bool exact) {
    const int t = int(sets.size());
    if (t < 2) throw std::invalid_argument("clique_packing: need at least 2 sets");
    Bitvec seen(g.vertex_count());
    for (const auto& s : sets) {
        if (seen.intersects(s.bits())) throw std::invalid_argument("clique_packing: sets overlap");
        seen |= s.bits();
    }
    // transversal cliques, lexicographic by the picked tuple
    std::vector<std::vector<int>> candidates;
    std::vector<int> pick(t);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == t) {
            candidates.push_back(pick);
            return;
        }
        for (int v : sets[depth].members()) {
            bool ok = true;
            for (int i = 0; i < depth; ++i)
                if (!g.has_edge(pick[i], v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            pick[depth] = v;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);

    auto edges_of = [&](const std::vector<int>& clique) {
        std::vector<Edge> es;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) es.push_back(make_edge(clique[i], clique[j]));
        return es;
    };
    if (!exact) {
        std::set<Edge> used;
        int count = 0;
        for (const auto& c : candidates) {
            auto es = edges_of(c);
            bool free = std::none_of(es.begin(), es.end(), [&](const Edge& e) { return used.count(e); });
            if (free) {
                used.insert(es.begin(), es.end());
                ++count;
            }
        }
        return count;
    }
    if (candidates.size() > 5000)
        throw std::invalid_argument("clique_packing: exact mode limited to 5000 candidates");
    int best = 0;
    std::set<Edge> used;
    auto search = [&](auto&& self, std::size_t i, int count) -> void {
        best = std::max(best, count);
        if (i == candidates.size()) return;
        if (count + int(candidates.size() - i) <= best) return;
        auto es = edges_of(candidates[i]);
        bool free = std::none_of(es.begin(), es.end(), [&](const Edge& e) { return used.count(e); });
        if (free) {
            for (const auto& e : es) used.insert(e);
            self(self, i + 1, count + 1);
            for (const auto& e : es) used.erase(e);
        }
        self(self, i + 1, count);
    };
    search(search, 0, 0);
    return best;
}

}  // namespace cutlab

#endif
