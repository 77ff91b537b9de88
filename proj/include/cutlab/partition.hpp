#ifndef CUTLAB_PARTITION_HPP
#define CUTLAB_PARTITION_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cutlab/graph.hpp"

namespace cutlab {

/// Ordered tuple of l >= 2 disjoint vertex sets covering 1..n. Empty parts
/// are legal so that every graph has partitions of every l.
class Partition {
public:
    Partition(int n, std::vector<VertexSet> parts) : n_(n), parts_(std::move(parts)) {
        if (parts_.size() < 2) throw std::invalid_argument("partition needs at least 2 parts");
        Bitvec seen(n);
        int total = 0;
        for (const auto& p : parts_) {
            if (p.universe() != n) throw std::invalid_argument("partition part universe mismatch");
            if (seen.intersects(p.bits())) throw std::invalid_argument("partition parts overlap");
            seen |= p.bits();
            total += p.size();
        }
        if (total != n) throw std::invalid_argument("partition parts do not cover 1..n");
    }

    static Partition bipartition(int n, const VertexSet& a) {
        VertexSet b(n);
        for (int v = 1; v <= n; ++v)
            if (!a.contains(v)) b.add(v);
        return Partition(n, {a, b});
    }

    int n() const { return n_; }
    int part_count() const { return int(parts_.size()); }
    const VertexSet& part(int i) const { return parts_[i]; }
    const std::vector<VertexSet>& parts() const { return parts_; }

    /// Part index of vertex v (0-based part index).
    int part_of(int v) const {
        for (int i = 0; i < part_count(); ++i)
            if (parts_[i].contains(v)) return i;
        throw std::logic_error("vertex not covered");
    }

    bool operator==(const Partition& o) const { return n_ == o.n_ && parts_ == o.parts_; }

private:
    int n_;
    std::vector<VertexSet> parts_;
};

/// Number of edges of G with endpoints in distinct parts.
inline int cut_size(const Graph& g, const Partition& pi) {
    if (pi.n() != g.vertex_count()) throw std::invalid_argument("partition/graph size mismatch");
    int inside = 0;
    for (const auto& p : pi.parts()) inside += edge_count(g, p);
    return g.edge_count() - inside;
}

/// dist(Pi, Pi'): minimum number of vertices switching parts, minimized over
/// part relabelings. Exact for l <= 8.
inline int partition_distance(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) throw std::invalid_argument("partition distance: n mismatch");
    if (a.part_count() != b.part_count())
        throw std::invalid_argument("partition distance: part count mismatch");
    const int l = a.part_count();
    if (l > 8) throw std::invalid_argument("partition distance: exact only for l <= 8");
    // overlap[i][j] = |V_i ∩ V'_j|; distance = n - max over bijections of the
    // matched overlap.
    std::vector<std::vector<int>> overlap(l, std::vector<int>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            overlap[i][j] = a.part(i).bits().count_and(b.part(j).bits());
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    int best = 0;
    do {
        int s = 0;
        for (int i = 0; i < l; ++i) s += overlap[i][perm[i]];
        best = std::max(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return a.n() - best;
}

/// Bal_n membership: both parts within n/100 of n/2. Bipartitions only;
/// an empty part is never balanced for n >= 1.
inline bool is_balanced(const Partition& pi, int n) {
    if (pi.part_count() != 2) throw std::invalid_argument("is_balanced: bipartitions only");
    for (int i = 0; i < 2; ++i) {
        // ||A| - n/2| <= n/100  <=>  50*|2|A| - n| <= n, kept in integers
        long d = 2L * pi.part(i).size() - n;
        if (50 * (d < 0 ? -d : d) > n) return false;
    }
    return true;
}

}  // namespace cutlab

#endif
