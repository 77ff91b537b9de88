// End-to-end acceptance checks; prints one PASS/FAIL line per criterion and
// exits nonzero if any fail.
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cutlab/bounds.hpp"
#include "cutlab/cut.hpp"
#include "cutlab/experiment.hpp"
#include "cutlab/extremal.hpp"
#include "cutlab/graph.hpp"
#include "cutlab/lattice.hpp"
#include "cutlab/partition.hpp"
#include "cutlab/randgen.hpp"

using namespace cutlab;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int num, const std::string& label, bool ok, double secs = -1) {
    if (!ok) ++failures;
    if (secs >= 0)
        std::printf("%s criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", num, label.c_str(),
                    secs);
    else
        std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", num, label.c_str());
}

// independent exhaustive max cut: scan every bipartition code, count crossing
// edges directly off the edge list
int brute_max_cut(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << (n - 1)); ++code) {
        int c = 0;
        for (auto [u, v] : g.edges()) {
            bool ua = (u == 1) || !((code >> (u - 2)) & 1);
            bool va = (v == 1) || !((code >> (v - 2)) & 1);
            if (ua != va) ++c;
        }
        best = std::max(best, c);
    }
    return best;
}

// independent exhaustive t(G): max triangle-free edge subset over all 2^m
int brute_max_tfree(const Graph& g) {
    auto edges = g.edges();
    const int m = int(edges.size());
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        int size = std::popcount(mask);
        if (size <= best) continue;
        std::vector<Edge> sub;
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1) sub.push_back(edges[i]);
        if (!has_clique(Graph::build(g.vertex_count(), sub), 3)) best = size;
    }
    return best;
}

// exhaustive evaluation of the two perturbation events over all X inside the
// crossing edge set
std::pair<bool, bool> brute_events(const Graph& g, const Partition& pi,
                                   const std::vector<Edge>& s) {
    std::vector<Edge> cross;
    for (auto [u, v] : g.edges())
        if (pi.part_of(u) != pi.part_of(v)) cross.push_back({u, v});
    const int k = int(cross.size());
    const int gapv = gap(g, pi);
    bool e = false, e2 = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
        std::vector<Edge> sub = s;
        for (int i = 0; i < k; ++i)
            if (!((mask >> i) & 1)) sub.push_back(cross[i]);
        if (has_clique(Graph::build(g.vertex_count(), sub), 3)) continue;
        int xs = std::popcount(mask);
        if (int(s.size()) - xs >= gapv) e = true;
        if (xs <= int(s.size())) e2 = true;
        if (e && e2) break;
    }
    return {e, e2};
}

std::vector<Edge> inside_edges(const Graph& g, const Partition& pi) {
    std::vector<Edge> out;
    for (auto [u, v] : g.edges())
        if (pi.part_of(u) == pi.part_of(v)) out.push_back({u, v});
    return out;
}

std::vector<Partition> all_bipartitions(int n) {
    std::vector<Partition> out;
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << (n - 1)); ++code)
        out.push_back(detail::partition_from_part_bits(n, detail::part_bits_from_code(n, code)));
    return out;
}

std::vector<Edge> same_part_pairs(int n, const Partition& pi) {
    std::vector<Edge> out;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (pi.part_of(u) == pi.part_of(v)) out.push_back({u, v});
    return out;
}

cpp_rational exact_trinomial_cell(std::int64_t n, std::int64_t a, std::int64_t b) {
    auto fact = [](std::int64_t k) {
        cpp_int v = 1;
        for (std::int64_t i = 2; i <= k; ++i) v *= i;
        return v;
    };
    std::int64_t c = n - a - b;
    cpp_rational v(fact(n), fact(a) * fact(b) * fact(c));
    cpp_rational alpha(1, 4), rest(1, 2);
    for (std::int64_t i = 0; i < a + b; ++i) v *= alpha;
    for (std::int64_t i = 0; i < c; ++i) v *= rest;
    return v;
}

void criterion1() {
    Timer t;
    bool ok = true;
    for (int n = 3; n <= 10; ++n)
        ok = ok && (max_clique_free(Graph::complete(n), 3).t_value == n * n / 4);
    report(1, "largest triangle-free subgraph of K_n has floor(n^2/4) edges, n=3..10",
           ok && t.seconds() < 30, t.seconds());
}

void criterion2() {
    Timer t;
    Graph c5 = Graph::cycle(5);
    auto sol = max_clique_free(c5, 3);
    auto cut = max_cut(c5, 2);
    bool ok = sol.t_value == 5 && cut.b_value == 4 && sol.optimal &&
              sol.witnesses.size() == 1 && !sol.witnesses_truncated &&
              sol.witnesses[0] == c5.edges() &&
              !is_k_partite(c5, 2).value && !sol.all_k_partite;
    report(2, "5-cycle: t=5, b=4, unique maximum triangle-free subgraph is itself, not bipartite",
           ok && t.seconds() < 1, t.seconds());
}

void criterion3() {
    Timer t;
    bool ok = true;
    for (int i = 0; i < 300; ++i) {
        int n = 4 + i % 9;
        double p = 0.3 + 0.2 * (i % 3);
        Graph g = sample_gnp(n, p, {1001, std::uint64_t(i)});
        if (max_cut(g, 2).b_value != brute_max_cut(g)) ok = false;
    }
    report(3, "max-cut solver matches exhaustive bipartition enumeration on 300 graphs, n<=12",
           ok && t.seconds() < 60, t.seconds());
}

void criterion4() {
    Timer t;
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        Graph g = sample_gnm(8, std::uint64_t(i % 17), {1002, std::uint64_t(i)});
        auto sol = max_clique_free(g, 3);
        if (!sol.optimal || sol.t_value != brute_max_tfree(g)) ok = false;
    }
    report(4, "triangle-free solver matches brute force over all edge subsets on 100 graphs, m<=16",
           ok && t.seconds() < 120, t.seconds());
}

void criterion5() {
    Timer t;
    bool ok = true;
    auto rng = detail::make_rng({1003, 7});
    for (int i = 0; i < 200; ++i) {
        Graph g = sample_gnp(7, 0.5, {1003, std::uint64_t(i)});
        Bitvec bits = detail::part_bits_from_code(7, detail::uniform_below(rng, 64));
        Partition pi = detail::partition_from_part_bits(7, bits);
        auto inside = inside_edges(g, pi);
        std::vector<Edge> s;
        std::size_t want = detail::uniform_below(rng, 3);
        for (const auto& e : inside) {
            if (s.size() >= want) break;
            s.push_back(e);
        }
        auto [be, be2] = brute_events(g, pi, s);
        if (perturbation_event(g, pi, s) != be || event_E2(g, pi, s) != be2) ok = false;
    }
    report(5, "perturbation events match brute force over crossing-edge subsets on 200 instances",
           ok, t.seconds());
}

void criterion6() {
    Timer t;
    bool ok = true;
    Partition pi3 = Partition::bipartition(3, VertexSet(3, {1, 2}));
    std::vector<Graph> all3;
    for (std::uint64_t m = 0; m < 8; ++m) all3.push_back(detail::graph_from_mask(3, m));
    for (const auto& x : all3) {
        if (!lattice_leq(x, x, pi3)) ok = false;
        for (const auto& y : all3) {
            if (lattice_leq(x, y, pi3) && lattice_leq(y, x, pi3) && !(x == y)) ok = false;
            Graph j = lattice_join(x, y, pi3), m = lattice_meet(x, y, pi3);
            if (!lattice_leq(x, j, pi3) || !lattice_leq(y, j, pi3)) ok = false;
            if (!lattice_leq(m, x, pi3) || !lattice_leq(m, y, pi3)) ok = false;
            if (j.edge_count() + m.edge_count() != x.edge_count() + y.edge_count()) ok = false;
            double lhs = log_measure_mu(x, 0.3) + log_measure_mu(y, 0.3);
            double rhs = log_measure_mu(j, 0.3) + log_measure_mu(m, 0.3);
            if (std::abs(lhs - rhs) >= 1e-10) ok = false;
            for (const auto& z : all3) {
                if (lattice_leq(x, z, pi3) && lattice_leq(y, z, pi3) && !lattice_leq(j, z, pi3))
                    ok = false;
                if (lattice_leq(z, x, pi3) && lattice_leq(z, y, pi3) && !lattice_leq(z, m, pi3))
                    ok = false;
                if (lattice_leq(x, y, pi3) && lattice_leq(y, z, pi3) && !lattice_leq(x, z, pi3))
                    ok = false;
                if (!(lattice_meet(x, lattice_join(y, z, pi3), pi3) ==
                      lattice_join(lattice_meet(x, y, pi3), lattice_meet(x, z, pi3), pi3)))
                    ok = false;
            }
        }
    }
    Partition pi6 = Partition::bipartition(6, VertexSet(6, {1, 2, 3}));
    for (std::uint64_t i = 0; i < 10000; ++i) {
        Graph x = sample_gnp(6, 0.5, {2001, i});
        Graph y = sample_gnp(6, 0.5, {2002, i});
        Graph z = sample_gnp(6, 0.5, {2003, i});
        Graph j = lattice_join(x, y, pi6), m = lattice_meet(x, y, pi6);
        if (!(lattice_meet(x, lattice_join(y, z, pi6), pi6) ==
              lattice_join(lattice_meet(x, y, pi6), lattice_meet(x, z, pi6), pi6)))
            ok = false;
        if (!(lattice_join(x, lattice_meet(y, z, pi6), pi6) ==
              lattice_meet(lattice_join(x, y, pi6), lattice_join(x, z, pi6), pi6)))
            ok = false;
        if (j.edge_count() + m.edge_count() != x.edge_count() + y.edge_count()) ok = false;
        double lhs = log_measure_mu(x, 0.37) + log_measure_mu(y, 0.37);
        double rhs = log_measure_mu(j, 0.37) + log_measure_mu(m, 0.37);
        if (std::abs(lhs - rhs) >= 1e-10) ok = false;
    }
    report(6, "lattice order, bound, distributivity, conservation, and measure laws hold", ok,
           t.seconds());
}

void criterion7() {
    Timer t;
    long violations = 0;
    for (const auto& pi : all_bipartitions(4)) {
        for (const auto& e : same_part_pairs(4, pi)) {
            std::vector<Edge> s = {e};
            auto dec = [&](const Graph& g) { return event_E2_total(g, pi, s); };
            violations += monotonicity_audit(4, pi, dec, false).violations;
        }
        for (int r0 : {0, 1})
            for (int s0 : {1, 2}) {
                auto inc = [&](const Graph& g) { return event_E1(g, pi, r0, s0); };
                violations += monotonicity_audit(4, pi, inc, true).violations;
            }
    }
    report(7, "event indicators are monotone in the partition order (exhaustive n=4)",
           violations == 0, t.seconds());
}

void criterion8() {
    Timer t;
    bool ok = true;
    for (const auto& pi : all_bipartitions(4))
        for (const auto& e : same_part_pairs(4, pi))
            for (double p : {0.3, 0.5})
                for (int r0 : {0, 1})
                    for (int s0 : {1, 2}) {
                        std::vector<Edge> s = {e};
                        auto f = [&](const Graph& g) { return event_E1(g, pi, r0, s0) ? 1.0 : 0.0; };
                        auto g2 = [&](const Graph& g) {
                            return event_E2_total(g, pi, s) ? 1.0 : 0.0;
                        };
                        if (!fkg_check(4, p, f, g2, 1e-12).holds) ok = false;
                    }
    report(8, "negative correlation of the event pair holds exhaustively at n=4", ok, t.seconds());
}

void criterion9() {
    Timer t;
    ExperimentSpec s;
    s.experiment = "b_bounds_check";
    s.n = 40;
    s.m = 200;
    s.trials = 500;
    s.master_seed = 3001;
    auto res = run_experiment(s);
    double freq = double(res.successes()) / double(s.trials);
    report(9, "max-cut of G(40,200) lands in [M/2, M/2+sqrt(4nM)] in at least 95% of 500 trials",
           freq >= 0.95, t.seconds());
}

void criterion10() {
    Timer t;
    ExperimentSpec s;
    s.experiment = "t_equals_b";
    s.n = 12;
    s.p = 0.7;
    s.trials = 200;
    s.master_seed = 3002;
    auto eq = run_experiment(s);
    double f1 = double(eq.successes()) / double(eq.decided() ? eq.decided() : 1);
    s.experiment = "all_max_tfree_bipartite";
    auto bip = run_experiment(s);
    double f2 = double(bip.successes()) / double(bip.decided() ? bip.decided() : 1);
    bool ok = eq.censored() == 0 && bip.censored() == 0 && f1 >= 0.8 && f2 >= 0.8;
    report(10, "t=b and all-witnesses-bipartite each hold in at least 80% of G(12,0.7) trials",
           ok && t.seconds() < 600, t.seconds());
}

void criterion11() {
    Timer t;
    bool ok = true;
    // The densest requested edge count exceeds C(14,2); those trials come back
    // censored and contribute no mean. Across the feasible densities we
    // require that the mean spread shows no statistically significant growth
    // (two standard errors at 200 samples) and that every measured distance
    // respects the n/2 cap.
    bool havePrev = false;
    double prevMean = 0, prevVar = 0;
    long prevCnt = 0;
    for (long m : {40L, 70L, 100L}) {
        ExperimentSpec s;
        s.experiment = "maxcut_uniqueness";
        s.n = 14;
        s.m = m;
        s.trials = 200;
        s.master_seed = 3003;
        auto res = run_experiment(s);
        long cnt = 0;
        double sum = 0, sum2 = 0;
        for (const auto& r : res.records) {
            if (r.censored) continue;
            if (!r.max_pairwise_distance) { ok = false; continue; }
            int d = *r.max_pairwise_distance;
            if (d > 7) ok = false;
            sum += d;
            sum2 += double(d) * d;
            ++cnt;
        }
        const long feasible = m <= 91 ? 200 : 0;
        if (cnt != feasible) ok = false;
        if (cnt < 2) continue;
        double mean = sum / double(cnt);
        double var = (sum2 - double(cnt) * mean * mean) / double(cnt - 1);
        if (havePrev) {
            double se = std::sqrt(var / double(cnt) + prevVar / double(prevCnt));
            if (mean > prevMean + 2 * se) ok = false;
        }
        havePrev = true;
        prevMean = mean;
        prevVar = var;
        prevCnt = cnt;
    }
    report(11,
           "optimal-cut spread in G(14,M) does not grow with density and stays within n/2 "
           "(M=40,70,100)",
           ok, t.seconds());
}

void criterion12() {
    Timer t;
    bool ok = trinomial_term(4, 0.25, 0).value == 0.1875;
    for (std::int64_t n = 1; n <= 12; ++n) {
        cpp_rational total = 0;
        for (std::int64_t a = 0; a <= n; ++a)
            for (std::int64_t b = 0; a + b <= n; ++b) {
                total += exact_trinomial_cell(n, a, b);
                double lib = trinomial_pmf(n, 0.25, a, b);
                if (std::abs(lib - double(exact_trinomial_cell(n, a, b))) > 1e-15) ok = false;
            }
        if (total != 1) ok = false;
    }
    report(12, "trinomial pmf sums to one against an exact rational oracle, N<=12", ok,
           t.seconds());
}

void criterion13() {
    Timer t;
    ExperimentSpec s;
    s.experiment = "gap_distance_survey";
    s.n = 9;
    s.p = 0.5;
    s.gap_bound = 1;
    s.trials = 40;
    s.master_seed = 3004;
    std::string a = emit(run_experiment(s), "json");
    std::string b = emit(run_experiment(s), "json");
    report(13, "identical seeds reproduce byte-identical result documents", !a.empty() && a == b,
           t.seconds());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
