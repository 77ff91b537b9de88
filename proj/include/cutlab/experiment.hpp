#ifndef CUTLAB_EXPERIMENT_HPP
#define CUTLAB_EXPERIMENT_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutlab/bounds.hpp"
#include "cutlab/cut.hpp"
#include "cutlab/extremal.hpp"
#include "cutlab/graph.hpp"
#include "cutlab/partition.hpp"
#include "cutlab/randgen.hpp"

namespace cutlab {

inline constexpr const char* kResultSchemaVersion = "cutlab-results-1";

/// CSV column order for emit(..., csv); one row per trial.
inline constexpr const char* kCsvHeader =
    "stream_index,censored,status,success,b_value,t_value,b_final,b_lower,b_upper,"
    "max_pairwise_distance,overtake,increments,gap_dist";

struct ExperimentSpec {
    std::string experiment;
    int n = 0;
    std::optional<double> p;
    std::optional<long> m;
    long trials = 0;
    std::uint64_t master_seed = 0;
    int l = 2;
    int gap_bound = 0;          // near-optimal enumeration width (g)
    int witness_limit = 64;
    long node_budget = 200'000'000;
    std::vector<long> t_schedule;  // evolution step sizes
    double cprime = 1.0;           // sandwich-bound constant

    static const std::vector<std::string>& known_experiments() {
        static const std::vector<std::string> k = {
            "t_equals_b",       "all_max_tfree_bipartite", "b_bounds_check",
            "balance_check",    "nonedge_check",           "maxcut_uniqueness",
            "gap_distance_survey", "evolution_overtake",   "uniform_tfree_bipartite"};
        return k;
    }

    void validate() const {
        const auto& known = known_experiments();
        if (std::find(known.begin(), known.end(), experiment) == known.end())
            throw std::invalid_argument("unknown experiment '" + experiment + "'");
        if (trials < 1) throw std::invalid_argument("trials must be >= 1");
        if (n < 1) throw std::invalid_argument("n must be >= 1");
        if (p.has_value() == m.has_value())
            throw std::invalid_argument("exactly one of p / M must be set");
        if (p && (*p < 0 || *p > 1)) throw std::invalid_argument("p must be in [0,1]");
        if (m && *m < 0) throw std::invalid_argument("M must be >= 0");
        if (l < 2) throw std::invalid_argument("l must be >= 2");
        if (gap_bound < 0) throw std::invalid_argument("gap bound must be >= 0");
        if (witness_limit < 1 || node_budget < 1)
            throw std::invalid_argument("budgets must be positive");
        if (experiment == "evolution_overtake" && t_schedule.empty())
            throw std::invalid_argument("evolution_overtake needs a t_schedule");
        for (long t : t_schedule)
            if (t < 1) throw std::invalid_argument("t_schedule entries must be >= 1");
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["experiment"] = experiment;
        j["n"] = n;
        if (p) j["p"] = *p;
        if (m) j["M"] = *m;
        j["trials"] = trials;
        j["master_seed"] = master_seed;
        j["l"] = l;
        j["gap_bound"] = gap_bound;
        j["witness_limit"] = witness_limit;
        j["node_budget"] = node_budget;
        if (!t_schedule.empty()) j["t_schedule"] = t_schedule;
        j["cprime"] = cprime;
        return j;
    }

    static ExperimentSpec from_json(const nlohmann::json& j) {
        ExperimentSpec s;
        s.experiment = j.at("experiment").get<std::string>();
        s.n = j.at("n").get<int>();
        if (j.contains("p")) s.p = j.at("p").get<double>();
        if (j.contains("M")) s.m = j.at("M").get<long>();
        s.trials = j.at("trials").get<long>();
        s.master_seed = j.at("master_seed").get<std::uint64_t>();
        if (j.contains("l")) s.l = j.at("l").get<int>();
        if (j.contains("gap_bound")) s.gap_bound = j.at("gap_bound").get<int>();
        if (j.contains("witness_limit")) s.witness_limit = j.at("witness_limit").get<int>();
        if (j.contains("node_budget")) s.node_budget = j.at("node_budget").get<long>();
        if (j.contains("t_schedule")) s.t_schedule = j.at("t_schedule").get<std::vector<long>>();
        if (j.contains("cprime")) s.cprime = j.at("cprime").get<double>();
        return s;
    }
};

struct TrialRecord {
    std::uint64_t stream_index = 0;
    std::uint64_t master_seed = 0;
    bool censored = false;
    std::string status = "ok";
    std::optional<bool> success;
    std::optional<long> b_value;
    std::optional<long> t_value;
    std::optional<long> b_final;   // evolution: b after the full schedule
    std::optional<long> b_lower;   // certified bracket when exact b infeasible
    std::optional<long> b_upper;
    std::optional<int> max_pairwise_distance;
    std::optional<bool> overtake;
    std::vector<long> increments;              // per-step cut growth of the initial optimum
    std::vector<std::pair<int, int>> gap_dist;  // (gap, distance to canonical)

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["stream_index"] = stream_index;
        j["master_seed"] = master_seed;
        j["censored"] = censored;
        j["status"] = status;
        if (success) j["success"] = *success;
        if (b_value) j["b_value"] = *b_value;
        if (t_value) j["t_value"] = *t_value;
        if (b_final) j["b_final"] = *b_final;
        if (b_lower) j["b_lower"] = *b_lower;
        if (b_upper) j["b_upper"] = *b_upper;
        if (max_pairwise_distance) j["max_pairwise_distance"] = *max_pairwise_distance;
        if (overtake) j["overtake"] = *overtake;
        if (!increments.empty()) j["increments"] = increments;
        if (!gap_dist.empty()) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (auto [g, d] : gap_dist) arr.push_back({g, d});
            j["gap_dist"] = arr;
        }
        return j;
    }
};

struct WilsonInterval {
    double center = 0, low = 0, high = 0;
};

/// Wilson score interval at 95% (z = 1.96).
inline WilsonInterval wilson_interval(long successes, long trials) {
    if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
    const double z = 1.96, z2 = z * z;
    double nd = double(trials), k = double(successes);
    double denom = nd + z2;
    double center = (k + z2 / 2.0) / denom;
    double half = z * std::sqrt(k * (nd - k) / nd + z2 / 4.0) / denom;
    return {center, center - half, center + half};
}

struct ExperimentResults {
    ExperimentSpec spec;
    std::vector<TrialRecord> records;

    long decided() const {
        long c = 0;
        for (const auto& r : records)
            if (!r.censored) ++c;
        return c;
    }
    long successes() const {
        long c = 0;
        for (const auto& r : records)
            if (!r.censored && r.success && *r.success) ++c;
        return c;
    }
    long censored() const { return long(records.size()) - decided(); }
};

namespace detail {

/// Deterministic single-vertex-move local search; the resulting cut has at
/// least half of each vertex's edges crossing, hence size >= m/2.
inline std::pair<long, Bitvec> local_search_cut(const Graph& g) {
    const int n = g.vertex_count();
    Bitvec a(n);
    a.set(0);
    for (int v = 2; v <= n; ++v)
        if (v % 2 == 1) a.set(v - 1);
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v = 1; v <= n; ++v) {
            int same, other;
            int inA = g.row(v).count_and(a);
            int deg = g.row(v).count();
            if (a.test(v - 1)) same = inA, other = deg - inA;
            else same = deg - inA, other = inA;
            if (same > other) {
                if (a.test(v - 1)) a.reset(v - 1);
                else a.set(v - 1);
                improved = true;
            }
        }
    }
    return {cross_edges(g, a), a};
}

inline Graph draw_graph(const ExperimentSpec& spec, std::uint64_t stream) {
    RngSeed seed{spec.master_seed, stream};
    if (spec.p) return sample_gnp(spec.n, *spec.p, seed);
    return sample_gnm(spec.n, std::uint64_t(*spec.m), seed);
}

}  // namespace detail

/// Runs every trial sequentially on independent seeded streams; trials that
/// exceed a solver guard are recorded as censored, never dropped.
inline ExperimentResults run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    ExperimentResults out;
    out.spec = spec;
    const int n = spec.n;

    for (long i = 0; i < spec.trials; ++i) {
        TrialRecord rec;
        rec.stream_index = std::uint64_t(i);
        rec.master_seed = spec.master_seed;
        try {
            if (spec.experiment == "t_equals_b") {
                Graph g = detail::draw_graph(spec, rec.stream_index);
                rec.b_value = max_cut(g, 2).b_value;
                auto sol = max_clique_free(g, 3, 1,
                                           {n, 128, spec.node_budget});
                rec.t_value = sol.t_value;
                if (!sol.optimal) {
                    rec.censored = true;
                    rec.status = "extremal solver budget exceeded";
                } else {
                    rec.success = (*rec.t_value == *rec.b_value);
                }
            } else if (spec.experiment == "all_max_tfree_bipartite") {
                Graph g = detail::draw_graph(spec, rec.stream_index);
                auto sol = max_clique_free(g, 3, spec.witness_limit,
                                           {n, 128, spec.node_budget});
                rec.t_value = sol.t_value;
                if (!sol.optimal) {
                    rec.censored = true;
                    rec.status = "extremal solver budget exceeded";
                } else {
                    rec.success = sol.all_k_partite;
                    if (sol.verdict_partial) rec.status = "witness list truncated";
                }
            } else if (spec.experiment == "b_bounds_check") {
                Graph g = detail::draw_graph(spec, rec.stream_index);
                const long m = g.edge_count();
                double lo = m / 2.0, hi = m / 2.0 + std::sqrt(4.0 * n * double(m));
                if (n <= 28) {
                    rec.b_value = max_cut(g, 2).b_value;
                    rec.success = (*rec.b_value >= lo && *rec.b_value <= hi);
                } else {
                    // certified bracket: local-search cut below, m above
                    rec.b_lower = detail::local_search_cut(g).first;
                    rec.b_upper = m;
                    if (*rec.b_lower >= lo && *rec.b_upper <= hi)
                        rec.success = true;
                    else if (*rec.b_lower > hi)
                        rec.success = false;
                    else {
                        rec.censored = true;
                        rec.status = "bracket does not decide the event";
                    }
                }
            } else if (spec.experiment == "balance_check") {
                Graph g = detail::draw_graph(spec, rec.stream_index);
                if (n > 20) {
                    rec.censored = true;
                    rec.status = "exhaustive optimum enumeration limited to n <= 20";
                } else {
                    auto survey = enumerate_near_optimal(g, 0, 2);
                    rec.b_value = survey.b_value;
                    bool ok = true;
                    for (const auto& e : survey.near_optimal)
                        if (e.gap == 0 && !is_balanced(e.partition, n)) ok = false;
                    rec.success = ok;
                }
            } else if (spec.experiment == "nonedge_check") {
                Graph g = detail::draw_graph(spec, rec.stream_index);
                const long m = g.edge_count();
                if (m == 0) {
                    rec.censored = true;
                    rec.status = "empty graph: bound undefined (M = 0)";
                } else {
                    long ne = min_nonedges_optimal(g);
                    double bound = formula_nonedge_bound(double(n), double(m), 1.0).value;
                    rec.b_value = ne;
                    rec.success = (double(ne) >= bound);
                }
            } else if (spec.experiment == "maxcut_uniqueness") {
                Graph g = detail::draw_graph(spec, rec.stream_index);
                auto survey = enumerate_near_optimal(g, 0, 2);
                rec.b_value = survey.b_value;
                rec.max_pairwise_distance = survey.max_pairwise_optimal_distance;
                rec.success = (survey.max_pairwise_optimal_distance <= n / 2);
            } else if (spec.experiment == "gap_distance_survey") {
                Graph g = detail::draw_graph(spec, rec.stream_index);
                auto survey = enumerate_near_optimal(g, spec.gap_bound, 2);
                rec.b_value = survey.b_value;
                rec.max_pairwise_distance = survey.max_pairwise_optimal_distance;
                for (const auto& e : survey.near_optimal)
                    rec.gap_dist.push_back({e.gap, e.dist_to_canonical});
                rec.success = true;
            } else if (spec.experiment == "evolution_overtake") {
                Graph g = detail::draw_graph(spec, rec.stream_index);
                auto start = max_cut(g, 2);
                rec.b_value = start.b_value;
                Partition pistar = *start.canonical;
                long prevPiCut = cut_size(g, pistar);
                bool overtaken = false;
                long b = start.b_value;
                for (std::size_t step = 0; step < spec.t_schedule.size(); ++step) {
                    std::uint64_t sub = (rec.stream_index << 16) | std::uint64_t(step + 1);
                    g = evolve(g, std::uint64_t(spec.t_schedule[step]),
                               RngSeed{spec.master_seed, sub});
                    long piCut = cut_size(g, pistar);
                    rec.increments.push_back(piCut - prevPiCut);
                    prevPiCut = piCut;
                    b = max_cut(g, 2).b_value;
                    if (b > piCut) overtaken = true;
                }
                rec.b_final = b;
                rec.overtake = overtaken;
                rec.success = overtaken;
            } else if (spec.experiment == "uniform_tfree_bipartite") {
                RngSeed seed{spec.master_seed, rec.stream_index};
                if (!spec.m)
                    throw std::invalid_argument("uniform_tfree_bipartite needs M");
                auto s = sample_uniform_triangle_free(n, std::uint64_t(*spec.m), seed);
                if (!s.graph) {
                    rec.censored = true;
                    rec.status = "rejection budget exhausted";
                } else {
                    rec.success = is_k_partite(*s.graph, 2).value;
                }
            }
        } catch (const std::invalid_argument& e) {
            rec.censored = true;
            rec.status = e.what();
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

/// Versioned JSON document: {schema_version, spec, records, summary}.
inline nlohmann::ordered_json results_to_json(const ExperimentResults& res) {
    nlohmann::ordered_json j;
    j["schema_version"] = kResultSchemaVersion;
    j["spec"] = res.spec.to_json();
    auto records = nlohmann::ordered_json::array();
    for (const auto& r : res.records) records.push_back(r.to_json());
    j["records"] = records;

    nlohmann::ordered_json summary;
    const long total = long(res.records.size());
    const long decided = res.decided();
    const long wins = res.successes();
    summary["trials"] = total;
    summary["decided"] = decided;
    summary["censored"] = res.censored();
    summary["successes"] = wins;
    if (decided > 0) {
        auto w = wilson_interval(wins, decided);
        summary["frequency"] = w.center;
        summary["wilson_low"] = w.low;
        summary["wilson_high"] = w.high;
    }
    if (res.spec.experiment == "maxcut_uniqueness" || res.spec.experiment == "gap_distance_survey") {
        double sum = 0;
        long cnt = 0;
        for (const auto& r : res.records)
            if (!r.censored && r.max_pairwise_distance) sum += *r.max_pairwise_distance, ++cnt;
        if (cnt > 0) summary["mean_max_pairwise_distance"] = sum / double(cnt);
    }
    if (res.spec.experiment == "evolution_overtake" && res.spec.m) {
        long tTotal = 0;
        for (long t : res.spec.t_schedule) tTotal += t;
        double sum = 0;
        long cnt = 0;
        for (const auto& r : res.records)
            if (!r.censored && r.b_value && r.b_final) sum += double(*r.b_final - *r.b_value), ++cnt;
        if (cnt > 0 && tTotal > 0) {
            summary["mean_delta_b"] = sum / double(cnt);
            summary["mean_delta_b_per_edge"] = sum / double(cnt) / double(tTotal);
            auto sandwich = evolution_sandwich(double(res.spec.n), double(*res.spec.m),
                                               double(tTotal), res.spec.cprime);
            summary["sandwich_lower"] = sandwich.lower;
            summary["sandwich_upper"] = sandwich.upper;
        }
    }
    j["summary"] = summary;
    return j;
}

/// json: the versioned document above; csv: kCsvHeader then one row per trial.
inline std::string emit(const ExperimentResults& res, const std::string& format) {
    if (format == "json") return results_to_json(res).dump(2) + "\n";
    if (format != "csv") throw std::invalid_argument("emit: format must be json or csv");
    std::ostringstream out;
    out << kCsvHeader << "\n";
    auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string(); };
    for (const auto& r : res.records) {
        out << r.stream_index << ',' << (r.censored ? 1 : 0) << ',' << '"' << r.status << '"'
            << ',' << (r.success ? (*r.success ? "1" : "0") : "") << ',' << opt(r.b_value) << ','
            << opt(r.t_value) << ',' << opt(r.b_final) << ',' << opt(r.b_lower) << ','
            << opt(r.b_upper) << ',' << opt(r.max_pairwise_distance) << ','
            << (r.overtake ? (*r.overtake ? "1" : "0") : "") << ',';
        out << '"';
        for (std::size_t i = 0; i < r.increments.size(); ++i)
            out << (i ? ";" : "") << r.increments[i];
        out << '"' << ',' << '"';
        for (std::size_t i = 0; i < r.gap_dist.size(); ++i)
            out << (i ? ";" : "") << r.gap_dist[i].first << ':' << r.gap_dist[i].second;
        out << '"' << '\n';
    }
    return out.str();
}

}  // namespace cutlab

#endif
