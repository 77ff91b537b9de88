#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutlab/bounds.hpp"
#include "cutlab/cut.hpp"
#include "cutlab/experiment.hpp"
#include "cutlab/extremal.hpp"
#include "cutlab/graph.hpp"
#include "cutlab/io.hpp"
#include "cutlab/lattice.hpp"
#include "cutlab/partition.hpp"
#include "cutlab/randgen.hpp"

namespace {

using nlohmann::ordered_json;

cutlab::Graph load_graph(const std::string& path) {
    if (path == "-") return cutlab::read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    return cutlab::read_edge_list(in);
}

ordered_json partition_json(const cutlab::Partition& pi) {
    ordered_json parts = ordered_json::array();
    for (const auto& p : pi.parts()) parts.push_back(p.members());
    return parts;
}

ordered_json edges_json(const std::vector<cutlab::Edge>& es) {
    ordered_json out = ordered_json::array();
    for (auto [u, v] : es) out.push_back({u, v});
    return out;
}

/// --seed flag wins over the CUTLAB_SEED environment variable.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("CUTLAB_SEED")) return std::stoull(env);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers and seeded experiments for cuts and clique-free subgraphs"};
    app.require_subcommand(1);

    // --- sample ---
    auto* sample = app.add_subcommand("sample", "draw a random graph and print its edge list");
    int s_n = 10;
    double s_p = -1;
    long s_m = -1;
    bool s_tfree = false;
    std::optional<std::uint64_t> s_seed;
    std::uint64_t s_stream = 0;
    sample->add_option("--n", s_n, "vertex count")->required();
    sample->add_option("--p", s_p, "edge probability (G(n,p))");
    sample->add_option("--M", s_m, "edge count (G(n,M))");
    sample->add_flag("--triangle-free", s_tfree, "rejection-sample a uniform triangle-free graph (needs --M)");
    sample->add_option("--seed", s_seed, "master seed (beats CUTLAB_SEED)");
    sample->add_option("--stream", s_stream, "stream index");

    // --- maxcut ---
    auto* maxcut = app.add_subcommand("maxcut", "exact maximum cut with the canonical optimum");
    std::string mc_input = "-";
    int mc_l = 2, mc_near = -1;
    maxcut->add_option("--input", mc_input, "edge-list file, '-' for stdin");
    maxcut->add_option("--l", mc_l, "number of parts");
    maxcut->add_option("--near", mc_near, "also list partitions with gap <= this bound");

    // --- tfree ---
    auto* tfree = app.add_subcommand("tfree", "maximum K_l-free subgraph");
    std::string tf_input = "-";
    int tf_l = 3, tf_witnesses = 64;
    tfree->add_option("--input", tf_input, "edge-list file, '-' for stdin");
    tfree->add_option("--l", tf_l, "forbidden clique size");
    tfree->add_option("--witnesses", tf_witnesses, "witness enumeration cap");

    // --- perturb ---
    auto* perturb = app.add_subcommand("perturb", "evaluate the perturbation events for (G, partition, S)");
    std::string pb_input = "-", pb_partition, pb_add;
    perturb->add_option("--input", pb_input, "edge-list file, '-' for stdin");
    perturb->add_option("--partition", pb_partition, "partition, e.g. \"1,2|3\"")->required();
    perturb->add_option("--add", pb_add, "inside edges S, e.g. \"1-2,3-4\"")->required();

    // --- fkg-check ---
    auto* fkg = app.add_subcommand("fkg-check", "exhaustive correlation check of the two events");
    int fk_n = 4, fk_r0 = 0, fk_s0 = 1;
    double fk_p = 0.5;
    std::string fk_partition, fk_add;
    fkg->add_option("--n", fk_n, "vertex count (<= 5)");
    fkg->add_option("--p", fk_p, "edge probability");
    fkg->add_option("--partition", fk_partition, "bipartition, e.g. \"1,2|3,4\"")->required();
    fkg->add_option("--add", fk_add, "inside edges S for the decreasing event")->required();
    fkg->add_option("--r0", fk_r0, "gap tolerance of the increasing event");
    fkg->add_option("--s0", fk_s0, "distance tolerance of the increasing event");

    // --- bounds ---
    auto* bounds = app.add_subcommand("bounds", "closed-form bound and parameter formulas");
    std::string bd_formula;
    double bd_C = 1, bd_omega = 1, bd_r = 1, bd_n = 0, bd_p = 0.5, bd_M = 0, bd_lambda = 0,
           bd_t = 0, bd_s = 0, bd_alpha = 0.25;
    long bd_N = 0, bd_d = 0;
    std::string bd_side = "upper";
    bounds->add_option("--formula", bd_formula,
                       "one of: chernoff, trinomial, s0, r0, s_of_r, threshold_m, t_i, x_i, "
                       "pittel, b_bounds, balance_bound, nonedge_bound")
        ->required();
    bounds->add_option("--C", bd_C, "constant C");
    bounds->add_option("--omega", bd_omega, "omega");
    bounds->add_option("--r", bd_r, "r");
    bounds->add_option("--n", bd_n, "n");
    bounds->add_option("--p", bd_p, "p");
    bounds->add_option("--M", bd_M, "M");
    bounds->add_option("--lambda", bd_lambda, "lambda");
    bounds->add_option("--t", bd_t, "t (tail offset or t_i)");
    bounds->add_option("--s", bd_s, "s or s_i");
    bounds->add_option("--N", bd_N, "trinomial N");
    bounds->add_option("--alpha", bd_alpha, "trinomial alpha");
    bounds->add_option("--d", bd_d, "trinomial offset d");
    bounds->add_option("--side", bd_side, "chernoff side: upper | lower");

    // --- experiment ---
    auto* experiment = app.add_subcommand("experiment", "seeded Monte Carlo experiment runner");
    experiment->require_subcommand(1);
    auto* exp_run = experiment->add_subcommand("run", "run an experiment spec");
    std::string er_spec_path, er_format = "json", er_out;
    std::optional<std::uint64_t> er_seed;
    std::optional<long> er_trials;
    std::optional<std::string> er_experiment;
    std::optional<int> er_n, er_gap;
    std::optional<double> er_p;
    std::optional<long> er_m;
    exp_run->add_option("--spec", er_spec_path, "JSON experiment configuration; flags override it");
    exp_run->add_option("--format", er_format, "json | csv");
    exp_run->add_option("--out", er_out, "output file (default stdout)");
    exp_run->add_option("--experiment", er_experiment, "experiment name");
    exp_run->add_option("--n", er_n, "vertex count");
    exp_run->add_option("--p", er_p, "edge probability");
    exp_run->add_option("--M", er_m, "edge count");
    exp_run->add_option("--trials", er_trials, "trial count");
    exp_run->add_option("--gap", er_gap, "near-optimal gap bound");
    exp_run->add_option("--seed", er_seed, "master seed (beats CUTLAB_SEED)");

    auto* exp_emit = experiment->add_subcommand("emit", "re-emit stored results in another format");
    std::string ee_input, ee_format = "csv";
    exp_emit->add_option("--input", ee_input, "results JSON produced by 'experiment run'")->required();
    exp_emit->add_option("--format", ee_format, "json | csv");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sample) {
            cutlab::RngSeed seed{resolve_seed(s_seed), s_stream};
            if (s_tfree) {
                if (s_m < 0) throw std::invalid_argument("--triangle-free needs --M");
                auto res = cutlab::sample_uniform_triangle_free(s_n, std::uint64_t(s_m), seed);
                if (!res.graph) {
                    std::cerr << "rejection budget exhausted after " << res.attempts
                              << " attempts\n";
                    return 3;
                }
                cutlab::write_edge_list(std::cout, *res.graph);
            } else if (s_p >= 0 && s_m >= 0) {
                throw std::invalid_argument("give exactly one of --p / --M");
            } else if (s_p >= 0) {
                cutlab::write_edge_list(std::cout, cutlab::sample_gnp(s_n, s_p, seed));
            } else if (s_m >= 0) {
                cutlab::write_edge_list(std::cout, cutlab::sample_gnm(s_n, std::uint64_t(s_m), seed));
            } else {
                throw std::invalid_argument("give one of --p / --M");
            }
        } else if (*maxcut) {
            cutlab::Graph g = load_graph(mc_input);
            ordered_json out;
            if (mc_near >= 0) {
                auto survey = cutlab::enumerate_near_optimal(g, mc_near, mc_l);
                out["b"] = survey.b_value;
                out["canonical_parts"] = partition_json(*survey.canonical);
                ordered_json near = ordered_json::array();
                for (const auto& e : survey.near_optimal) {
                    ordered_json rec;
                    rec["parts"] = partition_json(e.partition);
                    rec["gap"] = e.gap;
                    rec["dist_to_canonical"] = e.dist_to_canonical;
                    near.push_back(rec);
                }
                out["near_optimal"] = near;
                out["max_pairwise_optimal_distance"] = survey.max_pairwise_optimal_distance;
            } else {
                auto survey = cutlab::max_cut(g, mc_l);
                out["b"] = survey.b_value;
                out["canonical_parts"] = partition_json(*survey.canonical);
            }
            std::cout << out.dump(2) << "\n";
        } else if (*tfree) {
            cutlab::Graph g = load_graph(tf_input);
            auto sol = cutlab::max_clique_free(g, tf_l, tf_witnesses);
            ordered_json out;
            out["t"] = sol.t_value;
            out["optimal"] = sol.optimal;
            ordered_json ws = ordered_json::array();
            for (const auto& w : sol.witnesses) ws.push_back(edges_json(w));
            out["witnesses"] = ws;
            out["witnesses_truncated"] = sol.witnesses_truncated;
            out["all_k_partite"] = sol.all_k_partite;
            out["verdict_partial"] = sol.verdict_partial;
            std::cout << out.dump(2) << "\n";
            if (!sol.optimal) return 3;
        } else if (*perturb) {
            cutlab::Graph g = load_graph(pb_input);
            auto pi = cutlab::parse_partition(pb_partition, g.vertex_count());
            auto s = cutlab::parse_edges(pb_add);
            ordered_json out;
            out["gap"] = cutlab::gap(g, pi);
            out["event_E"] = cutlab::perturbation_event(g, pi, s);
            out["event_E2"] = cutlab::event_E2(g, pi, s);
            std::cout << out.dump(2) << "\n";
        } else if (*fkg) {
            auto pi = cutlab::parse_partition(fk_partition, fk_n);
            auto s = cutlab::parse_edges(fk_add);
            auto inc = [&](const cutlab::Graph& g) {
                return cutlab::event_E1(g, pi, fk_r0, fk_s0) ? 1.0 : 0.0;
            };
            auto dec = [&](const cutlab::Graph& g) {
                return cutlab::event_E2_total(g, pi, s) ? 1.0 : 0.0;
            };
            auto rep = cutlab::fkg_check(fk_n, fk_p, inc, dec);
            ordered_json out;
            out["e_fg"] = rep.e_fg;
            out["e_f"] = rep.e_f;
            out["e_g"] = rep.e_g;
            out["slack"] = rep.slack;
            out["holds"] = rep.holds;
            std::cout << out.dump(2) << "\n";
        } else if (*bounds) {
            ordered_json out;
            auto from_report = [&](const cutlab::BoundReport& r) {
                out["name"] = r.name;
                out["inputs"] = r.inputs;
                out["value"] = r.value;
                if (r.has_log) out["log_value"] = r.log_value;
            };
            if (bd_formula == "chernoff") {
                auto side = bd_side == "lower" ? cutlab::TailSide::lower : cutlab::TailSide::upper;
                out["name"] = "chernoff_tail";
                out["inputs"] = {{"n", bd_n}, {"p", bd_p}, {"t", bd_t}, {"side", bd_side}};
                out["value"] = cutlab::chernoff_tail(std::int64_t(bd_n), bd_p, bd_t, side);
            } else if (bd_formula == "trinomial") {
                auto term = cutlab::trinomial_term(bd_N, bd_alpha, bd_d);
                out["name"] = "trinomial_term";
                out["inputs"] = {{"N", bd_N}, {"alpha", bd_alpha}, {"d", bd_d}};
                out["value"] = term.value;
                out["log_value"] = term.log_value;
                out["effective_alpha"] = term.effective_alpha;
                out["d_in_range"] = term.d_in_range;
            } else if (bd_formula == "s0") {
                from_report(cutlab::formula_s0(bd_C, bd_omega, bd_r, bd_n, bd_p));
            } else if (bd_formula == "r0") {
                from_report(cutlab::formula_r0(bd_p, bd_n));
            } else if (bd_formula == "s_of_r") {
                from_report(cutlab::formula_s_of_r(bd_n, bd_r));
            } else if (bd_formula == "threshold_m") {
                from_report(cutlab::formula_threshold_m(bd_n));
            } else if (bd_formula == "t_i") {
                auto v = cutlab::formula_t_i(bd_r, bd_s, bd_n);
                out["name"] = "t_i";
                out["inputs"] = {{"r", bd_r}, {"s_i", bd_s}, {"n", bd_n}};
                out["value"] = v.real;
                out["ceiling"] = v.ceiling;
            } else if (bd_formula == "x_i") {
                auto v = cutlab::formula_x_i(bd_s, bd_n, bd_t);
                out["name"] = "x_i";
                out["inputs"] = {{"s", bd_s}, {"n", bd_n}, {"t_i", bd_t}};
                out["value"] = v.real;
                out["ceiling"] = v.ceiling;
            } else if (bd_formula == "pittel") {
                from_report(cutlab::formula_pittel_factor(bd_M));
            } else if (bd_formula == "b_bounds") {
                auto v = cutlab::formula_b_bounds(bd_n, bd_M);
                out["name"] = "b_bounds";
                out["inputs"] = {{"n", bd_n}, {"M", bd_M}};
                out["lower"] = v.lower;
                out["upper"] = v.upper;
            } else if (bd_formula == "balance_bound") {
                from_report(cutlab::formula_balance_bound(bd_n, bd_p, bd_lambda));
            } else if (bd_formula == "nonedge_bound") {
                from_report(cutlab::formula_nonedge_bound(bd_n, bd_M, bd_C));
            } else {
                throw std::invalid_argument("unknown formula '" + bd_formula + "'");
            }
            std::cout << out.dump(2) << "\n";
        } else if (*exp_run) {
            cutlab::ExperimentSpec spec;
            if (!er_spec_path.empty()) {
                std::ifstream in(er_spec_path);
                if (!in) throw std::invalid_argument("cannot open spec file '" + er_spec_path + "'");
                nlohmann::json j;
                in >> j;
                spec = cutlab::ExperimentSpec::from_json(j);
            }
            if (er_experiment) spec.experiment = *er_experiment;
            if (er_n) spec.n = *er_n;
            if (er_p) spec.p = *er_p, spec.m.reset();
            if (er_m) spec.m = *er_m, spec.p.reset();
            if (er_trials) spec.trials = *er_trials;
            if (er_gap) spec.gap_bound = *er_gap;
            if (er_seed || std::getenv("CUTLAB_SEED")) spec.master_seed = resolve_seed(er_seed);
            auto results = cutlab::run_experiment(spec);
            std::string payload = cutlab::emit(results, er_format);
            if (er_out.empty()) {
                std::cout << payload;
            } else {
                std::ofstream outFile(er_out, std::ios::binary);
                outFile << payload;
            }
            if (results.censored() > 0) return 3;
        } else if (*exp_emit) {
            std::ifstream in(ee_input);
            if (!in) throw std::invalid_argument("cannot open results file '" + ee_input + "'");
            nlohmann::json j;
            in >> j;
            cutlab::ExperimentResults results;
            results.spec = cutlab::ExperimentSpec::from_json(j.at("spec"));
            for (const auto& rj : j.at("records")) {
                cutlab::TrialRecord r;
                r.stream_index = rj.at("stream_index").get<std::uint64_t>();
                r.master_seed = rj.at("master_seed").get<std::uint64_t>();
                r.censored = rj.at("censored").get<bool>();
                r.status = rj.at("status").get<std::string>();
                if (rj.contains("success")) r.success = rj.at("success").get<bool>();
                if (rj.contains("b_value")) r.b_value = rj.at("b_value").get<long>();
                if (rj.contains("t_value")) r.t_value = rj.at("t_value").get<long>();
                if (rj.contains("b_final")) r.b_final = rj.at("b_final").get<long>();
                if (rj.contains("b_lower")) r.b_lower = rj.at("b_lower").get<long>();
                if (rj.contains("b_upper")) r.b_upper = rj.at("b_upper").get<long>();
                if (rj.contains("max_pairwise_distance"))
                    r.max_pairwise_distance = rj.at("max_pairwise_distance").get<int>();
                if (rj.contains("overtake")) r.overtake = rj.at("overtake").get<bool>();
                if (rj.contains("increments"))
                    r.increments = rj.at("increments").get<std::vector<long>>();
                if (rj.contains("gap_dist"))
                    for (const auto& gd : rj.at("gap_dist"))
                        r.gap_dist.push_back({gd.at(0).get<int>(), gd.at(1).get<int>()});
                results.records.push_back(std::move(r));
            }
            std::cout << cutlab::emit(results, ee_format);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
