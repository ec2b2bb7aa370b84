// cslab: command-line front end for code construction, reduction, solving and the gap experiment.
//
// Exit status: 0 pass, 1 a checked property failed, 2 usage, input or budget error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cslab/codegen.hpp"
#include "cslab/error.hpp"
#include "cslab/harness.hpp"
#include "cslab/io.hpp"
#include "cslab/reducer.hpp"
#include "cslab/solvers.hpp"

namespace {

using namespace cslab;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Globals {
    std::string profile = "desk16";
    std::uint64_t seed = 1;
    bool json = false;
    std::string out;
};

CodeParams resolve_profile(const std::string& name) {
    if (auto p = profile_by_name(name)) return *p;
    std::string known;
    for (const auto& n : profile_names()) known += (known.empty() ? "" : ", ") + n;
    throw ContractViolation("unknown profile '" + name + "' (known: " + known + ")");
}

// Writes to --out when given, otherwise stdout.
void emit(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw FileError("cannot write " + g.out);
    f << text;
}

std::string witness_text(const std::optional<BitString>& w) { return w ? w->to_string() : "-"; }

double ms(std::chrono::nanoseconds t) { return std::chrono::duration<double, std::milli>(t).count(); }

int run_code_gen(const Globals& g, std::size_t n, const std::string& mode) {
    const auto p = resolve_profile(g.profile);
    GreedyOptions opts;
    opts.seed = g.seed;
    opts.mode = mode == "randomized" ? ConstructionMode::randomized : ConstructionMode::full;
    const auto code = greedy_construct(n, p, opts);
    if (g.json) {
        nlohmann::json j;
        j["params"] = {{"block_len", p.block_len}, {"alpha", p.alpha_num}, {"beta", p.beta_num},
                       {"delta", p.delta_num}};
        j["codewords"] = nlohmann::json::array();
        for (const auto& x : code.strings) j["codewords"].push_back(x.to_string());
        emit(g, j.dump(2) + "\n");
    } else {
        std::ostringstream out;
        io::write_code(out, code);
        emit(g, out.str());
    }
    return exit_pass;
}

int run_code_verify(const Globals& g, const std::string& path, std::optional<std::size_t> n) {
    const auto code = io::load_code(path);
    const auto report = verify_code(code, n.value_or(code.size()));
    if (g.json) {
        emit(g, nlohmann::json{{"ok", report.ok}, {"size", code.size()}, {"violation", report.violation}}.dump(2) +
                    "\n");
    } else {
        emit(g, report.ok ? "ok: " + std::to_string(code.size()) + " codewords\n"
                          : "violation: " + report.violation + "\n");
    }
    return report.ok ? exit_pass : exit_fail;
}

struct ReduceArgs {
    std::string graph;
    std::string mode = "full";
    std::size_t sel_samples = 1000;
    std::size_t adj_samples = 1000;
    std::size_t max_constraints = 40'000'000;
    std::string manifest;
};

int run_reduce(const Globals& g, const ReduceArgs& a) {
    const auto graph = io::load_graph(a.graph);
    const auto p = resolve_profile(g.profile);
    ReduceOptions opts;
    opts.mode = a.mode == "sampled" ? ReductionMode::sampled : ReductionMode::full;
    opts.seed = g.seed;
    opts.sel_samples = a.sel_samples;
    opts.adj_samples = a.adj_samples;
    opts.max_constraints = a.max_constraints;
    const auto inst = reduce(graph, p, opts);
    if (!a.manifest.empty()) {
        std::ofstream f(a.manifest);
        if (!f) throw FileError("cannot write " + a.manifest);
        f << io::instance_manifest(inst).dump(2) << '\n';
    }
    if (g.out.empty() || g.json) {
        const auto s = instance_stats(inst);
        if (g.json) {
            std::cout << io::instance_manifest(inst).dump(2) << '\n';
        } else {
            std::cout << "L=" << s.length << " d=" << s.d << " gap_target=" << s.gap_target << " sel=" << s.sel
                      << " adj=" << s.adj << " total=" << s.total << '\n';
        }
    }
    if (!g.out.empty()) {
        std::ofstream f(g.out);
        if (!f) throw FileError("cannot write " + g.out);
        io::write_instance(f, inst);
    }
    return exit_pass;
}

int run_solve(const Globals& g, const std::string& path, const std::string& algo, std::optional<std::size_t> d,
              std::uint64_t max_nodes, std::size_t cap) {
    const auto inst = io::load_instance(path);
    if (inst.constraints.empty()) throw ContractViolation("instance has no constraints");
    nlohmann::json j;
    std::ostringstream out;
    int status = exit_pass;
    if (d) {
        bool yes = false;
        std::optional<BitString> witness;
        std::uint64_t nodes = 0;
        if (algo == "branch") {
            const auto r = branch_decide(inst.constraints, *d, max_nodes);
            if (r.exhausted) throw BudgetExceeded("branch search hit --max-nodes " + std::to_string(max_nodes));
            yes = r.yes;
            witness = r.witness;
            nodes = r.nodes;
        } else {
            const auto r = brute_force_opt(inst.constraints, cap);
            if (!r.solved()) throw BudgetExceeded(r.refusal);
            yes = *r.optimum <= *d;
            if (yes) witness = r.witness;
            nodes = r.nodes;
        }
        j = {{"algo", algo}, {"d", *d}, {"answer", yes ? "yes" : "no"}, {"witness", witness_text(witness)},
             {"nodes", nodes}};
        out << (yes ? "yes" : "no") << '\n' << "witness: " << witness_text(witness) << '\n' << "nodes: " << nodes
            << '\n';
    } else {
        const auto r = algo == "branch" ? branch_opt(inst.constraints, max_nodes) : brute_force_opt(inst.constraints, cap);
        if (!r.solved()) throw BudgetExceeded(r.refusal);
        j = {{"algo", algo}, {"optimum", *r.optimum}, {"witness", witness_text(r.witness)}, {"nodes", r.nodes},
             {"time_ms", ms(r.wall_time)}};
        out << "optimum: " << *r.optimum << '\n'
            << "witness: " << witness_text(r.witness) << '\n'
            << "nodes: " << r.nodes << '\n'
            << "time_ms: " << ms(r.wall_time) << '\n';
    }
    emit(g, g.json ? j.dump(2) + "\n" : out.str());
    return status;
}

int run_verify_center(const Globals& g, const std::string& path, const std::string& center,
                      std::optional<std::size_t> d) {
    const auto inst = io::load_instance(path);
    if (inst.constraints.empty()) throw ContractViolation("instance has no constraints");
    const auto w = BitString::parse(center);
    if (w.length() != inst.length) {
        throw ContractViolation("center has length " + std::to_string(w.length()) + ", instance has " +
                                std::to_string(inst.length));
    }
    const auto bound = d.value_or(inst.d);
    const auto md = max_distance(w, inst.constraints);
    const bool ok = md.value <= bound;
    if (g.json) {
        emit(g, nlohmann::json{{"max_distance", md.value},
                               {"argmax", display_index(md.index)},
                               {"bound", bound},
                               {"ok", ok}}
                        .dump(2) +
                    "\n");
    } else {
        emit(g, "max_distance: " + std::to_string(md.value) + " (constraint " +
                    std::to_string(display_index(md.index)) + ")\nbound: " + std::to_string(bound) +
                    "\nok: " + (ok ? "yes" : "no") + "\n");
    }
    return ok ? exit_pass : exit_fail;
}

int run_gap_test(const Globals& g, const std::string& path, std::uint64_t max_tuples, bool certificate,
                 bool timings, std::uint64_t clique_budget, std::size_t max_constraints) {
    const auto graph = io::load_graph(path);
    const auto p = resolve_profile(g.profile);
    ExperimentOptions opts;
    opts.soundness.max_tuples = max_tuples;
    opts.soundness.block_certificate = certificate;
    opts.clique_budget = clique_budget;
    opts.reduce.max_constraints = max_constraints;
    opts.reduce.greedy.seed = g.seed;
    const auto report = gap_experiment(graph, p, opts);
    emit(g, g.json ? report_json(report, timings).dump(2) + "\n" : render_report(report, timings));
    if (report.passed) return exit_pass;
    return report.complete ? exit_fail : exit_usage;
}

int run_bench(const Globals& g, std::size_t n, const std::vector<std::size_t>& ks) {
    const auto p = resolve_profile(g.profile);
    const auto rows = bench_reduce(p, n, ks);
    if (g.json) {
        auto j = nlohmann::json::array();
        for (const auto& r : rows) {
            j.push_back({{"k", r.k}, {"sel", r.sel}, {"adj", r.adj}, {"closed_sel", r.closed_sel},
                         {"closed_adj", r.closed_adj}, {"match", r.counts_match}, {"ms", r.milliseconds}});
        }
        emit(g, j.dump(2) + "\n");
    } else {
        emit(g, render_bench(rows));
    }
    for (const auto& r : rows) {
        if (!r.counts_match) return exit_fail;
    }
    return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closest String laboratory: selection codes, the Clique reduction, exact solvers, gap checks"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--profile", g.profile, "Code profile: desk16, desk20, paper100")->capture_default_str();
    app.add_option("--seed", g.seed, "Seed for every randomized stage")->capture_default_str();
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("-o,--out", g.out, "Write the primary output here instead of stdout");

    int status = exit_pass;

    auto* code = app.add_subcommand("code", "Selection codes");
    code->require_subcommand(1);
    std::size_t gen_n = 0;
    std::string gen_mode = "full";
    auto* gen = code->add_subcommand("gen", "Greedy code construction");
    gen->add_option("-n,--n", gen_n, "Number of codewords")->required();
    gen->add_option("--mode", gen_mode, "full or randomized")
        ->check(CLI::IsMember({"full", "randomized"}))
        ->capture_default_str();
    gen->callback([&] { status = run_code_gen(g, gen_n, gen_mode); });

    std::string verify_path;
    std::optional<std::size_t> verify_n;
    auto* verify = code->add_subcommand("verify", "Check weights and pairwise distances of a code file");
    verify->add_option("--code", verify_path, "Code file")->required();
    verify->add_option("-n,--n", verify_n, "Required number of codewords");
    verify->callback([&] { status = run_code_verify(g, verify_path, verify_n); });

    ReduceArgs reduce_args;
    auto* red = app.add_subcommand("reduce", "Compile a Clique instance into a Closest String instance");
    red->add_option("--graph", reduce_args.graph, "Graph file")->required();
    red->add_option("--mode", reduce_args.mode, "full or sampled")
        ->check(CLI::IsMember({"full", "sampled"}))
        ->capture_default_str();
    red->add_option("--sel-samples", reduce_args.sel_samples, "Sampled mode: selection constraints")
        ->capture_default_str();
    red->add_option("--adj-samples", reduce_args.adj_samples, "Sampled mode: adjacency constraints")
        ->capture_default_str();
    red->add_option("--max-constraints", reduce_args.max_constraints, "Refuse larger instances")
        ->capture_default_str();
    red->add_option("--manifest", reduce_args.manifest, "Write the JSON provenance manifest here");
    red->callback([&] { status = run_reduce(g, reduce_args); });

    std::string solve_path;
    std::string algo = "branch";
    std::optional<std::size_t> solve_d;
    std::uint64_t max_nodes = 100'000'000;
    std::size_t cap = brute_force_default_cap;
    auto* solve = app.add_subcommand("solve", "Exact Closest String");
    solve->add_option("--instance", solve_path, "Instance file")->required();
    solve->add_option("--algo", algo, "branch or brute")
        ->check(CLI::IsMember({"branch", "brute"}))
        ->capture_default_str();
    solve->add_option("--d", solve_d, "Decide distance d instead of optimizing");
    solve->add_option("--max-nodes", max_nodes, "Branch search node budget")->capture_default_str();
    solve->add_option("--max-length", cap, "Brute force length cap")->capture_default_str();
    solve->callback([&] { status = run_solve(g, solve_path, algo, solve_d, max_nodes, cap); });

    std::string vc_path;
    std::string vc_center;
    std::optional<std::size_t> vc_d;
    auto* vc = app.add_subcommand("verify-center", "Maximum distance of a center to an instance");
    vc->add_option("--instance", vc_path, "Instance file")->required();
    vc->add_option("--center", vc_center, "Center as a 0/1 string")->required();
    vc->add_option("--d", vc_d, "Bound to check (default: the instance's d)");
    vc->callback([&] { status = run_verify_center(g, vc_path, vc_center, vc_d); });

    std::string gap_graph;
    std::uint64_t max_tuples = 1 << 20;
    bool no_certificate = false;
    bool timings = false;
    std::uint64_t clique_budget = 100'000'000;
    std::size_t gap_max_constraints = 40'000'000;
    auto* gap = app.add_subcommand("gap-test", "Full reduction, clique oracle, completeness and soundness checks");
    gap->add_option("--graph", gap_graph, "Graph file")->required();
    gap->add_option("--max-tuples", max_tuples, "Tuple-center scan budget")->capture_default_str();
    gap->add_option("--clique-budget", clique_budget, "Clique oracle subset budget")->capture_default_str();
    gap->add_option("--max-constraints", gap_max_constraints, "Reduction size budget")->capture_default_str();
    gap->add_flag("--no-certificate", no_certificate, "Skip the per-block certificate");
    gap->add_flag("--timings", timings, "Include stage timings (output is then not reproducible)");
    gap->callback([&] {
        status = run_gap_test(g, gap_graph, max_tuples, !no_certificate, timings, clique_budget, gap_max_constraints);
    });

    std::size_t bench_n = 6;
    std::vector<std::size_t> bench_ks;
    auto* bench = app.add_subcommand("bench", "Time full-mode reduction over k");
    bench->add_option("-n,--n", bench_n, "Cycle length")->capture_default_str();
    auto* ks_opt = bench->add_option("--ks", bench_ks, "Clique sizes (default 2,3); bare --ks gives an empty table")
                       ->delimiter(',')
                       ->expected(0, -1);
    bench->callback([&] {
        if (ks_opt->count() == 0) {
            bench_ks = {2, 3};
        } else if (const auto& given = ks_opt->results();
                   std::all_of(given.begin(), given.end(), [](const std::string& s) { return s.empty(); })) {
            bench_ks.clear();
        }
        status = run_bench(g, bench_n, bench_ks);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_pass : exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return status;
}
