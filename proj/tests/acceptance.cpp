// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.
//
// All numeric criteria are exact (tolerance 0). Runtime limits are in seconds and are checked
// separately from the deterministic detail text, which criterion 8 compares across two runs.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cslab/harness.hpp"
#include "cslab/kernels.hpp"
#include "cslab/solvers.hpp"

using namespace cslab;

namespace {

constexpr double limit_codes_s = 10.0;       // per profile
constexpr double limit_forbidden_s = 60.0;
constexpr double limit_completeness_s = 600.0;
constexpr double limit_soundness_s = 1800.0;
constexpr double limit_solvers_s = 300.0;
constexpr std::size_t min_graphs = 5;
constexpr std::size_t solver_instances = 200;

struct Outcome {
    bool pass = true;
    std::string detail;
    double seconds = 0.0;
    double limit = 0.0;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

constexpr std::uint64_t fnv_seed = 14695981039346656037ULL;

std::string hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Direct recomputation of the code properties from integer popcounts.
bool code_oracle(const SelectionCode& code, std::size_t n) {
    const auto& p = code.params;
    if (code.size() != n) return false;
    for (std::size_t a = 0; a < n; ++a) {
        const auto x = code[a].to_uint();
        if (static_cast<std::size_t>(std::popcount(x)) != p.block_len / 2) return false;
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto d = static_cast<std::size_t>(std::popcount(x ^ code[b].to_uint()));
            if (2 * d <= p.block_len - 2 * p.alpha_num || 2 * d >= p.block_len + 2 * p.alpha_num) return false;
        }
    }
    return true;
}

Outcome criterion_codes() {
    Outcome o;
    o.limit = limit_codes_s;
    std::ostringstream detail;
    for (const auto& [name, p] : {std::pair{"desk16", desk16_profile()}, std::pair{"desk20", desk20_profile()}}) {
        const auto start = Clock::now();
        const auto cap = greedy_capacity(p);
        std::size_t good = 0;
        std::uint64_t digest = fnv_seed;
        for (std::size_t n = 1; n <= cap; ++n) {
            const auto code = greedy_construct(n, p);
            const bool ok = verify_code(code, n).ok && code_oracle(code, n);
            good += ok;
            for (const auto& x : code.strings) digest = fnv1a(digest, x.to_string());
        }
        const double s = since(start);
        o.seconds = std::max(o.seconds, s);
        o.pass = o.pass && good == cap && cap >= 2;
        detail << name << ": n=1.." << cap << " passing=" << good << " digest=" << hex(digest) << "; ";
    }
    o.detail = detail.str();
    return o;
}

Outcome criterion_forbidden() {
    Outcome o;
    o.limit = limit_forbidden_s;
    const auto start = Clock::now();
    const auto p = desk16_profile();
    const auto code = greedy_construct(6, p);
    std::vector<std::uint64_t> xs;
    for (const auto& x : code.strings) xs.push_back(x.to_uint());
    std::size_t forb = 0, oracle = 0, part_a = 0, far = 0, part_b = 0, min_far = p.block_len;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << p.block_len); ++v) {
        const auto y = BitString::from_uint(v, p.block_len);
        std::size_t max_d = 0, min_d = p.block_len;
        for (const auto x : xs) {
            const auto d = static_cast<std::size_t>(std::popcount(x ^ v));
            max_d = std::max(max_d, d);
            min_d = std::min(min_d, d);
        }
        const bool oracle_forb = max_d <= p.block_len - p.beta_num;
        oracle += oracle_forb;
        if (is_forbidden(y, code)) {
            ++forb;
            if (!oracle_forb) ++part_a;
        }
        if (min_d >= p.delta_num) {
            ++far;
            const auto z = find_far_forbidden(y, code);
            std::size_t z_max = 0;
            for (const auto x : xs) z_max = std::max<std::size_t>(z_max, std::popcount(x ^ z.to_uint()));
            const auto dist = hamming_distance(y, z);
            min_far = std::min(min_far, dist);
            if (z_max > p.block_len - p.beta_num || dist < p.block_len - p.delta_num) ++part_b;
        }
    }
    o.seconds = since(start);
    o.pass = forb == oracle && part_a == 0 && part_b == 0;
    o.detail = "|Forb|=" + std::to_string(forb) + " oracle=" + std::to_string(oracle) +
               " (a) violations=" + std::to_string(part_a) + " far=" + std::to_string(far) +
               " (b) violations=" + std::to_string(part_b) + " min Ham(u,y)=" + std::to_string(min_far);
    return o;
}

// Independent |Forb| by integer popcounts.
std::size_t forbidden_oracle(const SelectionCode& code) {
    const auto& p = code.params;
    std::size_t count = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << p.block_len); ++v) {
        bool ok = true;
        for (const auto& x : code.strings) ok = ok && std::popcount(x.to_uint() ^ v) <= int(p.block_len - p.beta_num);
        count += ok;
    }
    return count;
}

std::uint64_t pow2(std::size_t e) { return std::uint64_t{1} << e; }

Outcome criterion_structure() {
    Outcome o;
    const auto p = desk16_profile();
    const std::size_t k = 3;
    const auto g = corpus::cycle(6, k);
    const auto inst = reduce(g, p);
    const auto stats = instance_stats(inst);
    const auto forb = forbidden_oracle(inst.coding.code);
    const std::size_t n = g.vertex_count();
    const std::uint64_t sel_closed = k * forb * pow2(k - 1) * pow2(p.gamma_num());
    const std::uint64_t adj_bound = k * (k - 1) / 2 * n * n * pow2(k - 2);
    std::uint64_t eligible = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) eligible += (u == v || !g.adjacent(u, v));
    }
    const std::uint64_t adj_exact = k * (k - 1) / 2 * eligible * pow2(k - 2);
    const std::size_t L = k * p.block_len + p.gamma_num();
    const std::size_t d = (k + 1) * p.block_len / 2 + p.alpha_num;
    bool lengths = inst.constraints.length() == L;
    std::uint64_t digest = fnv_seed;
    for (const auto w : inst.constraints.data()) digest = fnv1a(digest, std::to_string(w));
    o.pass = stats.sel == sel_closed && stats.adj == adj_exact && stats.adj <= adj_bound && stats.length == L &&
             stats.d == d && L == 52 && d == 34 && lengths;
    o.detail = "C6 k=3: sel=" + std::to_string(stats.sel) + " closed=" + std::to_string(sel_closed) +
               " adj=" + std::to_string(stats.adj) + " exact=" + std::to_string(adj_exact) + " bound=" +
               std::to_string(adj_bound) + " L=" + std::to_string(stats.length) + " d=" + std::to_string(stats.d) +
               " digest=" + hex(digest);
    return o;
}

Outcome criterion_completeness() {
    Outcome o;
    o.limit = limit_completeness_s;
    const auto start = Clock::now();
    const auto p = desk16_profile();
    std::ostringstream detail;
    std::size_t good = 0, graphs = 0;
    const std::vector<std::pair<std::size_t, std::uint64_t>> planted{{6, 1}, {6, 2}, {7, 3}, {8, 4}, {8, 5}};
    for (const auto& [n, seed] : planted) {
        const auto g = corpus::planted_clique(n, 3, 0.3, seed);
        const auto clique = clique_brute_force(g);
        const auto inst = reduce(g, p);
        ++graphs;
        if (!clique.found) {
            detail << "n=" << n << " seed=" << seed << ": no clique; ";
            continue;
        }
        const auto w = completeness_center(clique.vertices, g, inst.coding, inst.layout);
        const auto md = max_distance(w, inst);
        good += md.value <= inst.d;
        detail << "n=" << n << " seed=" << seed << ": " << md.value << "<=" << inst.d << "; ";
    }
    o.seconds = since(start);
    o.pass = graphs >= min_graphs && good == graphs;
    o.detail = detail.str();
    return o;
}

Outcome criterion_soundness() {
    Outcome o;
    o.limit = limit_soundness_s;
    const auto start = Clock::now();
    const auto p = desk16_profile();
    std::vector<std::pair<std::string, CliqueInstance>> graphs;
    graphs.emplace_back("C5", corpus::cycle(5, 3));
    graphs.emplace_back("C8", corpus::cycle(8, 3));
    graphs.emplace_back("P8", corpus::path(8, 3));
    graphs.emplace_back("K4,4", corpus::complete_bipartite(4, 4, 3));
    graphs.emplace_back("G(8,0.4)#1", corpus::clique_free(8, 0.4, 3, 1));
    graphs.emplace_back("G(7,0.5)#2", corpus::clique_free(7, 0.5, 3, 2));
    std::ostringstream detail;
    std::size_t good = 0;
    SoundnessOptions opts;
    opts.block_certificate = false;
    for (const auto& [name, g] : graphs) {
        if (clique_brute_force(g).found) {
            detail << name << ": has a clique; ";
            continue;
        }
        const auto inst = reduce(g, p);
        const auto r = soundness_probe(inst, g, opts);
        const std::uint64_t n = g.vertex_count();
        const bool ok = r.complete && r.tuples_scanned == n * n * n && r.min_value >= inst.d + p.delta_num;
        good += ok;
        detail << name << ": " << r.tuples_scanned << " tuples min=" << r.min_value << ">=" << inst.d + p.delta_num
               << "; ";
    }
    o.seconds = since(start);
    o.pass = graphs.size() >= min_graphs && good == graphs.size();
    o.detail = detail.str();
    return o;
}

Outcome criterion_gap() {
    Outcome o;
    const auto desk = gap_ratio(decision_distance(3, desk16_profile()), desk16_profile(), 3);
    const auto paper = gap_ratio(decision_distance(3, paper_profile()), paper_profile(), 3);
    o.pass = desk.numerator == 35 && desk.denominator == 34 && paper.c_bound == 40;
    o.detail = "desk16 k=3: " + std::to_string(desk.numerator) + "/" + std::to_string(desk.denominator) +
               "; paper100 c_bound=" + std::to_string(paper.c_bound);
    return o;
}

Outcome criterion_solvers() {
    Outcome o;
    o.limit = limit_solvers_s;
    const auto start = Clock::now();
    std::mt19937_64 rng(20240601);
    std::size_t opt_agree = 0, decide_agree = 0, decide_total = 0;
    for (std::size_t t = 0; t < solver_instances; ++t) {
        const std::size_t len = 1 + rng() % 16;
        const std::size_t count = 1 + rng() % 6;
        std::vector<BitString> cs;
        for (std::size_t i = 0; i < count; ++i) {
            cs.push_back(BitString::from_uint(rng() & ((std::uint64_t{1} << len) - 1), len));
        }
        const auto brute = brute_force_opt(cs);
        const auto branch = branch_opt(cs);
        opt_agree += brute.solved() && branch.solved() && *brute.optimum == *branch.optimum;
        for (std::size_t d = 0; d <= len; ++d) {
            ++decide_total;
            const auto r = branch_decide(cs, d);
            decide_agree += !r.exhausted && r.yes == (brute.solved() && *brute.optimum <= d);
        }
    }
    o.seconds = since(start);
    o.pass = opt_agree == solver_instances && decide_agree == decide_total;
    o.detail = "opt agree " + std::to_string(opt_agree) + "/" + std::to_string(solver_instances) + ", decide agree " +
               std::to_string(decide_agree) + "/" + std::to_string(decide_total);
    return o;
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> deterministic{
        {1, "code construction (desk16, desk20)", criterion_codes},
        {2, "forbidden-set properties, l=16 n=6", criterion_forbidden},
        {3, "reduction structure, closed forms", criterion_structure},
        {4, "completeness on planted cliques", criterion_completeness},
        {5, "soundness over tuple centers", criterion_soundness},
        {6, "gap ratio and c bound", criterion_gap},
    };
    int failures = 0;
    const auto report = [&](int id, const char* title, const Outcome& o) {
        const bool in_time = o.limit == 0.0 || o.seconds < o.limit;
        const bool pass = o.pass && in_time;
        failures += !pass;
        std::printf("[%s] criterion %d: %s: %s", pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
        if (o.limit > 0.0) std::printf(" (%.2f s, limit %.0f s)", o.seconds, o.limit);
        std::printf("\n");
        std::fflush(stdout);
    };

    std::vector<std::string> first;
    for (const auto& c : deterministic) {
        const auto o = c.run();
        first.push_back(o.detail + (o.pass ? "|pass" : "|fail"));
        report(c.id, c.title, o);
    }
    report(7, "solver cross-equivalence", criterion_solvers());

    Outcome repeat;
    std::size_t same = 0;
    for (std::size_t i = 0; i < deterministic.size(); ++i) {
        const auto o = deterministic[i].run();
        same += first[i] == o.detail + (o.pass ? "|pass" : "|fail");
    }
    repeat.pass = same == deterministic.size();
    repeat.detail = "byte-identical outputs on rerun of criteria 1-6: " + std::to_string(same) + "/" +
                    std::to_string(deterministic.size());
    report(8, "determinism", repeat);
    return failures == 0 ? 0 : 1;
}
