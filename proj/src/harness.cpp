#include "cslab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "cslab/error.hpp"
#include "cslab/kernels.hpp"

namespace cslab {

BitString tuple_center(const std::vector<std::size_t>& tuple, const VertexCoding& coding, const BlockLayout& layout) {
    if (tuple.size() != layout.k) {
        throw ContractViolation("tuple has " + std::to_string(tuple.size()) + " vertices for " +
                                std::to_string(layout.k) + " blocks");
    }
    std::vector<BitString> parts;
    parts.reserve(layout.k + 1);
    for (const auto v : tuple) {
        parts.push_back(coding.encode(v));
    }
    parts.push_back(BitString::zeros(layout.balance_len));
    return concat_blocks(parts);
}

BitString completeness_center(const std::vector<std::size_t>& clique, const CliqueInstance& g,
                              const VertexCoding& coding, const BlockLayout& layout) {
    if (clique.size() != g.k() || !g.is_clique(clique)) {
        throw ContractViolation("completeness_center: vertex set is not a " + std::to_string(g.k()) + "-clique");
    }
    return tuple_center(clique, coding, layout);
}

bool BlockCertificate::ok() const noexcept {
    return violations == 0 && embedded_missing == 0 && embedded_violations == 0;
}

bool SoundnessReport::passed() const noexcept {
    return clique_above_d == 0 && nonclique_below_target == 0 && edge_violations == 0 && edge_missing == 0 &&
           edge_margin_ok && (!certificate.ran || (certificate.ok() && certificate.implied_bound >= gap_target));
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

BlockCertificate run_block_certificate(const ClosestStringInstance& inst, std::size_t gap_target) {
    const auto& code = inst.coding.code;
    const auto& p = inst.params;
    const auto& layout = inst.layout;
    BlockCertificate cert;
    cert.ran = true;
    const auto scan = kernels::far_forbidden_scan(code);
    cert.far_strings = scan.far_count;
    cert.violations = scan.violations;
    cert.min_far_distance = scan.min_far_distance;
    cert.flip_branch = scan.flip_branch;
    cert.implied_bound = scan.min_far_distance + (layout.k - 1) * p.half() + p.gamma_num();

    if (inst.mode != ReductionMode::full) {
        return cert;
    }
    // Non-tuple centers: one far block, every other block on codeword 0.
    cert.embedded_min = std::numeric_limits<std::size_t>::max();
    const std::uint64_t total = std::uint64_t{1} << p.block_len;
    std::vector<BitString> parts(layout.k, code[0]);
    parts.push_back(BitString::zeros(layout.balance_len));
    for (std::uint64_t v = 0; v < total; ++v) {
        const auto u = BitString::from_uint(v, p.block_len);
        if (nearest_codeword(u, code).second < p.delta_num) {
            continue;
        }
        const auto y = find_far_forbidden(u, code);
        const auto ref = inst.payload_ref(y);
        for (std::size_t i = 0; i < layout.k; ++i) {
            ++cert.embedded_checked;
            parts[i] = u;
            const auto w = concat_blocks(parts);
            parts[i] = code[0];
            if (!ref) {
                ++cert.embedded_missing;
                continue;
            }
            const auto mask = adversarial_fill(w, layout) & ~FillPattern::bit(layout.k, i);
            const auto z_star = complement(block_slice(w, layout, balance_block)).to_uint();
            const ConstraintTag tag{Family::sel, static_cast<std::uint8_t>(i), 0, 0, mask, *ref,
                                    static_cast<std::uint32_t>(z_star)};
            const auto idx = inst.find(tag);
            if (!idx) {
                ++cert.embedded_missing;
                continue;
            }
            const auto dist = hamming_distance_words(inst.constraints.row(*idx), w.words());
            cert.embedded_min = std::min(cert.embedded_min, dist);
            if (dist < gap_target) {
                ++cert.embedded_violations;
            }
        }
    }
    if (cert.embedded_checked == 0) {
        cert.embedded_min = 0;
    }
    return cert;
}

}  // namespace

SoundnessReport soundness_probe(const ClosestStringInstance& inst, const CliqueInstance& g,
                                const SoundnessOptions& opts) {
    const auto& layout = inst.layout;
    const auto& p = inst.params;
    const std::size_t k = layout.k;
    const std::size_t n = inst.coding.vertex_count();
    if (g.vertex_count() != n || g.k() != k) {
        throw ContractViolation("soundness_probe: graph does not match the instance");
    }
    SoundnessReport r;
    r.d = inst.d;
    r.gap_target = inst.d + p.delta_num;
    r.edge_claim_bound = (k + 2) * p.block_len / 2 - 2 * p.delta_num;
    r.edge_margin_ok = r.edge_claim_bound > r.gap_target;

    r.tuples_total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r.tuples_total > std::numeric_limits<std::uint64_t>::max() / n) {
            r.tuples_total = std::numeric_limits<std::uint64_t>::max();
            break;
        }
        r.tuples_total *= n;
    }
    const std::uint64_t to_scan = std::min(r.tuples_total, opts.max_tuples);
    r.complete = to_scan == r.tuples_total;
    r.min_value = std::numeric_limits<std::size_t>::max();
    r.clique_max = 0;
    r.nonclique_min = std::numeric_limits<std::size_t>::max();

    std::vector<std::size_t> tuple(k, 0);
    const auto advance = [&] {
        for (std::size_t i = k; i-- > 0;) {
            if (++tuple[i] < n) return;
            tuple[i] = 0;
        }
    };
    const std::size_t batch = std::max<std::size_t>(1, opts.batch);
    std::vector<std::vector<std::size_t>> tuples;
    std::vector<BitString> centers;
    for (std::uint64_t done = 0; done < to_scan;) {
        tuples.clear();
        centers.clear();
        for (; tuples.size() < batch && done < to_scan; ++done) {
            tuples.push_back(tuple);
            centers.push_back(tuple_center(tuple, inst.coding, layout));
            advance();
        }
        const auto hits = kernels::max_distance_batch(inst.constraints, centers);
        for (std::size_t b = 0; b < tuples.size(); ++b) {
            const auto& t = tuples[b];
            const auto value = hits[b].value;
            if (value < r.min_value) {
                r.min_value = value;
                r.argmin_tuple = t;
                r.argmin_constraint = hits[b].index;
            }
            if (g.is_clique(t)) {
                ++r.clique_tuples;
                r.clique_max = std::max(r.clique_max, value);
                if (value > r.d) ++r.clique_above_d;
                continue;
            }
            ++r.nonclique_tuples;
            r.nonclique_min = std::min(r.nonclique_min, value);
            if (value < r.gap_target) ++r.nonclique_below_target;
            if (inst.size() > 0) {
                ++(inst.tags[hits[b].index].family == Family::sel ? r.nonclique_argmax_sel : r.nonclique_argmax_adj);
            }
            // First equal-or-non-adjacent pair and its majority-vote adjacency constraint.
            for (std::size_t i = 0; i < k; ++i) {
                bool found = false;
                for (std::size_t j = i + 1; j < k && !found; ++j) {
                    if (!g.eligible_pair(t[i], t[j])) continue;
                    found = true;
                    ++r.edge_checked;
                    const auto mask =
                        adversarial_fill(centers[b], layout) & ~(FillPattern::bit(k, i) | FillPattern::bit(k, j));
                    const ConstraintTag tag{Family::adj, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), 0,
                                            mask, static_cast<std::uint32_t>(t[i]), static_cast<std::uint32_t>(t[j])};
                    const auto idx = inst.find(tag);
                    if (!idx) {
                        ++r.edge_missing;
                    } else if (hamming_distance_words(inst.constraints.row(*idx), centers[b].words()) <
                               r.edge_claim_bound) {
                        ++r.edge_violations;
                    }
                }
                if (found) break;
            }
        }
    }
    if (r.tuples_scanned = to_scan; to_scan == 0) {
        r.min_value = 0;
    }
    if (r.nonclique_tuples == 0) r.nonclique_min = 0;

    if (opts.block_certificate && p.block_len <= 32) {
        r.certificate = run_block_certificate(inst, r.gap_target);
    }
    return r;
}

ExperimentReport gap_experiment(const CliqueInstance& g, const CodeParams& p, const ExperimentOptions& opts) {
    ExperimentReport r;
    r.n = g.vertex_count();
    r.m = g.edges().size();
    r.k = g.k();
    r.params = p;
    r.mode = "full";
    const auto fail = [&](std::string what) { r.failures.push_back(std::move(what)); };

    try {
        auto start = Clock::now();
        auto reduce_opts = opts.reduce;
        reduce_opts.mode = ReductionMode::full;
        const auto inst = reduce(g, p, reduce_opts);
        r.timings.push_back({"reduce", elapsed_ms(start)});

        r.stats = instance_stats(inst);
        r.forbidden_count = kernels::count_forbidden(inst.coding.code);
        r.closed_sel = sel_family_size(r.k, r.forbidden_count, p);
        r.closed_adj = adj_family_size(g);
        r.adj_bound = adj_family_bound(r.k, r.n);
        r.counts_match = r.stats.sel == r.closed_sel && r.stats.adj == r.closed_adj && r.closed_adj <= r.adj_bound &&
                         r.stats.length == r.k * p.block_len + p.gamma_num() &&
                         r.stats.d == decision_distance(r.k, p);
        if (!r.counts_match) fail("instance counts differ from closed forms");

        start = Clock::now();
        const auto clique = clique_brute_force(g, opts.clique_budget);
        r.timings.push_back({"clique", elapsed_ms(start)});
        r.clique_found = clique.found;
        r.clique = clique.vertices;

        if (clique.found) {
            start = Clock::now();
            const auto center = completeness_center(clique.vertices, g, inst.coding, inst.layout);
            const auto md = max_distance(center, inst);
            r.completeness_value = md.value;
            r.completeness_constraint = inst.describe(inst.tags[md.index]);
            r.completeness_ok = md.value <= inst.d;
            if (!r.completeness_ok) fail("clique center exceeds d");
            r.timings.push_back({"completeness", elapsed_ms(start)});
        }

        start = Clock::now();
        r.soundness = soundness_probe(inst, g, opts.soundness);
        r.timings.push_back({"soundness", elapsed_ms(start)});
        if (r.soundness.tuples_scanned > 0 && inst.size() > 0) {
            r.soundness_constraint = inst.describe(inst.tags[r.soundness.argmin_constraint]);
        }
        r.complete = r.soundness.complete;
        if (!r.complete) fail("tuple scan truncated by budget");
        if (!r.soundness.passed()) fail("soundness probe found a violation");

        r.gap = gap_ratio(inst, p, r.k);
        if (!r.gap.holds) fail("gap ratio below 1 + 1/(c k)");
    } catch (const BudgetExceeded& e) {
        r.complete = false;
        fail(std::string("budget: ") + e.what());
    } catch (const CodeExhausted& e) {
        r.complete = false;
        fail(e.what());
    }
    r.passed = r.complete && r.failures.empty();
    return r;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string vertex_list(const std::vector<std::size_t>& vs) {
    std::string s = "(";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(display_index(vs[i]));
    }
    return s + ")";
}

std::string fixed6(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << v;
    return out.str();
}

}  // namespace

std::string render_report(const ExperimentReport& r, bool include_timings) {
    std::ostringstream out;
    const auto& p = r.params;
    const auto& s = r.soundness;
    out << "schema: " << report_schema << '\n';
    out << "graph: n=" << r.n << " m=" << r.m << " k=" << r.k << '\n';
    out << "params: l=" << p.block_len << " alpha=" << p.alpha_num << " beta=" << p.beta_num
        << " delta=" << p.delta_num << " gamma=" << p.gamma_num() << '\n';
    out << "instance: mode=" << r.mode << " L=" << r.stats.length << " d=" << r.stats.d
        << " gap_target=" << r.stats.gap_target << " constraints=" << r.stats.total << '\n';
    out << "counts: sel=" << r.stats.sel << " adj=" << r.stats.adj << " forb=" << r.forbidden_count << '\n';
    out << "closed_form: sel=" << r.closed_sel << " adj=" << r.closed_adj << " adj_bound=" << r.adj_bound
        << " match=" << yes_no(r.counts_match) << '\n';
    out << "clique: " << (r.clique_found ? "yes " + vertex_list(r.clique) : std::string("no")) << '\n';
    if (r.completeness_value) {
        out << "completeness: value=" << *r.completeness_value << " bound=" << r.stats.d
            << " ok=" << yes_no(r.completeness_ok) << " argmax=" << r.completeness_constraint << '\n';
    }
    out << "soundness.tuples: scanned=" << s.tuples_scanned << "/" << s.tuples_total
        << " complete=" << yes_no(s.complete) << '\n';
    out << "soundness.min: value=" << s.min_value << " tuple=" << vertex_list(s.argmin_tuple)
        << " argmax=" << r.soundness_constraint << '\n';
    out << "soundness.clique_tuples: count=" << s.clique_tuples << " max=" << s.clique_max
        << " above_d=" << s.clique_above_d << '\n';
    out << "soundness.nonclique_tuples: count=" << s.nonclique_tuples << " min=" << s.nonclique_min
        << " target=" << s.gap_target << " below_target=" << s.nonclique_below_target
        << " argmax_sel=" << s.nonclique_argmax_sel << " argmax_adj=" << s.nonclique_argmax_adj << '\n';
    out << "soundness.edge_claim: bound=" << s.edge_claim_bound << " margin_ok=" << yes_no(s.edge_margin_ok)
        << " checked=" << s.edge_checked << " missing=" << s.edge_missing << " violations=" << s.edge_violations
        << '\n';
    const auto& c = s.certificate;
    if (c.ran) {
        out << "soundness.block_certificate: far=" << c.far_strings << " flip_branch=" << c.flip_branch
            << " min_far_distance=" << c.min_far_distance << " implied_bound=" << c.implied_bound
            << " violations=" << c.violations << '\n';
        out << "soundness.embedded_centers: checked=" << c.embedded_checked << " missing=" << c.embedded_missing
            << " min=" << c.embedded_min << " violations=" << c.embedded_violations << '\n';
    }
    out << "soundness.scope: tuple centers only (one codeword per block, zero balancing block), "
           "not all of {0,1}^L; per-block certificate is exhaustive over {0,1}^l\n";
    out << "gap_ratio: " << r.gap.numerator << "/" << r.gap.denominator << " (" << fixed6(r.gap.value)
        << ") c_bound=" << r.gap.c_bound << " holds=" << yes_no(r.gap.holds) << '\n';
    if (include_timings) {
        for (const auto& t : r.timings) {
            out << "time." << t.stage << ": " << fixed6(t.milliseconds) << " ms\n";
        }
    }
    for (const auto& f : r.failures) {
        out << "failure: " << f << '\n';
    }
    out << "verdict: " << (r.passed ? "pass" : (r.complete ? "fail" : "incomplete")) << '\n';
    return out.str();
}

nlohmann::json report_json(const ExperimentReport& r, bool include_timings) {
    const auto& s = r.soundness;
    const auto& c = s.certificate;
    const auto one_based = [](const std::vector<std::size_t>& vs) {
        std::vector<std::size_t> out;
        for (const auto v : vs) out.push_back(display_index(v));
        return out;
    };
    nlohmann::json j;
    j["schema"] = report_schema;
    j["graph"] = {{"n", r.n}, {"m", r.m}, {"k", r.k}};
    j["params"] = {{"block_len", r.params.block_len},
                   {"alpha", r.params.alpha_num},
                   {"beta", r.params.beta_num},
                   {"delta", r.params.delta_num},
                   {"gamma", r.params.gamma_num()}};
    j["instance"] = {{"mode", r.mode},       {"L", r.stats.length},   {"d", r.stats.d},
                     {"gap_target", r.stats.gap_target}, {"constraints", r.stats.total},
                     {"sel", r.stats.sel},   {"adj", r.stats.adj},    {"forb", r.forbidden_count}};
    j["closed_form"] = {{"sel", r.closed_sel}, {"adj", r.closed_adj}, {"adj_bound", r.adj_bound},
                        {"match", r.counts_match}};
    j["clique"] = {{"found", r.clique_found}, {"vertices", one_based(r.clique)}};
    if (r.completeness_value) {
        j["completeness"] = {{"value", *r.completeness_value},
                             {"bound", r.stats.d},
                             {"ok", r.completeness_ok},
                             {"argmax", r.completeness_constraint}};
    }
    j["soundness"] = {{"tuples_scanned", s.tuples_scanned},
                      {"tuples_total", s.tuples_total},
                      {"complete", s.complete},
                      {"min_value", s.min_value},
                      {"argmin_tuple", one_based(s.argmin_tuple)},
                      {"argmax", r.soundness_constraint},
                      {"clique_tuples", s.clique_tuples},
                      {"clique_max", s.clique_max},
                      {"clique_above_d", s.clique_above_d},
                      {"nonclique_tuples", s.nonclique_tuples},
                      {"nonclique_min", s.nonclique_min},
                      {"gap_target", s.gap_target},
                      {"nonclique_below_target", s.nonclique_below_target},
                      {"edge_claim_bound", s.edge_claim_bound},
                      {"edge_margin_ok", s.edge_margin_ok},
                      {"edge_checked", s.edge_checked},
                      {"edge_missing", s.edge_missing},
                      {"edge_violations", s.edge_violations},
                      {"scope", "tuple centers only"}};
    if (c.ran) {
        j["soundness"]["block_certificate"] = {{"far", c.far_strings},
                                               {"flip_branch", c.flip_branch},
                                               {"min_far_distance", c.min_far_distance},
                                               {"implied_bound", c.implied_bound},
                                               {"violations", c.violations},
                                               {"embedded_checked", c.embedded_checked},
                                               {"embedded_missing", c.embedded_missing},
                                               {"embedded_min", c.embedded_min},
                                               {"embedded_violations", c.embedded_violations}};
    }
    j["gap_ratio"] = {{"numerator", r.gap.numerator},
                      {"denominator", r.gap.denominator},
                      {"value", r.gap.value},
                      {"c_bound", r.gap.c_bound},
                      {"holds", r.gap.holds}};
    if (include_timings) {
        for (const auto& t : r.timings) j["timings_ms"][t.stage] = t.milliseconds;
    }
    j["failures"] = r.failures;
    j["verdict"] = r.passed ? "pass" : (r.complete ? "fail" : "incomplete");
    return j;
}

namespace corpus {

CliqueInstance cycle(std::size_t n, std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return {n, k, std::move(edges)};
}

CliqueInstance path(std::size_t n, std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return {n, k, std::move(edges)};
}

CliqueInstance complete_bipartite(std::size_t a, std::size_t b, std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < a; ++u) {
        for (std::size_t v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    }
    return {a + b, k, std::move(edges)};
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> random_edges(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return edges;
}

}  // namespace

CliqueInstance erdos_renyi(std::size_t n, double p, std::size_t k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return {n, k, random_edges(n, p, rng)};
}

CliqueInstance planted_clique(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto edges = random_edges(n, p, rng);
    std::vector<std::size_t> vertices(n);
    std::iota(vertices.begin(), vertices.end(), std::size_t{0});
    std::shuffle(vertices.begin(), vertices.end(), rng);
    vertices.resize(k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) edges.emplace_back(vertices[a], vertices[b]);
    }
    return {n, k, std::move(edges)};
}

CliqueInstance clique_free(std::size_t n, double p, std::size_t k, std::uint64_t seed) {
    for (std::uint64_t s = seed; s < seed + 10'000; ++s) {
        auto g = erdos_renyi(n, p, k, s);
        if (!clique_brute_force(g).found) return g;
    }
    throw BudgetExceeded("no clique-free draw found in 10000 seeds");
}

}  // namespace corpus

std::vector<BenchRow> bench_reduce(const CodeParams& p, std::size_t n, const std::vector<std::size_t>& ks) {
    std::vector<BenchRow> rows;
    if (ks.empty()) return rows;
    const auto coding = make_coding(n, p);
    const auto forb = kernels::count_forbidden(coding.code);
    for (const auto k : ks) {
        const auto g = corpus::cycle(n, k);
        const auto start = Clock::now();
        const auto inst = reduce(g, coding);
        BenchRow row;
        row.milliseconds = elapsed_ms(start);
        const auto stats = instance_stats(inst);
        row.k = k;
        row.sel = stats.sel;
        row.adj = stats.adj;
        row.closed_sel = sel_family_size(k, forb, p);
        row.closed_adj = adj_family_size(g);
        row.counts_match = row.sel == row.closed_sel && row.adj == row.closed_adj;
        rows.push_back(row);
    }
    return rows;
}

std::string render_bench(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(4) << "k" << std::right << std::setw(12) << "sel" << std::setw(10) << "adj"
        << std::setw(14) << "closed_sel" << std::setw(12) << "closed_adj" << std::setw(7) << "match" << std::setw(12)
        << "ms" << '\n';
    for (const auto& r : rows) {
        out << std::left << std::setw(4) << r.k << std::right << std::setw(12) << r.sel << std::setw(10) << r.adj
            << std::setw(14) << r.closed_sel << std::setw(12) << r.closed_adj << std::setw(7)
            << (r.counts_match ? "yes" : "no") << std::setw(12) << fixed6(r.milliseconds) << '\n';
    }
    return out.str();
}

}  // namespace cslab
