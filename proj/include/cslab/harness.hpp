#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cslab/codegen.hpp"
#include "cslab/reducer.hpp"
#include "cslab/solvers.hpp"

namespace cslab {

/// Block i holds the codeword of tuple[i]; the balancing block is all zeros.
BitString tuple_center(const std::vector<std::size_t>& tuple, const VertexCoding& coding, const BlockLayout& layout);

/// tuple_center of a k-clique of `g`. ContractViolation if it is not one.
BitString completeness_center(const std::vector<std::size_t>& clique, const CliqueInstance& g,
                              const VertexCoding& coding, const BlockLayout& layout);

struct SoundnessOptions {
    /// Scan at most this many tuple centers; the report is marked incomplete beyond it.
    std::uint64_t max_tuples = 1 << 20;
    /// Tuple centers evaluated per pass over the constraints.
    std::size_t batch = 512;
    /// Also run the exhaustive per-block certificate (block length <= 32).
    bool block_certificate = true;
};

/// Exhaustive check over {0,1}^l of the block-level fact behind the vertex claim.
struct BlockCertificate {
    bool ran = false;
    std::size_t far_strings = 0;
    std::size_t violations = 0;
    std::size_t min_far_distance = 0;
    std::size_t flip_branch = 0;
    /// min Ham(u, y) + (k-1) l/2 + gamma l over far u; must reach d + delta l.
    std::size_t implied_bound = 0;
    /// Far block strings embedded into a center (other blocks: first codeword) whose
    /// majority-vote selection constraint was looked up in the instance and measured.
    std::size_t embedded_checked = 0;
    std::size_t embedded_missing = 0;
    std::size_t embedded_violations = 0;
    std::size_t embedded_min = 0;

    bool ok() const noexcept;
};

struct SoundnessReport {
    std::size_t d = 0;
    std::size_t gap_target = 0;
    std::uint64_t tuples_total = 0;
    std::uint64_t tuples_scanned = 0;
    bool complete = false;

    std::size_t min_value = 0;
    std::vector<std::size_t> argmin_tuple;
    std::size_t argmin_constraint = 0;

    std::uint64_t clique_tuples = 0;
    std::size_t clique_max = 0;
    std::uint64_t clique_above_d = 0;
    std::uint64_t nonclique_tuples = 0;
    std::size_t nonclique_min = 0;
    std::uint64_t nonclique_below_target = 0;
    /// Which family supplied the first maximizer, over non-clique tuples.
    std::uint64_t nonclique_argmax_sel = 0;
    std::uint64_t nonclique_argmax_adj = 0;

    /// (k/2 + 1 - 2 delta) l, the edge-claim distance, and whether it beats the gap target.
    std::size_t edge_claim_bound = 0;
    bool edge_margin_ok = false;
    /// Non-clique tuples whose majority-vote adjacency constraint was looked up and measured.
    std::uint64_t edge_checked = 0;
    std::uint64_t edge_missing = 0;
    std::uint64_t edge_violations = 0;

    BlockCertificate certificate;

    bool passed() const noexcept;
};

/**
 * Evaluates every tuple center (one codeword per vertex block, zero balance)
 * against the instance, plus the per-block certificate. Tuple centers are a
 * structured subset of {0,1}^L; the report does not claim more than that.
 */
SoundnessReport soundness_probe(const ClosestStringInstance& inst, const CliqueInstance& g,
                                const SoundnessOptions& opts = {});

struct ExperimentOptions {
    SoundnessOptions soundness;
    ReduceOptions reduce;
    std::uint64_t clique_budget = 100'000'000;
};

struct StageTiming {
    std::string stage;
    double milliseconds = 0.0;
};

struct ExperimentReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t k = 0;
    CodeParams params;
    std::string mode;

    InstanceStats stats;
    std::uint64_t closed_sel = 0;
    std::uint64_t closed_adj = 0;
    std::uint64_t adj_bound = 0;
    std::size_t forbidden_count = 0;
    bool counts_match = false;

    bool clique_found = false;
    std::vector<std::size_t> clique;
    std::optional<std::size_t> completeness_value;
    std::string completeness_constraint;
    bool completeness_ok = true;

    SoundnessReport soundness;
    std::string soundness_constraint;
    GapRatio gap;

    bool complete = false;
    bool passed = false;
    std::vector<std::string> failures;
    std::vector<StageTiming> timings;
};

/// Full-mode reduction, clique oracle, completeness center when a clique exists, and the soundness probe.
ExperimentReport gap_experiment(const CliqueInstance& g, const CodeParams& p, const ExperimentOptions& opts = {});

inline constexpr const char* report_schema = "cslab-gap-report/1";

/// Stable key: value text. Timings appear only when asked for, so default output is reproducible.
std::string render_report(const ExperimentReport& r, bool include_timings = false);
nlohmann::json report_json(const ExperimentReport& r, bool include_timings = false);

namespace corpus {

CliqueInstance cycle(std::size_t n, std::size_t k);
CliqueInstance path(std::size_t n, std::size_t k);
CliqueInstance complete_bipartite(std::size_t a, std::size_t b, std::size_t k);
/// G(n, p) with a k-clique planted on a seeded random vertex subset.
CliqueInstance planted_clique(std::size_t n, std::size_t k, double p, std::uint64_t seed);
CliqueInstance erdos_renyi(std::size_t n, double p, std::size_t k, std::uint64_t seed);
/// First G(n, p) draw (seed, seed+1, ...) with no k-clique.
CliqueInstance clique_free(std::size_t n, double p, std::size_t k, std::uint64_t seed);

}  // namespace corpus

struct BenchRow {
    std::size_t k = 0;
    std::size_t sel = 0;
    std::size_t adj = 0;
    std::uint64_t closed_sel = 0;
    std::uint64_t closed_adj = 0;
    bool counts_match = false;
    double milliseconds = 0.0;
};

/// Full-mode reduce of an n-cycle for each k, timed; counts compared to the closed forms.
std::vector<BenchRow> bench_reduce(const CodeParams& p, std::size_t n, const std::vector<std::size_t>& ks);
std::string render_bench(const std::vector<BenchRow>& rows);

}  // namespace cslab
