#pragma once

#include <cstddef>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cslab/bitstring.hpp"
#include "cslab/codegen.hpp"

namespace cslab {

/// Undirected simple graph with a target clique size. Vertices are 0..n-1.
class CliqueInstance {
public:
    /// Validates: ids < n, no self-loops, 2 <= k <= n. Duplicate edges collapse.
    CliqueInstance(std::size_t n, std::size_t k, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    /// Sorted, each pair stored with first < second.
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    bool adjacent(std::size_t u, std::size_t v) const;
    /// Equal vertices or a non-edge: the pairs that generate adjacency constraints.
    bool eligible_pair(std::size_t u, std::size_t v) const { return u == v || !adjacent(u, v); }
    bool is_clique(const std::vector<std::size_t>& vertices) const;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::uint8_t> adjacency_;
};

/// Vertex v is encoded by codeword v of the code.
struct VertexCoding {
    SelectionCode code;

    std::size_t vertex_count() const noexcept { return code.size(); }
    const BitString& encode(std::size_t v) const;
};

VertexCoding make_coding(std::size_t n, const CodeParams& p, const GreedyOptions& opts = {});

BlockLayout make_layout(std::size_t k, const CodeParams& p);
/// (k/2 + 1/2) * l + alpha * l.
std::size_t decision_distance(std::size_t k, const CodeParams& p);

/**
 * Which vertex blocks are filled with ones. Bit (k - 1 - q) of the mask
 * stands for block q, so numeric order on masks is lexicographic order on
 * the block assignment.
 */
class FillPattern {
public:
    FillPattern(std::size_t k, std::uint32_t mask);
    static FillPattern from_blocks(const std::vector<bool>& ones);

    std::size_t k() const noexcept { return k_; }
    std::uint32_t mask() const noexcept { return mask_; }
    bool ones(std::size_t block) const noexcept { return (mask_ >> (k_ - 1 - block)) & 1U; }
    static std::uint32_t bit(std::size_t k, std::size_t block) noexcept {
        return std::uint32_t{1} << (k - 1 - block);
    }
    /// Same assignment with the listed blocks cleared.
    FillPattern without(std::size_t block) const noexcept { return {k_, mask_ & ~bit(k_, block)}; }

private:
    std::size_t k_;
    std::uint32_t mask_;
};

/// Selection constraint: y on block i, blocks j != i filled per phi, z on the balancing block.
BitString build_sel_constraint(const VertexCoding& coding, std::size_t k, std::size_t i, const BitString& y,
                               const FillPattern& phi, const BitString& z);

/// Adjacency constraint: complement(code(u)) on block i, complement(code(v)) on block j, others per psi, zero balance.
BitString build_adj_constraint(const CliqueInstance& g, const VertexCoding& coding, std::size_t i, std::size_t j,
                               std::size_t u, std::size_t v, const FillPattern& psi);

enum class Family : std::uint8_t { sel = 0, adj = 1 };

/**
 * Provenance of one constraint.
 *
 * sel: block i, mask = phi, ref = index into the instance's payload table (y), aux = z as an integer.
 * adj: blocks i < j, mask = psi, ref = u, aux = v.
 * Canonical order: all sel tags before adj tags; sel by (i, y, phi, z),
 * adj by (i, j, u, v, psi). Full-mode emission follows this order.
 */
struct ConstraintTag {
    Family family = Family::sel;
    std::uint8_t i = 0;
    std::uint8_t j = 0;
    std::uint8_t reserved = 0;
    std::uint32_t mask = 0;
    std::uint32_t ref = 0;
    std::uint32_t aux = 0;

    friend bool operator==(const ConstraintTag&, const ConstraintTag&) = default;
    friend std::strong_ordering operator<=>(const ConstraintTag& a, const ConstraintTag& b);
};

enum class ReductionMode { full, sampled };

struct FamilyCounts {
    std::size_t sel = 0;
    std::size_t adj = 0;
    /// Sampled mode: probe-targeted constraints added on top of the uniform samples.
    std::size_t sel_adversarial = 0;
    std::size_t adj_adversarial = 0;

    friend bool operator==(const FamilyCounts&, const FamilyCounts&) = default;
};

struct ClosestStringInstance {
    CodeParams params;
    VertexCoding coding;
    BlockLayout layout;
    std::size_t d = 0;
    ReductionMode mode = ReductionMode::full;
    std::uint64_t seed = 0;
    std::size_t sel_samples = 0;
    std::size_t adj_samples = 0;

    PackedStrings constraints;
    std::vector<ConstraintTag> tags;
    /// Forbidden strings referenced by sel tags, in lexicographic order.
    std::vector<BitString> payloads;
    FamilyCounts counts;

    std::size_t size() const noexcept { return constraints.size(); }
    std::size_t length() const noexcept { return layout.total_length(); }
    BitString constraint(std::size_t index) const { return constraints.at(index); }
    /// Human-readable tag, blocks and vertices 1-indexed.
    std::string describe(const ConstraintTag& tag) const;
    /// Position of `tag` in the canonical order, if present.
    std::optional<std::size_t> find(const ConstraintTag& tag) const;
    /// Index of `y` in the payload table, if present.
    std::optional<std::uint32_t> payload_ref(const BitString& y) const;
    /// Rebuilds a constraint from its tag through build_sel_constraint / build_adj_constraint.
    BitString rebuild(const ConstraintTag& tag, const CliqueInstance& g) const;
};

struct ReduceOptions {
    ReductionMode mode = ReductionMode::full;
    std::uint64_t seed = 1;
    std::size_t sel_samples = 0;
    std::size_t adj_samples = 0;
    /// Sampled mode: centers whose majority-vote adversarial constraints must be present.
    std::vector<BitString> probes;
    GreedyOptions greedy;
    /// Refuse to materialize more constraints than this.
    std::size_t max_constraints = 40'000'000;
};

/// Builds the constraint family; the coding is constructed with greedy_construct(n).
ClosestStringInstance reduce(const CliqueInstance& g, const CodeParams& p, const ReduceOptions& opts = {});
/// Same, with a caller-supplied coding.
ClosestStringInstance reduce(const CliqueInstance& g, const VertexCoding& coding, const ReduceOptions& opts = {});

/// Fill mask that puts zeros on blocks where `center` is mostly ones and ones elsewhere.
std::uint32_t adversarial_fill(const BitString& center, const BlockLayout& layout);

/// k * |Forb| * 2^(k-1) * 2^(gamma l).
std::uint64_t sel_family_size(std::size_t k, std::size_t forbidden_count, const CodeParams& p);
/// C(k,2) * n^2 * 2^(k-2).
std::uint64_t adj_family_bound(std::size_t k, std::size_t n);
/// C(k,2) * (#equal-or-non-adjacent ordered pairs) * 2^(k-2).
std::uint64_t adj_family_size(const CliqueInstance& g);

struct InstanceStats {
    std::size_t sel = 0;
    std::size_t adj = 0;
    std::size_t sel_adversarial = 0;
    std::size_t adj_adversarial = 0;
    std::size_t total = 0;
    std::size_t length = 0;
    std::size_t d = 0;
    std::size_t gap_target = 0;
    std::size_t memory_bytes = 0;
};

/// Counts are taken from the tags, not from the recorded FamilyCounts.
InstanceStats instance_stats(const ClosestStringInstance& inst);

struct GapRatio {
    /// (d + delta l) / d in lowest terms.
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 1;
    double value = 0.0;
    /// ceil(2 / delta).
    std::uint64_t c_bound = 0;
    /// ratio >= 1 + 1/(c_bound * k)
    bool holds = false;
};

GapRatio gap_ratio(std::size_t d, const CodeParams& p, std::size_t k);
GapRatio gap_ratio(const ClosestStringInstance& inst, const CodeParams& p, std::size_t k);

}  // namespace cslab
