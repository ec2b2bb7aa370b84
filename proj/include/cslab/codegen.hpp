#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cslab/bitstring.hpp"

namespace cslab {

/**
 * Constant profile of the selection code, all values in bits.
 *
 * `alpha_num`, `beta_num`, `delta_num` are the products of the orthogonality
 * slack, the forbidden-radius margin and the closeness margin with the block
 * length. The balancing block length is derived as alpha + beta.
 */
struct CodeParams {
    std::size_t block_len = 0;
    std::size_t alpha_num = 0;
    std::size_t beta_num = 0;
    std::size_t delta_num = 0;

    std::size_t gamma_num() const noexcept { return alpha_num + beta_num; }
    std::size_t half() const noexcept { return block_len / 2; }
    /// Codeword distances must lie strictly between these two values.
    std::size_t lower_distance() const noexcept { return half() - alpha_num; }
    std::size_t upper_distance() const noexcept { return half() + alpha_num; }
    /// A string is forbidden when it is within this distance of every codeword.
    std::size_t forbidden_radius() const noexcept { return block_len - beta_num; }

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

CodeParams desk16_profile();
CodeParams desk20_profile();
/// alpha = 1/100, beta = 1/10, delta = 1/20 at block length 100.
CodeParams paper_profile();

/// Looks up one of "desk16", "desk20", "paper100".
std::optional<CodeParams> profile_by_name(std::string_view name);
std::vector<std::string> profile_names();

struct ParamCheck {
    std::string name;
    std::string protects;
    bool ok = false;
};

struct ParamReport {
    std::vector<ParamCheck> checks;

    bool ok() const noexcept;
    std::vector<ParamCheck> violations() const;
};

ParamReport validate_params(const CodeParams& p);

/// Binary entropy in bits. Requires 0 < p < 1.
double entropy(double p);

/**
 * Exact count of strings in {0,1}^l at distance <= lower_distance() or
 * >= upper_distance() from a fixed string. Only block_len and alpha_num are
 * read; requires an even block length and 0 < alpha_num < block_len / 2.
 * Checks the entropy bound A <= 2 * 2^(l * H(1/2 - alpha)) and throws
 * std::logic_error if it fails.
 */
boost::multiprecision::cpp_int tail_bound_A(const CodeParams& p);

struct SelectionCode {
    CodeParams params;
    std::vector<BitString> strings;

    std::size_t size() const noexcept { return strings.size(); }
    const BitString& operator[](std::size_t i) const { return strings[i]; }
};

enum class ConstructionMode { full, randomized };

struct GreedyOptions {
    ConstructionMode mode = ConstructionMode::full;
    std::uint64_t seed = 1;
    /// Full mode keeps a 2^l marking bitmap; refuse beyond this length.
    std::size_t max_full_block_len = 28;
    /// Randomized mode: total candidate draws before giving up.
    std::size_t max_attempts = 200000;
};

/**
 * Greedy selection-code construction.
 *
 * Full mode scans balanced candidates in lexicographic order; each round
 * takes the least unused one and then marks every string at distance
 * <= lower_distance() or >= upper_distance() from it as used. Randomized
 * mode draws balanced strings from a seeded generator and keeps those whose
 * distances to all kept strings fall strictly inside the window.
 *
 * Throws CodeExhausted if fewer than `n` codewords could be placed.
 */
SelectionCode greedy_construct(std::size_t n, const CodeParams& p, const GreedyOptions& opts = {});

/// Number of rounds full-mode greedy completes before running out of candidates.
std::size_t greedy_capacity(const CodeParams& p, const GreedyOptions& opts = {});

bool is_forbidden(const BitString& y, const SelectionCode& code);

/// Index of the nearest codeword (first one on ties) and its distance.
std::pair<std::size_t, std::size_t> nearest_codeword(const BitString& u, const SelectionCode& code);

struct FarForbidden {
    BitString y;
    /// Index of the codeword whose complement was too close to complement(u); empty when complement(u) was returned.
    std::optional<std::size_t> pivot;
};

/**
 * For `u` at distance >= delta_num from every codeword, returns a forbidden
 * string at distance >= block_len - delta_num from `u`.
 *
 * Returns complement(u) when that is forbidden. Otherwise takes the first
 * codeword x0 with Ham(x0, complement(u)) > forbidden_radius() and flips
 * complement(u) on the first delta_num positions (ascending) where it agrees
 * with complement(x0).
 */
FarForbidden find_far_forbidden_traced(const BitString& u, const SelectionCode& code);
BitString find_far_forbidden(const BitString& u, const SelectionCode& code);

struct CodeReport {
    bool ok = true;
    std::string violation;
};

CodeReport verify_code(const SelectionCode& code, std::size_t requested_n);

/// Visits every forbidden string of the code's length in lexicographic order. Requires block_len <= 32.
template <typename Visitor>
void for_each_forbidden(const SelectionCode& code, Visitor&& visit) {
    const std::size_t len = code.params.block_len;
    const std::uint64_t total = std::uint64_t{1} << len;
    for (std::uint64_t v = 0; v < total; ++v) {
        auto y = BitString::from_uint(v, len);
        if (is_forbidden(y, code)) {
            visit(y);
        }
    }
}

}  // namespace cslab
