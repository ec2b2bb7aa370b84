#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cslab/bitstring.hpp"
#include "cslab/codegen.hpp"

// Data-parallel scans. Every kernel in `cslab::kernels` has a plain loop
// twin in `cslab::kernels::serial`; tests hold the two to identical output
// and the bench target times them against each other. Reductions break ties
// toward the lowest index, so results do not depend on the thread count.

namespace cslab::kernels {

struct MaxHit {
    std::size_t value = 0;
    /// Row achieving `value`; the first such row.
    std::size_t index = 0;

    friend bool operator==(const MaxHit&, const MaxHit&) = default;
};

/// For each center, the maximum distance to any row and the first row attaining it.
std::vector<MaxHit> max_distance_batch(const PackedStrings& rows, std::span<const BitString> centers);

std::size_t count_forbidden(const SelectionCode& code);
/// All forbidden strings in lexicographic order.
std::vector<BitString> collect_forbidden(const SelectionCode& code);

struct MinMax {
    std::size_t value = 0;
    std::uint64_t center = 0;

    friend bool operator==(const MinMax&, const MinMax&) = default;
};

/// Exhaustive minimax over all 2^length centers; constraints are right-aligned values. Ties go to the smallest center.
MinMax brute_force_min_max(std::span<const std::uint64_t> constraints, std::size_t length);

struct FarScan {
    /// Strings at distance >= delta from every codeword.
    std::size_t far_count = 0;
    /// Far strings whose constructed forbidden partner is not forbidden or not far enough.
    std::size_t violations = 0;
    /// Smallest Ham(u, y) over far strings (block_len when none).
    std::size_t min_far_distance = 0;
    /// Far strings resolved by the flip branch rather than by plain complement.
    std::size_t flip_branch = 0;

    friend bool operator==(const FarScan&, const FarScan&) = default;
};

/// Runs find_far_forbidden for every string of the block length. Requires block_len <= 32.
FarScan far_forbidden_scan(const SelectionCode& code);

namespace serial {

std::vector<MaxHit> max_distance_batch(const PackedStrings& rows, std::span<const BitString> centers);
std::size_t count_forbidden(const SelectionCode& code);
std::vector<BitString> collect_forbidden(const SelectionCode& code);
MinMax brute_force_min_max(std::span<const std::uint64_t> constraints, std::size_t length);
FarScan far_forbidden_scan(const SelectionCode& code);

}  // namespace serial

}  // namespace cslab::kernels
