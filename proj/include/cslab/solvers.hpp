#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cslab/bitstring.hpp"
#include "cslab/reducer.hpp"

namespace cslab {

struct SolveResult {
    /// Empty when the solver refused or ran out of budget.
    std::optional<std::size_t> optimum;
    std::optional<BitString> witness;
    std::uint64_t nodes = 0;
    std::chrono::nanoseconds wall_time{0};
    /// Why no optimum was produced.
    std::string refusal;

    bool solved() const noexcept { return optimum.has_value(); }
};

/// Default length cap for exhaustive enumeration of centers.
inline constexpr std::size_t brute_force_default_cap = 24;

/**
 * Exact optimum by trying all 2^L centers; the witness is the
 * lexicographically least optimal center. Lengths above `max_length` give an
 * unsolved result with a refusal message.
 */
SolveResult brute_force_opt(std::span<const BitString> constraints, std::size_t max_length = brute_force_default_cap);

struct DecideResult {
    bool yes = false;
    std::optional<BitString> witness;
    std::uint64_t nodes = 0;
    /// Set when `max_nodes` was hit before the search finished; `yes` is then meaningless.
    bool exhausted = false;
};

/**
 * Bounded-depth branching search for a center within distance `d` of every
 * constraint. Starts at the first constraint; while some constraint (first in
 * order) is farther than `d`, branches on its first d+1 mismatch positions,
 * each branch spending one unit of a flip budget that starts at `d`.
 */
DecideResult branch_decide(std::span<const BitString> constraints, std::size_t d,
                           std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max());

/// Smallest d accepted by branch_decide, scanning upward from ceil(max pairwise distance / 2).
SolveResult branch_opt(std::span<const BitString> constraints,
                       std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max());

struct CliqueResult {
    bool found = false;
    /// Lexicographically least k-clique, ascending.
    std::vector<std::size_t> vertices;
};

/// Refuses (BudgetExceeded) when C(n, k) exceeds `max_subsets`.
CliqueResult clique_brute_force(const CliqueInstance& g, std::uint64_t max_subsets = 100'000'000);

struct MaxDistance {
    std::size_t value = 0;
    /// Index of the first constraint attaining `value`.
    std::size_t index = 0;
};

MaxDistance max_distance(const BitString& center, const ClosestStringInstance& inst);
MaxDistance max_distance(const BitString& center, std::span<const BitString> constraints);

}  // namespace cslab
