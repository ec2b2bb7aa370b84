#include "cslab/codegen.hpp"

#include <algorithm>
#include <limits>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cslab/error.hpp"

namespace cslab {

CodeParams desk16_profile() { return {16, 2, 2, 1}; }
CodeParams desk20_profile() { return {20, 2, 2, 1}; }
CodeParams paper_profile() { return {100, 1, 10, 5}; }

std::optional<CodeParams> profile_by_name(std::string_view name) {
    if (name == "desk16") return desk16_profile();
    if (name == "desk20") return desk20_profile();
    if (name == "paper100") return paper_profile();
    return std::nullopt;
}

std::vector<std::string> profile_names() { return {"desk16", "desk20", "paper100"}; }

bool ParamReport::ok() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const ParamCheck& c) { return c.ok; });
}

std::vector<ParamCheck> ParamReport::violations() const {
    std::vector<ParamCheck> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const ParamCheck& c) { return !c.ok; });
    return out;
}

ParamReport validate_params(const CodeParams& p) {
    ParamReport r;
    const auto add = [&](std::string name, std::string protects, bool ok) {
        r.checks.push_back({std::move(name), std::move(protects), ok});
    };
    const std::size_t l = p.block_len;
    add("block_len_positive_even", "balanced codewords have integer weight l/2", l > 0 && l % 2 == 0);
    add("constants_positive", "all margins are at least one bit", p.alpha_num > 0 && p.beta_num > 0 && p.delta_num > 0);
    add("beta_twice_delta", "far-forbidden flip lands exactly at distance beta from complement(x0)",
        p.beta_num == 2 * p.delta_num);
    // Signed arithmetic: alpha may exceed l/2 on bad input.
    const long long half_minus_alpha = static_cast<long long>(l / 2) - static_cast<long long>(p.alpha_num);
    add("five_delta_below_half_minus_alpha",
        "forbidden-string contradiction (2beta+delta < 1/2-alpha) and edge-claim margin (3delta < 1/2-alpha)",
        5 * static_cast<long long>(p.delta_num) < half_minus_alpha);
    add("flip_room", "enough agreeing positions to flip delta bits (beta + delta < l)",
        p.beta_num + p.delta_num < l);
    bool even_inside = false;
    if (half_minus_alpha >= 0) {
        const long long lo = half_minus_alpha;
        const long long hi = static_cast<long long>(l / 2 + p.alpha_num);
        for (long long v = lo + 1; v < hi; ++v) {
            if (v != 0 && v % 2 == 0) {
                even_inside = true;
                break;
            }
        }
    }
    add("even_distance_available", "balanced strings have even pairwise distances; the window must admit one",
        even_inside);
    return r;
}

double entropy(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw ContractViolation("entropy: p must lie in (0, 1)");
    }
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

boost::multiprecision::cpp_int tail_bound_A(const CodeParams& p) {
    using boost::multiprecision::cpp_int;
    const std::size_t l = p.block_len;
    if (l == 0 || l % 2 != 0 || p.alpha_num == 0 || p.alpha_num >= l / 2) {
        throw ContractViolation("tail_bound_A: need even block length and 0 < alpha < l/2");
    }
    // Row l of Pascal's triangle.
    std::vector<cpp_int> binom(l + 1);
    binom[0] = 1;
    for (std::size_t i = 1; i <= l; ++i) {
        binom[i] = binom[i - 1] * (l - i + 1) / i;
    }
    cpp_int a = 0;
    for (std::size_t i = 0; i <= p.lower_distance(); ++i) a += binom[i];
    for (std::size_t i = p.upper_distance(); i <= l; ++i) a += binom[i];

    const double sigma = entropy(static_cast<double>(p.lower_distance()) / static_cast<double>(l));
    const double log2_a = std::log2(a.convert_to<double>());
    if (log2_a > 1.0 + static_cast<double>(l) * sigma + 1e-9) {
        throw std::logic_error("tail_bound_A: entropy bound violated");
    }
    return a;
}

namespace {

void require_valid(const CodeParams& p) {
    const auto report = validate_params(p);
    if (!report.ok()) {
        throw ContractViolation("invalid code parameters: " + report.violations().front().name);
    }
}

bool inside_window(std::size_t d, const CodeParams& p) {
    return d > p.lower_distance() && d < p.upper_distance();
}

// Runs full-mode greedy for at most `limit` rounds.
std::vector<BitString> greedy_full(std::size_t limit, const CodeParams& p, const GreedyOptions& opts) {
    const std::size_t l = p.block_len;
    if (l > opts.max_full_block_len || l > 32) {
        throw BudgetExceeded("full-mode greedy needs a 2^" + std::to_string(l) +
                             "-bit marking array; use randomized mode");
    }
    const std::uint64_t total = std::uint64_t{1} << l;
    std::vector<std::uint64_t> used((total + 63) / 64, 0);
    const auto is_used = [&](std::uint64_t v) { return (used[v >> 6] >> (v & 63)) & 1U; };
    const auto half = static_cast<int>(p.half());
    const auto lo = static_cast<int>(p.lower_distance());
    const auto hi = static_cast<int>(p.upper_distance());

    std::vector<BitString> out;
    std::uint64_t cursor = 0;
    while (out.size() < limit) {
        while (cursor < total && (std::popcount(cursor) != half || is_used(cursor))) {
            ++cursor;
        }
        if (cursor == total) {
            break;
        }
        const std::uint64_t x = cursor;
        out.push_back(BitString::from_uint(x, l));
        for (std::uint64_t y = 0; y < total; ++y) {
            const int d = std::popcount(x ^ y);
            if (d <= lo || d >= hi) {
                used[y >> 6] |= std::uint64_t{1} << (y & 63);
            }
        }
    }
    return out;
}

std::vector<BitString> greedy_randomized(std::size_t n, const CodeParams& p, const GreedyOptions& opts) {
    const std::size_t l = p.block_len;
    std::mt19937_64 rng(opts.seed);
    std::vector<std::size_t> positions(l);
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    std::vector<BitString> out;
    for (std::size_t attempt = 0; attempt < opts.max_attempts && out.size() < n; ++attempt) {
        std::shuffle(positions.begin(), positions.end(), rng);
        auto candidate = BitString::zeros(l).with_flipped(std::span(positions).first(p.half()));
        const bool fits = std::all_of(out.begin(), out.end(), [&](const BitString& x) {
            return inside_window(hamming_distance(x, candidate), p);
        });
        if (fits) {
            out.push_back(std::move(candidate));
        }
    }
    return out;
}

}  // namespace

SelectionCode greedy_construct(std::size_t n, const CodeParams& p, const GreedyOptions& opts) {
    require_valid(p);
    auto strings = opts.mode == ConstructionMode::full ? greedy_full(n, p, opts) : greedy_randomized(n, p, opts);
    if (strings.size() < n) {
        throw CodeExhausted(n, strings.size());
    }
    return {p, std::move(strings)};
}

std::size_t greedy_capacity(const CodeParams& p, const GreedyOptions& opts) {
    require_valid(p);
    return greedy_full(std::numeric_limits<std::size_t>::max(), p, opts).size();
}

bool is_forbidden(const BitString& y, const SelectionCode& code) {
    if (y.length() != code.params.block_len) {
        throw ContractViolation("is_forbidden: string length " + std::to_string(y.length()) +
                                " differs from block length " + std::to_string(code.params.block_len));
    }
    const std::size_t radius = code.params.forbidden_radius();
    return std::all_of(code.strings.begin(), code.strings.end(),
                       [&](const BitString& x) { return hamming_distance(x, y) <= radius; });
}

std::pair<std::size_t, std::size_t> nearest_codeword(const BitString& u, const SelectionCode& code) {
    if (code.strings.empty()) {
        throw ContractViolation("nearest_codeword: empty code");
    }
    std::pair<std::size_t, std::size_t> best{0, hamming_distance(code[0], u)};
    for (std::size_t i = 1; i < code.size(); ++i) {
        const auto d = hamming_distance(code[i], u);
        if (d < best.second) {
            best = {i, d};
        }
    }
    return best;
}

FarForbidden find_far_forbidden_traced(const BitString& u, const SelectionCode& code) {
    const auto& p = code.params;
    if (u.length() != p.block_len) {
        throw ContractViolation("find_far_forbidden: length mismatch");
    }
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (hamming_distance(code[i], u) < p.delta_num) {
            throw ContractViolation("find_far_forbidden: codeword #" + std::to_string(i) + " (" +
                                    code[i].to_string() + ") is within distance " + std::to_string(p.delta_num) +
                                    " of u");
        }
    }
    auto cu = complement(u);
    if (is_forbidden(cu, code)) {
        return {std::move(cu), std::nullopt};
    }
    std::size_t pivot = 0;
    while (hamming_distance(code[pivot], cu) <= p.forbidden_radius()) {
        ++pivot;
    }
    // complement(u) and complement(x0) agree exactly where u and x0 agree.
    std::vector<std::size_t> flips;
    const auto& x0 = code[pivot];
    for (std::size_t pos = 0; pos < p.block_len && flips.size() < p.delta_num; ++pos) {
        if (u[pos] == x0[pos]) {
            flips.push_back(pos);
        }
    }
    if (flips.size() < p.delta_num) {
        throw std::logic_error("find_far_forbidden: not enough agreeing positions");
    }
    auto y = cu.with_flipped(flips);
    if (!is_forbidden(y, code)) {
        throw std::logic_error("find_far_forbidden: constructed string is not forbidden");
    }
    return {std::move(y), pivot};
}

BitString find_far_forbidden(const BitString& u, const SelectionCode& code) {
    return find_far_forbidden_traced(u, code).y;
}

CodeReport verify_code(const SelectionCode& code, std::size_t requested_n) {
    const auto& p = code.params;
    if (code.size() != requested_n) {
        return {false, "size " + std::to_string(code.size()) + " differs from requested " + std::to_string(requested_n)};
    }
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (code[i].length() != p.block_len) {
            return {false, "member #" + std::to_string(i) + " has length " + std::to_string(code[i].length())};
        }
        const auto w = hamming_weight(code[i]);
        if (w != p.half()) {
            return {false, "member #" + std::to_string(i) + " has weight " + std::to_string(w) + ", expected " +
                               std::to_string(p.half())};
        }
    }
    for (std::size_t i = 0; i < code.size(); ++i) {
        for (std::size_t j = i + 1; j < code.size(); ++j) {
            const auto d = hamming_distance(code[i], code[j]);
            if (!inside_window(d, p)) {
                return {false, "members #" + std::to_string(i) + " and #" + std::to_string(j) + " at distance " +
                                   std::to_string(d) + " outside (" + std::to_string(p.lower_distance()) + ", " +
                                   std::to_string(p.upper_distance()) + ")"};
            }
        }
    }
    return {};
}

}  // namespace cslab
