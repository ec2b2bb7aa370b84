#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cslab/error.hpp"
#include "cslab/kernels.hpp"

namespace cslab::kernels::serial {

std::vector<MaxHit> max_distance_batch(const PackedStrings& rows, std::span<const BitString> centers) {
    std::vector<MaxHit> out(centers.size());
    for (std::size_t c = 0; c < centers.size(); ++c) {
        if (centers[c].length() != rows.length()) {
            throw ContractViolation("max_distance_batch: center length mismatch");
        }
        MaxHit best;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto d = hamming_distance_words(rows.row(r), centers[c].words());
            if (d > best.value || r == 0) {
                best = {d, r};
            }
        }
        out[c] = best;
    }
    return out;
}

std::size_t count_forbidden(const SelectionCode& code) {
    std::size_t count = 0;
    for_each_forbidden(code, [&](const BitString&) { ++count; });
    return count;
}

std::vector<BitString> collect_forbidden(const SelectionCode& code) {
    std::vector<BitString> out;
    for_each_forbidden(code, [&](const BitString& y) { out.push_back(y); });
    return out;
}

MinMax brute_force_min_max(std::span<const std::uint64_t> constraints, std::size_t length) {
    const std::uint64_t total = std::uint64_t{1} << length;
    MinMax best{length + 1, 0};
    for (std::uint64_t w = 0; w < total; ++w) {
        std::size_t worst = 0;
        for (const auto x : constraints) {
            worst = std::max<std::size_t>(worst, static_cast<std::size_t>(std::popcount(w ^ x)));
        }
        if (worst < best.value) {
            best = {worst, w};
        }
    }
    return best;
}

FarScan far_forbidden_scan(const SelectionCode& code) {
    const auto& p = code.params;
    FarScan scan;
    scan.min_far_distance = p.block_len;
    const std::uint64_t total = std::uint64_t{1} << p.block_len;
    for (std::uint64_t v = 0; v < total; ++v) {
        const auto u = BitString::from_uint(v, p.block_len);
        if (nearest_codeword(u, code).second < p.delta_num) {
            continue;
        }
        ++scan.far_count;
        FarForbidden far;
        try {
            far = find_far_forbidden_traced(u, code);
        } catch (const std::logic_error&) {
            ++scan.violations;
            continue;
        }
        const auto d = hamming_distance(u, far.y);
        scan.min_far_distance = std::min(scan.min_far_distance, d);
        if (far.pivot) {
            ++scan.flip_branch;
        }
        if (!is_forbidden(far.y, code) || d < p.block_len - p.delta_num) {
            ++scan.violations;
        }
    }
    return scan;
}

}  // namespace cslab::kernels::serial
