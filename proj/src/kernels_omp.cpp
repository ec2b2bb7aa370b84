#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cslab/error.hpp"
#include "cslab/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cslab::kernels {

namespace {

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

constexpr std::size_t chunk_rows = 2048;

struct ChunkBest {
    std::size_t value = 0;
    std::size_t chunk = 0;
    bool seen = false;
};

// Max distance from `center` over rows [begin, end).
std::size_t chunk_max(const PackedStrings& rows, const BitString& center, std::size_t begin, std::size_t end) {
    std::size_t m = 0;
    if (rows.stride() == 1) {
        const std::uint64_t w = center.words()[0];
        const std::uint64_t* data = rows.data().data();
        for (std::size_t r = begin; r < end; ++r) {
            m = std::max<std::size_t>(m, static_cast<std::size_t>(std::popcount(data[r] ^ w)));
        }
    } else {
        for (std::size_t r = begin; r < end; ++r) {
            m = std::max(m, hamming_distance_words(rows.row(r), center.words()));
        }
    }
    return m;
}

}  // namespace

std::vector<MaxHit> max_distance_batch(const PackedStrings& rows, std::span<const BitString> centers) {
    for (const auto& c : centers) {
        if (c.length() != rows.length()) {
            throw ContractViolation("max_distance_batch: center length mismatch");
        }
    }
    const std::size_t n_rows = rows.size();
    const std::size_t n_chunks = (n_rows + chunk_rows - 1) / chunk_rows;
    std::vector<ChunkBest> global(centers.size());

#pragma omp parallel
    {
        std::vector<ChunkBest> local(centers.size());
#pragma omp for schedule(static)
        for (std::size_t ch = 0; ch < n_chunks; ++ch) {
            const std::size_t begin = ch * chunk_rows;
            const std::size_t end = std::min(n_rows, begin + chunk_rows);
            for (std::size_t c = 0; c < centers.size(); ++c) {
                const auto m = chunk_max(rows, centers[c], begin, end);
                // Chunks arrive in ascending order per thread; strict > keeps the first.
                if (!local[c].seen || m > local[c].value) {
                    local[c] = {m, ch, true};
                }
            }
        }
#pragma omp critical
        for (std::size_t c = 0; c < centers.size(); ++c) {
            if (!local[c].seen) {
                continue;
            }
            auto& g = global[c];
            if (!g.seen || local[c].value > g.value || (local[c].value == g.value && local[c].chunk < g.chunk)) {
                g = local[c];
            }
        }
    }

    std::vector<MaxHit> out(centers.size());
    for (std::size_t c = 0; c < centers.size(); ++c) {
        if (!global[c].seen) {
            continue;
        }
        const std::size_t begin = global[c].chunk * chunk_rows;
        const std::size_t end = std::min(n_rows, begin + chunk_rows);
        for (std::size_t r = begin; r < end; ++r) {
            if (hamming_distance_words(rows.row(r), centers[c].words()) == global[c].value) {
                out[c] = {global[c].value, r};
                break;
            }
        }
    }
    return out;
}

namespace {

// Splits [0, total) into contiguous parts, one per thread, and hands each part's
// forbidden strings back in order.
std::vector<std::vector<std::uint64_t>> forbidden_parts(const SelectionCode& code) {
    const std::size_t len = code.params.block_len;
    if (len > 32) {
        throw BudgetExceeded("forbidden-set enumeration limited to block length 32");
    }
    const std::uint64_t total = std::uint64_t{1} << len;
    const int parts = std::max(1, thread_count());
    std::vector<std::vector<std::uint64_t>> out(static_cast<std::size_t>(parts));
    std::vector<std::uint64_t> codewords;
    for (const auto& x : code.strings) {
        codewords.push_back(x.to_uint());
    }
    const auto radius = static_cast<int>(code.params.forbidden_radius());

#pragma omp parallel for schedule(static, 1)
    for (int part = 0; part < parts; ++part) {
        const std::uint64_t begin = total * static_cast<std::uint64_t>(part) / static_cast<std::uint64_t>(parts);
        const std::uint64_t end = total * static_cast<std::uint64_t>(part + 1) / static_cast<std::uint64_t>(parts);
        auto& mine = out[static_cast<std::size_t>(part)];
        for (std::uint64_t y = begin; y < end; ++y) {
            bool forbidden = true;
            for (const auto x : codewords) {
                if (std::popcount(x ^ y) > radius) {
                    forbidden = false;
                    break;
                }
            }
            if (forbidden) {
                mine.push_back(y);
            }
        }
    }
    return out;
}

}  // namespace

std::size_t count_forbidden(const SelectionCode& code) {
    std::size_t count = 0;
    for (const auto& part : forbidden_parts(code)) {
        count += part.size();
    }
    return count;
}

std::vector<BitString> collect_forbidden(const SelectionCode& code) {
    std::vector<BitString> out;
    for (const auto& part : forbidden_parts(code)) {
        for (const auto y : part) {
            out.push_back(BitString::from_uint(y, code.params.block_len));
        }
    }
    return out;
}

MinMax brute_force_min_max(std::span<const std::uint64_t> constraints, std::size_t length) {
    const auto total = static_cast<long long>(std::uint64_t{1} << length);
    MinMax best{length + 1, 0};
#pragma omp parallel
    {
        MinMax local{length + 1, 0};
#pragma omp for schedule(static)
        for (long long w = 0; w < total; ++w) {
            const auto center = static_cast<std::uint64_t>(w);
            std::size_t worst = 0;
            for (const auto x : constraints) {
                worst = std::max<std::size_t>(worst, static_cast<std::size_t>(std::popcount(center ^ x)));
                if (worst >= local.value) {
                    break;
                }
            }
            if (worst < local.value) {
                local = {worst, center};
            }
        }
#pragma omp critical
        if (local.value < best.value || (local.value == best.value && local.center < best.center)) {
            best = local;
        }
    }
    return best;
}

FarScan far_forbidden_scan(const SelectionCode& code) {
    const auto& p = code.params;
    if (p.block_len > 32) {
        throw BudgetExceeded("far-forbidden scan limited to block length 32");
    }
    const auto total = static_cast<long long>(std::uint64_t{1} << p.block_len);
    std::size_t far_count = 0;
    std::size_t violations = 0;
    std::size_t flip_branch = 0;
    std::size_t min_far = p.block_len;

#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : far_count, violations, flip_branch) \
    reduction(min : min_far)
    for (long long v = 0; v < total; ++v) {
        const auto u = BitString::from_uint(static_cast<std::uint64_t>(v), p.block_len);
        if (nearest_codeword(u, code).second < p.delta_num) {
            continue;
        }
        ++far_count;
        try {
            const auto far = find_far_forbidden_traced(u, code);
            const auto d = hamming_distance(u, far.y);
            min_far = std::min(min_far, d);
            if (far.pivot) {
                ++flip_branch;
            }
            if (!is_forbidden(far.y, code) || d < p.block_len - p.delta_num) {
                ++violations;
            }
        } catch (const std::logic_error&) {
            ++violations;
        }
    }
    return {far_count, violations, min_far, flip_branch};
}

}  // namespace cslab::kernels
