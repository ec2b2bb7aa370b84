#include "cslab/solvers.hpp"

#include <algorithm>
#include <bit>

#include "cslab/error.hpp"
#include "cslab/kernels.hpp"

namespace cslab {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t common_length(std::span<const BitString> constraints, const char* who) {
    if (constraints.empty()) {
        throw ContractViolation(std::string(who) + ": empty constraint family");
    }
    const auto len = constraints.front().length();
    for (const auto& x : constraints) {
        if (x.length() != len) {
            throw ContractViolation(std::string(who) + ": constraints have unequal lengths");
        }
    }
    return len;
}

class BranchSearch {
public:
    BranchSearch(std::span<const BitString> constraints, std::size_t d, std::uint64_t max_nodes)
        : constraints_(constraints), d_(d), max_nodes_(max_nodes),
          candidate_(constraints.front().words().begin(), constraints.front().words().end()),
          length_(constraints.front().length()) {}

    DecideResult run() {
        DecideResult r;
        r.yes = search(d_);
        r.nodes = nodes_;
        r.exhausted = exhausted_;
        if (r.yes) {
            r.witness = BitString::from_words(length_, candidate_);
        }
        return r;
    }

private:
    bool get(std::size_t p) const { return (candidate_[p / 64] >> (63 - p % 64)) & 1U; }
    void flip(std::size_t p) { candidate_[p / 64] ^= std::uint64_t{1} << (63 - p % 64); }

    bool search(std::size_t budget) {
        if (nodes_ >= max_nodes_) {
            exhausted_ = true;
            return false;
        }
        ++nodes_;
        const BitString* violated = nullptr;
        for (const auto& x : constraints_) {
            const auto dist = hamming_distance_words(candidate_, x.words());
            // At most `budget` more flips, each lowering a distance by at most one.
            if (dist > d_ + budget) {
                return false;
            }
            if (dist > d_ && violated == nullptr) {
                violated = &x;
            }
        }
        if (violated == nullptr) {
            return true;
        }
        if (budget == 0) {
            return false;
        }
        std::vector<std::size_t> positions;
        for (std::size_t p = 0; p < length_ && positions.size() < d_ + 1; ++p) {
            if (get(p) != (*violated)[p]) {
                positions.push_back(p);
            }
        }
        for (const auto p : positions) {
            flip(p);
            if (search(budget - 1)) {
                return true;
            }
            flip(p);
            if (exhausted_) {
                return false;
            }
        }
        return false;
    }

    std::span<const BitString> constraints_;
    std::size_t d_;
    std::uint64_t max_nodes_;
    std::vector<std::uint64_t> candidate_;
    std::size_t length_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

SolveResult brute_force_opt(std::span<const BitString> constraints, std::size_t max_length) {
    const auto start = Clock::now();
    const auto len = common_length(constraints, "brute_force_opt");
    SolveResult r;
    if (len > max_length || len > 63) {
        r.refusal = "length " + std::to_string(len) + " exceeds brute-force cap " + std::to_string(max_length);
        return r;
    }
    std::vector<std::uint64_t> values;
    values.reserve(constraints.size());
    for (const auto& x : constraints) {
        values.push_back(x.to_uint());
    }
    const auto best = kernels::brute_force_min_max(values, len);
    r.optimum = best.value;
    r.witness = BitString::from_uint(best.center, len);
    r.nodes = std::uint64_t{1} << len;
    r.wall_time = Clock::now() - start;
    return r;
}

DecideResult branch_decide(std::span<const BitString> constraints, std::size_t d, std::uint64_t max_nodes) {
    common_length(constraints, "branch_decide");
    return BranchSearch(constraints, d, max_nodes).run();
}

SolveResult branch_opt(std::span<const BitString> constraints, std::uint64_t max_nodes) {
    const auto start = Clock::now();
    const auto len = common_length(constraints, "branch_opt");
    std::size_t widest = 0;
    for (std::size_t a = 0; a < constraints.size(); ++a) {
        for (std::size_t b = a + 1; b < constraints.size(); ++b) {
            widest = std::max(widest, hamming_distance(constraints[a], constraints[b]));
        }
    }
    SolveResult r;
    std::uint64_t remaining = max_nodes;
    for (std::size_t d = (widest + 1) / 2; d <= len; ++d) {
        const auto attempt = branch_decide(constraints, d, remaining);
        r.nodes += attempt.nodes;
        remaining -= std::min(remaining, attempt.nodes);
        if (attempt.exhausted) {
            r.refusal = "node budget exhausted at d = " + std::to_string(d);
            break;
        }
        if (attempt.yes) {
            r.optimum = d;
            r.witness = attempt.witness;
            break;
        }
    }
    r.wall_time = Clock::now() - start;
    return r;
}

CliqueResult clique_brute_force(const CliqueInstance& g, std::uint64_t max_subsets) {
    const std::size_t n = g.vertex_count();
    const std::size_t k = g.k();
    // C(n, k) with early exit once past the budget.
    std::uint64_t subsets = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        subsets = subsets * (n - k + i) / i;
        if (subsets > max_subsets) {
            throw BudgetExceeded("clique search over C(" + std::to_string(n) + ", " + std::to_string(k) +
                                 ") subsets exceeds budget " + std::to_string(max_subsets));
        }
    }
    // Lexicographic enumeration of k-subsets with pruning on the partial clique.
    std::vector<std::size_t> chosen;
    CliqueResult result;
    const auto extend = [&](auto&& self, std::size_t next) -> bool {
        if (chosen.size() == k) {
            return true;
        }
        for (std::size_t v = next; v + (k - chosen.size()) <= n; ++v) {
            const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return g.adjacent(c, v); });
            if (!fits) continue;
            chosen.push_back(v);
            if (self(self, v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (extend(extend, 0)) {
        result.found = true;
        result.vertices = chosen;
    }
    return result;
}

MaxDistance max_distance(const BitString& center, const ClosestStringInstance& inst) {
    if (center.length() != inst.length()) {
        throw ContractViolation("max_distance: center length " + std::to_string(center.length()) +
                                " differs from instance length " + std::to_string(inst.length()));
    }
    if (inst.size() == 0) {
        return {};
    }
    const auto hit = kernels::max_distance_batch(inst.constraints, std::span(&center, 1)).front();
    return {hit.value, hit.index};
}

MaxDistance max_distance(const BitString& center, std::span<const BitString> constraints) {
    MaxDistance best;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        const auto d = hamming_distance(center, constraints[i]);
        if (d > best.value || i == 0) {
            best = {d, i};
        }
    }
    return best;
}

}  // namespace cslab
