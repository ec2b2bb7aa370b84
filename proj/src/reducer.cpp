#include "cslab/reducer.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "cslab/error.hpp"
#include "cslab/kernels.hpp"

namespace cslab {

CliqueInstance::CliqueInstance(std::size_t n, std::size_t k, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(n), k_(k), adjacency_(n * n, 0) {
    if (k < 2) {
        throw ContractViolation("clique size k must be at least 2");
    }
    if (k > n) {
        throw ContractViolation("clique size k = " + std::to_string(k) + " exceeds vertex count " + std::to_string(n));
    }
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw ContractViolation("edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                                    ") references a vertex outside [1, " + std::to_string(n) + "]");
        }
        if (u == v) {
            throw ContractViolation("self-loop at vertex " + std::to_string(u + 1));
        }
        if (u > v) std::swap(u, v);
        adjacency_[u * n + v] = adjacency_[v * n + u] = 1;
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool CliqueInstance::adjacent(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_) {
        throw ContractViolation("vertex out of range");
    }
    return adjacency_[u * n_ + v] != 0;
}

bool CliqueInstance::is_clique(const std::vector<std::size_t>& vertices) const {
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (vertices[a] == vertices[b] || !adjacent(vertices[a], vertices[b])) {
                return false;
            }
        }
    }
    return true;
}

const BitString& VertexCoding::encode(std::size_t v) const {
    if (v >= code.size()) {
        throw ContractViolation("vertex " + std::to_string(v + 1) + " has no codeword");
    }
    return code[v];
}

VertexCoding make_coding(std::size_t n, const CodeParams& p, const GreedyOptions& opts) {
    return {greedy_construct(n, p, opts)};
}

BlockLayout make_layout(std::size_t k, const CodeParams& p) { return {k, p.block_len, p.gamma_num()}; }

std::size_t decision_distance(std::size_t k, const CodeParams& p) {
    return (k + 1) * p.block_len / 2 + p.alpha_num;
}

FillPattern::FillPattern(std::size_t k, std::uint32_t mask) : k_(k), mask_(mask) {
    if (k == 0 || k > 31) {
        throw ContractViolation("fill pattern supports 1..31 blocks");
    }
    if (mask >> k) {
        throw ContractViolation("fill mask has bits beyond block count");
    }
}

FillPattern FillPattern::from_blocks(const std::vector<bool>& ones) {
    std::uint32_t mask = 0;
    for (std::size_t q = 0; q < ones.size(); ++q) {
        if (ones[q]) mask |= bit(ones.size(), q);
    }
    return {ones.size(), mask};
}

namespace {

void place_fill(std::span<std::uint64_t> row, const BlockLayout& layout, const FillPattern& fill,
                std::uint32_t skip_mask) {
    for (std::size_t q = 0; q < layout.k; ++q) {
        if ((skip_mask & FillPattern::bit(layout.k, q)) == 0 && fill.ones(q)) {
            detail::set_run(row, layout.block_offset(q), layout.block_len);
        }
    }
}

// Spreads the low bits of `t` over the blocks not in `skip_mask`, first free block most significant.
std::uint32_t expand_mask(std::uint32_t t, std::size_t k, std::uint32_t skip_mask) {
    std::size_t free_blocks = k - static_cast<std::size_t>(std::popcount(skip_mask));
    std::uint32_t mask = 0;
    for (std::size_t q = 0; q < k; ++q) {
        const auto b = FillPattern::bit(k, q);
        if (skip_mask & b) continue;
        --free_blocks;
        if ((t >> free_blocks) & 1U) mask |= b;
    }
    return mask;
}

void check_layout_limits(std::size_t k, const CodeParams& p) {
    if (k > 31) {
        throw ContractViolation("reduction supports k <= 31");
    }
    if (p.gamma_num() > 32) {
        throw ContractViolation("balancing block longer than 32 bits is not supported");
    }
}

}  // namespace

BitString build_sel_constraint(const VertexCoding& coding, std::size_t k, std::size_t i, const BitString& y,
                               const FillPattern& phi, const BitString& z) {
    const auto& p = coding.code.params;
    const auto layout = make_layout(k, p);
    if (i >= k || phi.k() != k) {
        throw ContractViolation("build_sel_constraint: block index or fill pattern does not match k");
    }
    if (z.length() != layout.balance_len) {
        throw ContractViolation("build_sel_constraint: balancing payload has wrong length");
    }
    if (!is_forbidden(y, coding.code)) {
        throw ContractViolation("build_sel_constraint: y = " + y.to_string() + " is not forbidden");
    }
    std::vector<std::uint64_t> row(BitString::words_for(layout.total_length()), 0);
    detail::or_string(row, layout.block_offset(i), y);
    place_fill(row, layout, phi, FillPattern::bit(k, i));
    detail::or_string(row, layout.balance_offset(), z);
    return BitString::from_words(layout.total_length(), std::move(row));
}

BitString build_adj_constraint(const CliqueInstance& g, const VertexCoding& coding, std::size_t i, std::size_t j,
                               std::size_t u, std::size_t v, const FillPattern& psi) {
    const std::size_t k = psi.k();
    if (!(i < j && j < k)) {
        throw ContractViolation("build_adj_constraint: need block indices i < j < k");
    }
    if (!g.eligible_pair(u, v)) {
        throw ContractViolation("build_adj_constraint: vertices " + std::to_string(u + 1) + " and " +
                                std::to_string(v + 1) + " are distinct and adjacent");
    }
    const auto layout = make_layout(k, coding.code.params);
    std::vector<std::uint64_t> row(BitString::words_for(layout.total_length()), 0);
    detail::or_string(row, layout.block_offset(i), complement(coding.encode(u)));
    detail::or_string(row, layout.block_offset(j), complement(coding.encode(v)));
    place_fill(row, layout, psi, FillPattern::bit(k, i) | FillPattern::bit(k, j));
    return BitString::from_words(layout.total_length(), std::move(row));
}

std::uint32_t adversarial_fill(const BitString& center, const BlockLayout& layout) {
    std::uint32_t mask = 0;
    for (std::size_t q = 0; q < layout.k; ++q) {
        if (hamming_weight(block_slice(center, layout, q)) <= layout.block_len / 2) {
            mask |= FillPattern::bit(layout.k, q);
        }
    }
    return mask;
}

std::uint64_t sel_family_size(std::size_t k, std::size_t forbidden_count, const CodeParams& p) {
    return static_cast<std::uint64_t>(k) * forbidden_count * (std::uint64_t{1} << (k - 1)) *
           (std::uint64_t{1} << p.gamma_num());
}

std::uint64_t adj_family_bound(std::size_t k, std::size_t n) {
    return static_cast<std::uint64_t>(k * (k - 1) / 2) * n * n * (std::uint64_t{1} << (k - 2));
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> eligible_pairs(const CliqueInstance& g) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        for (std::size_t v = 0; v < g.vertex_count(); ++v) {
            if (g.eligible_pair(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> block_pairs(std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) out.emplace_back(i, j);
    }
    return out;
}

}  // namespace

std::uint64_t adj_family_size(const CliqueInstance& g) {
    const std::size_t k = g.k();
    return static_cast<std::uint64_t>(k * (k - 1) / 2) * eligible_pairs(g).size() * (std::uint64_t{1} << (k - 2));
}

namespace {

ClosestStringInstance make_shell(const CliqueInstance& g, const VertexCoding& coding, const ReduceOptions& opts) {
    const auto& p = coding.code.params;
    if (auto report = validate_params(p); !report.ok()) {
        throw ContractViolation("invalid code parameters: " + report.violations().front().name);
    }
    if (coding.vertex_count() != g.vertex_count()) {
        throw ContractViolation("coding has " + std::to_string(coding.vertex_count()) + " codewords for " +
                                std::to_string(g.vertex_count()) + " vertices");
    }
    check_layout_limits(g.k(), p);
    ClosestStringInstance inst;
    inst.params = p;
    inst.coding = coding;
    inst.layout = make_layout(g.k(), p);
    inst.d = decision_distance(g.k(), p);
    inst.mode = opts.mode;
    inst.seed = opts.seed;
    inst.sel_samples = opts.sel_samples;
    inst.adj_samples = opts.adj_samples;
    return inst;
}

void reduce_full(const CliqueInstance& g, ClosestStringInstance& inst, const ReduceOptions& opts) {
    const auto& p = inst.params;
    const auto& layout = inst.layout;
    const std::size_t k = layout.k;
    const std::size_t len = layout.total_length();
    if (p.block_len > 32) {
        throw BudgetExceeded("full mode enumerates {0,1}^" + std::to_string(p.block_len) + "; use sampled mode");
    }
    inst.payloads = kernels::collect_forbidden(inst.coding.code);
    const std::size_t forb = inst.payloads.size();
    const std::size_t fills = std::size_t{1} << (k - 1);
    const std::size_t balances = std::size_t{1} << p.gamma_num();
    const auto sel_total = sel_family_size(k, forb, p);
    const auto pairs = eligible_pairs(g);
    const auto blocks = block_pairs(k);
    const std::size_t adj_fills = std::size_t{1} << (k - 2);
    const auto adj_total = static_cast<std::uint64_t>(blocks.size()) * pairs.size() * adj_fills;
    if (sel_total + adj_total > opts.max_constraints) {
        throw BudgetExceeded("full instance would hold " + std::to_string(sel_total + adj_total) +
                             " constraints; budget is " + std::to_string(opts.max_constraints));
    }

    const std::size_t stride = BitString::words_for(len);
    // Row fragments, ORed together per constraint.
    std::vector<std::uint64_t> fill_rows(k * fills * stride, 0);
    std::vector<std::uint32_t> fill_masks(k * fills);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t t = 0; t < fills; ++t) {
            const auto mask = expand_mask(static_cast<std::uint32_t>(t), k, FillPattern::bit(k, i));
            fill_masks[i * fills + t] = mask;
            place_fill({fill_rows.data() + (i * fills + t) * stride, stride}, layout, FillPattern(k, mask), 0);
        }
    }
    std::vector<std::uint64_t> balance_rows(balances * stride, 0);
    for (std::size_t z = 0; z < balances; ++z) {
        detail::or_bits({balance_rows.data() + z * stride, stride}, layout.balance_offset(), z,
                        static_cast<unsigned>(p.gamma_num()));
    }

    inst.constraints = PackedStrings(len, static_cast<std::size_t>(sel_total + adj_total));
    inst.tags.assign(inst.constraints.size(), {});

    const auto outer = static_cast<long long>(k * forb);
#pragma omp parallel for schedule(static)
    for (long long iy = 0; iy < outer; ++iy) {
        const auto i = static_cast<std::size_t>(iy) / forb;
        const auto yref = static_cast<std::size_t>(iy) % forb;
        std::vector<std::uint64_t> base(stride, 0);
        detail::or_string(base, layout.block_offset(i), inst.payloads[yref]);
        std::size_t idx = static_cast<std::size_t>(iy) * fills * balances;
        for (std::size_t t = 0; t < fills; ++t) {
            const auto* fill = fill_rows.data() + (i * fills + t) * stride;
            for (std::size_t z = 0; z < balances; ++z, ++idx) {
                auto row = inst.constraints.mutable_row(idx);
                const auto* bal = balance_rows.data() + z * stride;
                for (std::size_t w = 0; w < stride; ++w) {
                    row[w] = base[w] | fill[w] | bal[w];
                }
                inst.tags[idx] = {Family::sel,
                                  static_cast<std::uint8_t>(i),
                                  0,
                                  0,
                                  fill_masks[i * fills + t],
                                  static_cast<std::uint32_t>(yref),
                                  static_cast<std::uint32_t>(z)};
            }
        }
    }

    std::size_t idx = static_cast<std::size_t>(sel_total);
    for (const auto& [i, j] : blocks) {
        const auto skip = FillPattern::bit(k, i) | FillPattern::bit(k, j);
        for (const auto& [u, v] : pairs) {
            std::vector<std::uint64_t> base(stride, 0);
            detail::or_string(base, layout.block_offset(i), complement(inst.coding.encode(u)));
            detail::or_string(base, layout.block_offset(j), complement(inst.coding.encode(v)));
            for (std::size_t t = 0; t < adj_fills; ++t, ++idx) {
                const auto mask = expand_mask(static_cast<std::uint32_t>(t), k, skip);
                auto row = inst.constraints.mutable_row(idx);
                std::copy(base.begin(), base.end(), row.begin());
                place_fill(row, layout, FillPattern(k, mask), skip);
                inst.tags[idx] = {Family::adj,
                                  static_cast<std::uint8_t>(i),
                                  static_cast<std::uint8_t>(j),
                                  0,
                                  mask,
                                  static_cast<std::uint32_t>(u),
                                  static_cast<std::uint32_t>(v)};
            }
        }
    }
    inst.counts = {static_cast<std::size_t>(sel_total), static_cast<std::size_t>(adj_total), 0, 0};
}

// Constraint key before payload interning: family, i, j, mask, y, u, v, z.
using PendingKey = std::tuple<std::uint8_t, std::uint8_t, std::uint8_t, std::uint32_t, BitString, std::uint32_t,
                              std::uint32_t, std::uint32_t>;

PendingKey sel_key(std::size_t i, std::uint32_t mask, const BitString& y, std::uint32_t z) {
    return {0, static_cast<std::uint8_t>(i), 0, mask, y, 0, 0, z};
}

PendingKey adj_key(std::size_t i, std::size_t j, std::uint32_t mask, std::size_t u, std::size_t v) {
    return {1, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), mask, BitString(),
            static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), 0};
}

void reduce_sampled(const CliqueInstance& g, ClosestStringInstance& inst, const ReduceOptions& opts) {
    const auto& p = inst.params;
    const auto& layout = inst.layout;
    const std::size_t k = layout.k;
    const auto& code = inst.coding.code;
    std::mt19937_64 rng(opts.seed);

    const auto pairs = eligible_pairs(g);
    const auto blocks = block_pairs(k);
    const std::uint64_t adj_total = static_cast<std::uint64_t>(blocks.size()) * pairs.size() * (std::uint64_t{1} << (k - 2));
    if (opts.adj_samples > adj_total) {
        throw BudgetExceeded("requested " + std::to_string(opts.adj_samples) + " adjacency samples; family has " +
                             std::to_string(adj_total));
    }
    if (opts.sel_samples + opts.adj_samples > opts.max_constraints) {
        throw BudgetExceeded("requested samples exceed the constraint budget");
    }

    const auto random_string = [&](std::size_t len) {
        std::vector<std::uint64_t> words(BitString::words_for(len));
        for (auto& w : words) w = rng();
        return BitString::from_words(len, std::move(words));
    };
    const auto uniform = [&](std::uint64_t bound) {
        return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
    };

    std::set<PendingKey> sampled;
    const std::size_t attempt_cap = 64 * (opts.sel_samples + opts.adj_samples) + 4096;
    std::size_t attempts = 0;
    std::size_t sel_drawn = 0;
    while (sel_drawn < opts.sel_samples) {
        if (++attempts > attempt_cap) {
            throw BudgetExceeded("could not draw " + std::to_string(opts.sel_samples) + " distinct selection constraints");
        }
        const auto i = static_cast<std::size_t>(uniform(k));
        auto y = random_string(p.block_len);
        if (!is_forbidden(y, code)) continue;
        const auto mask = expand_mask(static_cast<std::uint32_t>(uniform(std::uint64_t{1} << (k - 1))), k,
                                      FillPattern::bit(k, i));
        const auto z = static_cast<std::uint32_t>(uniform(std::uint64_t{1} << p.gamma_num()));
        if (sampled.insert(sel_key(i, mask, y, z)).second) ++sel_drawn;
    }
    std::size_t adj_drawn = 0;
    while (adj_drawn < opts.adj_samples) {
        if (++attempts > attempt_cap) {
            throw BudgetExceeded("could not draw " + std::to_string(opts.adj_samples) + " distinct adjacency constraints");
        }
        const auto [i, j] = blocks[uniform(blocks.size())];
        const auto [u, v] = pairs[uniform(pairs.size())];
        const auto skip = FillPattern::bit(k, i) | FillPattern::bit(k, j);
        const auto mask = expand_mask(static_cast<std::uint32_t>(uniform(std::uint64_t{1} << (k - 2))), k, skip);
        if (sampled.insert(adj_key(i, j, mask, u, v)).second) ++adj_drawn;
    }

    std::set<PendingKey> adversarial;
    const auto add_adversarial = [&](PendingKey key) {
        if (!sampled.contains(key)) adversarial.insert(std::move(key));
    };
    for (const auto& probe : opts.probes) {
        if (probe.length() != layout.total_length()) {
            throw ContractViolation("probe center has length " + std::to_string(probe.length()) + ", expected " +
                                    std::to_string(layout.total_length()));
        }
        const auto fill = adversarial_fill(probe, layout);
        const auto z_star = static_cast<std::uint32_t>(complement(block_slice(probe, layout, balance_block)).to_uint());
        for (const auto& key : sampled) {
            const auto& [fam, i, j, mask, y, u, v, z] = key;
            if (fam == 0) {
                add_adversarial(sel_key(i, fill & ~FillPattern::bit(k, i), y, z_star));
            } else {
                add_adversarial(adj_key(i, j, fill & ~(FillPattern::bit(k, i) | FillPattern::bit(k, j)), u, v));
            }
        }
        // The constraints that refute this probe in the soundness argument.
        std::vector<std::optional<std::size_t>> decoded(k);
        for (std::size_t i = 0; i < k; ++i) {
            const auto block = block_slice(probe, layout, i);
            const auto [nearest, dist] = nearest_codeword(block, code);
            if (dist >= p.delta_num) {
                add_adversarial(sel_key(i, fill & ~FillPattern::bit(k, i), find_far_forbidden(block, code), z_star));
            } else {
                decoded[i] = nearest;
            }
        }
        for (const auto& [i, j] : blocks) {
            if (decoded[i] && decoded[j] && g.eligible_pair(*decoded[i], *decoded[j])) {
                add_adversarial(adj_key(i, j, fill & ~(FillPattern::bit(k, i) | FillPattern::bit(k, j)), *decoded[i],
                                        *decoded[j]));
            }
        }
    }

    // Intern forbidden payloads in lexicographic order so tag order matches string order.
    std::set<BitString> ys;
    for (const auto* family : {&sampled, &adversarial}) {
        for (const auto& key : *family) {
            if (std::get<0>(key) == 0) ys.insert(std::get<4>(key));
        }
    }
    inst.payloads.assign(ys.begin(), ys.end());
    const auto intern = [&](const BitString& y) {
        return static_cast<std::uint32_t>(std::lower_bound(inst.payloads.begin(), inst.payloads.end(), y) -
                                          inst.payloads.begin());
    };

    inst.counts = {};
    for (const auto* family : {&sampled, &adversarial}) {
        const bool extra = family == &adversarial;
        for (const auto& key : *family) {
            const auto& [fam, i, j, mask, y, u, v, z] = key;
            if (fam == 0) {
                inst.tags.push_back({Family::sel, i, 0, 0, mask, intern(y), z});
                ++(extra ? inst.counts.sel_adversarial : inst.counts.sel);
            } else {
                inst.tags.push_back({Family::adj, i, j, 0, mask, u, v});
                ++(extra ? inst.counts.adj_adversarial : inst.counts.adj);
            }
        }
    }
    std::sort(inst.tags.begin(), inst.tags.end());
    inst.constraints = PackedStrings(layout.total_length(), inst.tags.size());
    for (std::size_t idx = 0; idx < inst.tags.size(); ++idx) {
        const auto row = inst.rebuild(inst.tags[idx], g);
        std::copy(row.words().begin(), row.words().end(), inst.constraints.mutable_row(idx).begin());
    }
}

}  // namespace

ClosestStringInstance reduce(const CliqueInstance& g, const VertexCoding& coding, const ReduceOptions& opts) {
    auto inst = make_shell(g, coding, opts);
    if (opts.mode == ReductionMode::full) {
        reduce_full(g, inst, opts);
    } else {
        reduce_sampled(g, inst, opts);
    }
    return inst;
}

ClosestStringInstance reduce(const CliqueInstance& g, const CodeParams& p, const ReduceOptions& opts) {
    return reduce(g, make_coding(g.vertex_count(), p, opts.greedy), opts);
}

std::strong_ordering operator<=>(const ConstraintTag& a, const ConstraintTag& b) {
    if (auto c = a.family <=> b.family; c != 0) return c;
    if (a.family == Family::sel) {
        return std::tie(a.i, a.ref, a.mask, a.aux) <=> std::tie(b.i, b.ref, b.mask, b.aux);
    }
    return std::tie(a.i, a.j, a.ref, a.aux, a.mask) <=> std::tie(b.i, b.j, b.ref, b.aux, b.mask);
}

std::optional<std::size_t> ClosestStringInstance::find(const ConstraintTag& tag) const {
    const auto it = std::lower_bound(tags.begin(), tags.end(), tag);
    if (it == tags.end() || *it != tag) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - tags.begin());
}

std::optional<std::uint32_t> ClosestStringInstance::payload_ref(const BitString& y) const {
    const auto it = std::lower_bound(payloads.begin(), payloads.end(), y);
    if (it == payloads.end() || *it != y) {
        return std::nullopt;
    }
    return static_cast<std::uint32_t>(it - payloads.begin());
}

BitString ClosestStringInstance::rebuild(const ConstraintTag& tag, const CliqueInstance& g) const {
    const FillPattern fill(layout.k, tag.mask);
    if (tag.family == Family::sel) {
        return build_sel_constraint(coding, layout.k, tag.i, payloads.at(tag.ref), fill,
                                    BitString::from_uint(tag.aux, layout.balance_len));
    }
    return build_adj_constraint(g, coding, tag.i, tag.j, tag.ref, tag.aux, fill);
}

std::string ClosestStringInstance::describe(const ConstraintTag& tag) const {
    const auto fill_text = [&](std::uint32_t skip) {
        std::string s;
        for (std::size_t q = 0; q < layout.k; ++q) {
            const auto b = FillPattern::bit(layout.k, q);
            s += (skip & b) ? '-' : ((tag.mask & b) ? '1' : '0');
        }
        return s;
    };
    const auto k = layout.k;
    if (tag.family == Family::sel) {
        return "a(i=" + std::to_string(display_index(tag.i)) + ", y=" + payloads.at(tag.ref).to_string() +
               ", phi=" + fill_text(FillPattern::bit(k, tag.i)) + ", z=" +
               BitString::from_uint(tag.aux, layout.balance_len).to_string() + ")";
    }
    return "b(i=" + std::to_string(display_index(tag.i)) + ", j=" + std::to_string(display_index(tag.j)) +
           ", u=" + std::to_string(display_index(tag.ref)) + ", v=" + std::to_string(display_index(tag.aux)) +
           ", psi=" + fill_text(FillPattern::bit(k, tag.i) | FillPattern::bit(k, tag.j)) + ")";
}

InstanceStats instance_stats(const ClosestStringInstance& inst) {
    InstanceStats s;
    for (const auto& tag : inst.tags) {
        ++(tag.family == Family::sel ? s.sel : s.adj);
    }
    // Adversarial additions are part of the per-family tag counts; split them back out.
    s.sel_adversarial = inst.counts.sel_adversarial;
    s.adj_adversarial = inst.counts.adj_adversarial;
    s.sel -= std::min(s.sel, s.sel_adversarial);
    s.adj -= std::min(s.adj, s.adj_adversarial);
    s.total = inst.size();
    s.length = inst.length();
    s.d = inst.d;
    s.gap_target = inst.d + inst.params.delta_num;
    std::size_t payload_bytes = 0;
    for (const auto& y : inst.payloads) {
        payload_bytes += sizeof(BitString) + y.words().size() * sizeof(std::uint64_t);
    }
    s.memory_bytes = inst.constraints.memory_bytes() + inst.tags.capacity() * sizeof(ConstraintTag) + payload_bytes;
    return s;
}

GapRatio gap_ratio(std::size_t d, const CodeParams& p, std::size_t k) {
    if (d == 0 || p.delta_num == 0) {
        throw ContractViolation("gap_ratio: need d > 0 and delta > 0");
    }
    GapRatio r;
    const std::uint64_t num = d + p.delta_num;
    const std::uint64_t den = d;
    const auto g = std::gcd(num, den);
    r.numerator = num / g;
    r.denominator = den / g;
    r.value = static_cast<double>(num) / static_cast<double>(den);
    r.c_bound = (2 * p.block_len + p.delta_num - 1) / p.delta_num;
    const std::uint64_t ck = r.c_bound * k;
    r.holds = num * ck >= den * (ck + 1);
    return r;
}

GapRatio gap_ratio(const ClosestStringInstance& inst, const CodeParams& p, std::size_t k) {
    return gap_ratio(inst.d, p, k);
}

}  // namespace cslab
