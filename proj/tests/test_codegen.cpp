#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "cslab/codegen.hpp"
#include "cslab/error.hpp"

using namespace cslab;

namespace {

// Sum of C(l, i) over the two tails, in 128-bit arithmetic.
unsigned __int128 binomial_tails(std::size_t l, std::size_t alpha) {
    std::vector<unsigned __int128> row(l + 1, 0);
    row[0] = 1;
    for (std::size_t r = 1; r <= l; ++r) {
        for (std::size_t i = r; i > 0; --i) row[i] += row[i - 1];
    }
    unsigned __int128 a = 0;
    for (std::size_t i = 0; i <= l; ++i) {
        if (i <= l / 2 - alpha || i >= l / 2 + alpha) a += row[i];
    }
    return a;
}

std::string to_decimal(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

std::vector<std::uint32_t> as_ints(const SelectionCode& code) {
    std::vector<std::uint32_t> out;
    for (const auto& x : code.strings) out.push_back(static_cast<std::uint32_t>(x.to_uint()));
    return out;
}

}  // namespace

TEST_CASE("validate_params examples") {
    CHECK(validate_params(paper_profile()).ok());
    CHECK(validate_params(desk16_profile()).ok());
    CHECK(validate_params(desk20_profile()).ok());
    const auto bad = validate_params(CodeParams{14, 1, 2, 1});
    CHECK_FALSE(bad.ok());
    REQUIRE(bad.violations().size() == 1);
    CHECK(bad.violations().front().name == "even_distance_available");
    CHECK_FALSE(validate_params(CodeParams{16, 2, 3, 1}).ok());
    CHECK_FALSE(validate_params(CodeParams{15, 2, 2, 1}).ok());
    CHECK_FALSE(validate_params(CodeParams{16, 2, 4, 2}).ok());
}

TEST_CASE("profiles") {
    CHECK(desk16_profile() == CodeParams{16, 2, 2, 1});
    CHECK(desk20_profile() == CodeParams{20, 2, 2, 1});
    CHECK(paper_profile() == CodeParams{100, 1, 10, 5});
    CHECK(profile_by_name("desk16") == desk16_profile());
    CHECK_FALSE(profile_by_name("desk17").has_value());
}

TEST_CASE("entropy") {
    CHECK(entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(0.49) == doctest::Approx(0.999711441752809919696528401165).epsilon(1e-6));
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0.001, 0.999);
    for (int i = 0; i < 100; ++i) {
        const double p = unit(rng);
        CHECK(entropy(p) == doctest::Approx(entropy(1.0 - p)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(entropy(0.0), ContractViolation);
    CHECK_THROWS_AS(entropy(1.0), ContractViolation);
}

TEST_CASE("tail_bound_A frozen values") {
    CHECK(tail_bound_A(desk16_profile()) == 29786);
    CHECK(tail_bound_A(CodeParams{4, 1, 0, 0}) == 10);
    CHECK(tail_bound_A(desk20_profile()) == 527900);
    CHECK(tail_bound_A(paper_profile()).str() == "1166759255682665208161890708120");
}

TEST_CASE("tail_bound_A matches binomial oracle up to length 64") {
    for (std::size_t l = 2; l <= 64; l += 2) {
        for (std::size_t alpha = 1; alpha < l / 2; ++alpha) {
            const auto a = tail_bound_A(CodeParams{l, alpha, 0, 0});
            CHECK(a.str() == to_decimal(binomial_tails(l, alpha)));
            CHECK(a < (boost::multiprecision::cpp_int{1} << l));
        }
    }
}

TEST_CASE("greedy n = 1 takes the least balanced string") {
    for (const auto& p : {desk16_profile(), desk20_profile()}) {
        const auto code = greedy_construct(1, p);
        REQUIRE(code.size() == 1);
        CHECK(code[0] == BitString::parse(std::string(p.half(), '0') + std::string(p.half(), '1')));
    }
}

TEST_CASE("greedy n = 2 on desk16") {
    const auto code = greedy_construct(2, desk16_profile());
    REQUIRE(code.size() == 2);
    CHECK(hamming_weight(code[0]) == 8);
    CHECK(hamming_weight(code[1]) == 8);
    CHECK(hamming_distance(code[0], code[1]) == 8);
    CHECK(code[0].to_string() == "0000000011111111");
    CHECK(code[1].to_string() == "0000111100001111");
}

TEST_CASE("greedy capacity and exhaustion") {
    CHECK(greedy_capacity(desk16_profile()) == 15);
    CHECK(greedy_capacity(desk20_profile()) == 3);
    try {
        greedy_construct(65536, desk16_profile());
        FAIL("expected exhaustion");
    } catch (const CodeExhausted& e) {
        CHECK(e.requested() == 65536);
        CHECK(e.achieved() == 15);
    }
    CHECK_THROWS_AS(greedy_construct(2, CodeParams{14, 1, 2, 1}), ContractViolation);
    CHECK_THROWS_AS(greedy_construct(2, paper_profile()), BudgetExceeded);
}

TEST_CASE("greedy output passes verify_code and is deterministic") {
    for (const auto& p : {desk16_profile(), desk20_profile()}) {
        const auto cap = greedy_capacity(p);
        for (std::size_t n = 1; n <= cap; ++n) {
            const auto code = greedy_construct(n, p);
            CHECK(verify_code(code, n).ok);
            CHECK(code.strings == greedy_construct(n, p).strings);
        }
    }
}

TEST_CASE("randomized greedy") {
    GreedyOptions opts;
    opts.mode = ConstructionMode::randomized;
    opts.seed = 5;
    const auto a = greedy_construct(4, paper_profile(), opts);
    CHECK(verify_code(a, 4).ok);
    CHECK(a.strings == greedy_construct(4, paper_profile(), opts).strings);
    const auto b = greedy_construct(4, desk16_profile(), opts);
    CHECK(verify_code(b, 4).ok);
}

TEST_CASE("verify_code rejects bad codes") {
    const auto p = desk16_profile();
    auto code = greedy_construct(3, p);
    CHECK(verify_code(code, 3).ok);
    CHECK_FALSE(verify_code(code, 4).ok);
    auto dup = code;
    dup.strings.push_back(code[0]);
    CHECK_FALSE(verify_code(dup, 4).ok);
    auto zeros = code;
    zeros.strings.push_back(BitString::zeros(16));
    const auto r = verify_code(zeros, 4);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.violation.empty());
}

TEST_CASE("is_forbidden examples") {
    const auto code = greedy_construct(6, desk16_profile());
    for (const auto& x : code.strings) {
        CHECK(is_forbidden(x, code));
        CHECK_FALSE(is_forbidden(complement(x), code));
    }
}

TEST_CASE("forbidden count against a two-loop oracle") {
    const auto p = desk16_profile();
    for (const std::size_t n : {2u, 6u, 8u}) {
        const auto code = greedy_construct(n, p);
        const auto ints = as_ints(code);
        std::size_t oracle = 0;
        std::size_t counted = 0;
        for (std::uint32_t y = 0; y < (1u << 16); ++y) {
            bool forb = true;
            for (const auto x : ints) {
                if (std::popcount(x ^ y) > 14) forb = false;
            }
            oracle += forb;
            counted += is_forbidden(BitString::from_uint(y, 16), code);
        }
        CHECK(counted == oracle);
        if (n == 6) CHECK(oracle == 65434);
        if (n == 8) CHECK(oracle == 65400);
    }
}

TEST_CASE("find_far_forbidden") {
    const auto p = desk16_profile();
    const auto code = greedy_construct(6, p);
    std::size_t second_branch = 0;
    for (std::uint32_t v = 0; v < (1u << 16); ++v) {
        const auto u = BitString::from_uint(v, 16);
        if (nearest_codeword(u, code).second < p.delta_num) {
            CHECK_THROWS_AS(find_far_forbidden(u, code), ContractViolation);
            continue;
        }
        const auto traced = find_far_forbidden_traced(u, code);
        REQUIRE(is_forbidden(traced.y, code));
        REQUIRE(hamming_distance(u, traced.y) >= 15);
        if (!traced.pivot) {
            CHECK(traced.y == complement(u));
            CHECK(hamming_distance(u, traced.y) == 16);
        } else {
            ++second_branch;
            const auto x0c = complement(code[*traced.pivot]);
            const auto dist = hamming_distance(x0c, traced.y);
            CHECK(dist >= p.beta_num);
            CHECK(dist < p.beta_num + p.delta_num);
        }
    }
    CHECK(second_branch > 0);
}

TEST_CASE("nearest codeword") {
    const auto code = greedy_construct(3, desk16_profile());
    const auto [idx, dist] = nearest_codeword(code[2], code);
    CHECK(idx == 2);
    CHECK(dist == 0);
}
