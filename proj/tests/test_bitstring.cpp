#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cslab/bitstring.hpp"
#include "cslab/error.hpp"

using namespace cslab;

namespace {

BitString random_string(std::size_t len, std::mt19937_64& rng) {
    std::vector<std::uint64_t> words(BitString::words_for(len));
    for (auto& w : words) w = rng();
    return BitString::from_words(len, std::move(words));
}

}  // namespace

TEST_CASE("hamming distance examples") {
    const auto a = BitString::parse("0011");
    const auto b = BitString::parse("0101");
    CHECK(hamming_distance(a, a) == 0);
    CHECK(hamming_distance(a, b) == 2);
    CHECK(hamming_distance(a, complement(a)) == 4);
    const auto long_a = BitString::parse(std::string(130, '1'));
    CHECK(hamming_distance(long_a, complement(long_a)) == 130);
}

TEST_CASE("hamming weight and complement") {
    CHECK(hamming_weight(BitString::zeros(8)) == 0);
    CHECK(hamming_weight(BitString::parse("0011")) == 2);
    CHECK(complement(BitString::parse("0011")) == BitString::parse("1100"));
    CHECK(complement(BitString::zeros(70)) == BitString::ones(70));
    CHECK(hamming_weight(BitString::ones(70)) == 70);
}

TEST_CASE("random identities") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t len = 1 + rng() % 150;
        const auto x = random_string(len, rng);
        const auto y = random_string(len, rng);
        const auto z = random_string(len, rng);
        CHECK(hamming_distance(x, z) <= hamming_distance(x, y) + hamming_distance(y, z));
        CHECK(hamming_distance(x, y) == hamming_distance(complement(x), complement(y)));
        CHECK(hamming_distance(x, y) + hamming_distance(complement(x), y) == len);
        CHECK(hamming_weight(complement(x)) == len - hamming_weight(x));
        CHECK(BitString::parse(x.to_string()) == x);
    }
}

TEST_CASE("from_uint puts the most significant bit first") {
    const auto s = BitString::from_uint(0b0110, 4);
    CHECK(s.to_string() == "0110");
    CHECK(s.to_uint() == 6);
    CHECK(s[1]);
    CHECK_FALSE(s[0]);
    CHECK(BitString::from_uint(0, 64).to_string() == std::string(64, '0'));
}

TEST_CASE("ordering is lexicographic") {
    CHECK(BitString::parse("0011") < BitString::parse("0100"));
    CHECK(BitString::parse(std::string(64, '1') + "0") < BitString::parse(std::string(64, '1') + "1"));
    for (std::uint64_t v = 0; v + 1 < 256; ++v) {
        CHECK(BitString::from_uint(v, 8) < BitString::from_uint(v + 1, 8));
    }
}

TEST_CASE("parse rejects bad characters") {
    CHECK_THROWS_AS(BitString::parse("01x1"), ParseError);
}

TEST_CASE("with_flipped") {
    const std::vector<std::size_t> pos{0, 3};
    CHECK(BitString::parse("0000").with_flipped(pos) == BitString::parse("1001"));
    const std::vector<std::size_t> bad{4};
    CHECK_THROWS_AS(BitString::parse("0000").with_flipped(bad), ContractViolation);
}

TEST_CASE("block_slice examples") {
    const BlockLayout layout{2, 4, 2};
    const auto w = BitString::parse("0000111101");
    CHECK(layout.total_length() == 10);
    CHECK(block_slice(w, layout, std::size_t{1}) == BitString::parse("1111"));
    CHECK(block_slice(w, layout, std::size_t{0}) == BitString::parse("0000"));
    CHECK(block_slice(w, layout, balance_block) == BitString::parse("01"));
    const std::vector<BitString> parts{block_slice(w, layout, std::size_t{0}), block_slice(w, layout, std::size_t{1}),
                                       block_slice(w, layout, balance_block)};
    CHECK(concat_blocks(parts) == w);
    CHECK_THROWS_AS(block_slice(w, layout, std::size_t{2}), ContractViolation);
    CHECK_THROWS_AS(block_slice(BitString::zeros(9), layout, std::size_t{0}), ContractViolation);
}

TEST_CASE("concat examples") {
    const std::vector<BitString> two{BitString::parse("01"), BitString::parse("10")};
    CHECK(concat_blocks(two) == BitString::parse("0110"));
    const std::vector<BitString> one{BitString::parse("101")};
    CHECK(concat_blocks(one) == one[0]);
}

TEST_CASE("slice and concat round-trip over layouts") {
    std::mt19937_64 rng(11);
    for (std::size_t k = 1; k <= 5; ++k) {
        for (const std::size_t block : {4u, 16u, 20u, 64u, 100u}) {
            for (const std::size_t bal : {0u, 2u, 4u, 11u}) {
                const BlockLayout layout{k, block, bal};
                const auto w = random_string(layout.total_length(), rng);
                std::vector<BitString> parts;
                for (std::size_t i = 0; i < k; ++i) parts.push_back(block_slice(w, layout, i));
                parts.push_back(block_slice(w, layout, balance_block));
                CHECK(concat_blocks(parts) == w);
            }
        }
    }
}

TEST_CASE("packed strings") {
    PackedStrings rows(70, 0);
    const auto a = BitString::parse(std::string(35, '1') + std::string(35, '0'));
    rows.push_back(a);
    rows.push_back(complement(a));
    REQUIRE(rows.size() == 2);
    CHECK(rows.at(0) == a);
    CHECK(rows.at(1) == complement(a));
    CHECK(hamming_distance_words(rows.row(0), rows.row(1)) == 70);
    CHECK_THROWS_AS(rows.push_back(BitString::zeros(3)), ContractViolation);
}

TEST_CASE("display indices are one-based") {
    CHECK(display_index(0) == 1);
}
