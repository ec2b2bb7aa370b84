#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cslab {

/**
 * Immutable fixed-length binary string packed into 64-bit words.
 *
 * Position 0 is the first character of the text form and lives in the most
 * significant bit of word 0, so comparing the word sequences numerically is
 * the same as comparing the strings lexicographically. Bits past `length()`
 * in the last word are always zero.
 *
 * Positions are 0-indexed throughout the code. Reports that print block
 * numbers use 1-indexed labels via `display_index`.
 */
class BitString {
public:
    static constexpr std::size_t word_bits = 64;

    BitString() = default;

    static BitString zeros(std::size_t length);
    static BitString ones(std::size_t length);
    /// `length` <= 64; the most significant of the `length` low bits of `value` becomes position 0.
    static BitString from_uint(std::uint64_t value, std::size_t length);
    /// Trailing bits beyond `length` are cleared.
    static BitString from_words(std::size_t length, std::vector<std::uint64_t> words);
    /// Parses a 0/1 character sequence. Throws ParseError on any other character.
    static BitString parse(std::string_view text);

    std::size_t length() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }
    bool operator[](std::size_t pos) const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Inverse of from_uint; requires length() <= 64.
    std::uint64_t to_uint() const;
    std::string to_string() const;

    BitString with_flipped(std::span<const std::size_t> positions) const;

    friend bool operator==(const BitString&, const BitString&) = default;
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

    static std::size_t words_for(std::size_t length) noexcept {
        return (length + word_bits - 1) / word_bits;
    }

private:
    BitString(std::size_t length, std::vector<std::uint64_t> words);

    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

std::size_t hamming_distance(const BitString& a, const BitString& b);
std::size_t hamming_weight(const BitString& a);
BitString complement(const BitString& a);

/// Word-level distance used by the scan kernels; spans must have equal size.
std::size_t hamming_distance_words(std::span<const std::uint64_t> a,
                                   std::span<const std::uint64_t> b) noexcept;

BitString concat_blocks(std::span<const BitString> parts);

/// Block numbers as printed in reports (block 0 prints as 1).
constexpr std::size_t display_index(std::size_t zero_based) noexcept { return zero_based + 1; }

/**
 * Position layout of a reduced instance: `k` vertex blocks of `block_len`
 * bits followed by a balancing block of `balance_len` bits.
 */
struct BlockLayout {
    std::size_t k = 0;
    std::size_t block_len = 0;
    std::size_t balance_len = 0;

    std::size_t total_length() const noexcept { return k * block_len + balance_len; }
    /// First position of vertex block `i` (0-indexed).
    std::size_t block_offset(std::size_t i) const noexcept { return i * block_len; }
    std::size_t balance_offset() const noexcept { return k * block_len; }

    friend bool operator==(const BlockLayout&, const BlockLayout&) = default;
};

struct BalanceBlock {
    friend bool operator==(BalanceBlock, BalanceBlock) = default;
};
inline constexpr BalanceBlock balance_block{};

/// A vertex block index (0-indexed) or the balancing block.
using BlockRef = std::variant<std::size_t, BalanceBlock>;

BitString block_slice(const BitString& w, const BlockLayout& layout, BlockRef which);

/**
 * A flat table of equal-length strings, `stride()` words per row.
 *
 * Used for constraint families too large to hold as individual BitString
 * objects. Rows are written once during construction and read afterwards.
 */
class PackedStrings {
public:
    PackedStrings() = default;
    PackedStrings(std::size_t length, std::size_t count);

    std::size_t length() const noexcept { return length_; }
    std::size_t stride() const noexcept { return stride_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    std::span<const std::uint64_t> row(std::size_t i) const noexcept {
        return {words_.data() + i * stride_, stride_};
    }
    std::span<std::uint64_t> mutable_row(std::size_t i) noexcept {
        return {words_.data() + i * stride_, stride_};
    }
    std::span<const std::uint64_t> data() const noexcept { return words_; }

    BitString at(std::size_t i) const;
    void push_back(const BitString& s);
    void reserve(std::size_t count) { words_.reserve(count * stride_); }
    std::size_t memory_bytes() const noexcept { return words_.capacity() * sizeof(std::uint64_t); }

private:
    std::size_t length_ = 0;
    std::size_t stride_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

namespace detail {

/// Reads `n` (1..64) bits starting at `offset`; the first bit read is the most significant of the result.
std::uint64_t read_bits(std::span<const std::uint64_t> words, std::size_t offset, unsigned n) noexcept;
/// ORs the `n` (1..64) low bits of `value` into `words` starting at `offset`.
void or_bits(std::span<std::uint64_t> words, std::size_t offset, std::uint64_t value, unsigned n) noexcept;
/// ORs all of `src` into `dst` starting at bit `offset`.
void or_string(std::span<std::uint64_t> dst, std::size_t offset, const BitString& src) noexcept;
/// Sets `n` consecutive bits starting at `offset`.
void set_run(std::span<std::uint64_t> dst, std::size_t offset, std::size_t n) noexcept;

}  // namespace detail

}  // namespace cslab
