#include "cslab/bitstring.hpp"

#include <algorithm>
#include <bit>

#include "cslab/error.hpp"

namespace cslab {

namespace {

std::uint64_t tail_mask(std::size_t length) {
    const std::size_t used = length % BitString::word_bits;
    return used == 0 ? ~std::uint64_t{0} : ~std::uint64_t{0} << (BitString::word_bits - used);
}

void require_same_length(const BitString& a, const BitString& b, const char* what) {
    if (a.length() != b.length()) {
        throw ContractViolation(std::string(what) + ": length mismatch (" + std::to_string(a.length()) +
                                " vs " + std::to_string(b.length()) + ")");
    }
}

}  // namespace

BitString::BitString(std::size_t length, std::vector<std::uint64_t> words)
    : length_(length), words_(std::move(words)) {
    if (!words_.empty()) {
        words_.back() &= tail_mask(length_);
    }
}

BitString BitString::zeros(std::size_t length) {
    return BitString(length, std::vector<std::uint64_t>(words_for(length), 0));
}

BitString BitString::ones(std::size_t length) {
    return BitString(length, std::vector<std::uint64_t>(words_for(length), ~std::uint64_t{0}));
}

BitString BitString::from_uint(std::uint64_t value, std::size_t length) {
    if (length > word_bits) {
        throw ContractViolation("from_uint: length " + std::to_string(length) + " exceeds 64");
    }
    if (length == 0) {
        return BitString();
    }
    return BitString(length, {value << (word_bits - length)});
}

BitString BitString::from_words(std::size_t length, std::vector<std::uint64_t> words) {
    if (words.size() != words_for(length)) {
        throw ContractViolation("from_words: expected " + std::to_string(words_for(length)) + " words");
    }
    return BitString(length, std::move(words));
}

BitString BitString::parse(std::string_view text) {
    std::vector<std::uint64_t> words(words_for(text.size()), 0);
    for (std::size_t p = 0; p < text.size(); ++p) {
        const char c = text[p];
        if (c == '1') {
            words[p / word_bits] |= std::uint64_t{1} << (word_bits - 1 - p % word_bits);
        } else if (c != '0') {
            throw ParseError("invalid character '" + std::string(1, c) + "' in bit string at position " +
                             std::to_string(p + 1));
        }
    }
    return BitString(text.size(), std::move(words));
}

bool BitString::operator[](std::size_t pos) const {
    if (pos >= length_) {
        throw ContractViolation("bit position " + std::to_string(pos) + " out of range");
    }
    return (words_[pos / word_bits] >> (word_bits - 1 - pos % word_bits)) & 1U;
}

std::uint64_t BitString::to_uint() const {
    if (length_ > word_bits) {
        throw ContractViolation("to_uint: length exceeds 64");
    }
    if (length_ == 0) {
        return 0;
    }
    return words_[0] >> (word_bits - length_);
}

std::string BitString::to_string() const {
    std::string out(length_, '0');
    for (std::size_t p = 0; p < length_; ++p) {
        if ((words_[p / word_bits] >> (word_bits - 1 - p % word_bits)) & 1U) {
            out[p] = '1';
        }
    }
    return out;
}

BitString BitString::with_flipped(std::span<const std::size_t> positions) const {
    auto words = words_;
    for (const std::size_t p : positions) {
        if (p >= length_) {
            throw ContractViolation("with_flipped: position " + std::to_string(p) + " out of range");
        }
        words[p / word_bits] ^= std::uint64_t{1} << (word_bits - 1 - p % word_bits);
    }
    return BitString(length_, std::move(words));
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    if (auto c = std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                                        b.words_.end());
        c != 0) {
        return c;
    }
    return a.length_ <=> b.length_;
}

std::size_t hamming_distance_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) noexcept {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
    }
    return d;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
    require_same_length(a, b, "hamming_distance");
    return hamming_distance_words(a.words(), b.words());
}

std::size_t hamming_weight(const BitString& a) {
    std::size_t w = 0;
    for (const auto word : a.words()) {
        w += static_cast<std::size_t>(std::popcount(word));
    }
    return w;
}

BitString complement(const BitString& a) {
    std::vector<std::uint64_t> words(a.words().begin(), a.words().end());
    for (auto& w : words) {
        w = ~w;
    }
    return BitString::from_words(a.length(), std::move(words));
}

BitString concat_blocks(std::span<const BitString> parts) {
    std::size_t total = 0;
    for (const auto& p : parts) {
        total += p.length();
    }
    std::vector<std::uint64_t> words(BitString::words_for(total), 0);
    std::size_t offset = 0;
    for (const auto& p : parts) {
        detail::or_string(words, offset, p);
        offset += p.length();
    }
    return BitString::from_words(total, std::move(words));
}

BitString block_slice(const BitString& w, const BlockLayout& layout, BlockRef which) {
    if (w.length() != layout.total_length()) {
        throw ContractViolation("block_slice: string length " + std::to_string(w.length()) +
                                " does not match layout length " + std::to_string(layout.total_length()));
    }
    std::size_t offset = 0;
    std::size_t len = 0;
    if (const auto* i = std::get_if<std::size_t>(&which)) {
        if (*i >= layout.k) {
            throw ContractViolation("block_slice: block " + std::to_string(display_index(*i)) + " not in [1, " +
                                    std::to_string(layout.k) + "]");
        }
        offset = layout.block_offset(*i);
        len = layout.block_len;
    } else {
        offset = layout.balance_offset();
        len = layout.balance_len;
    }
    std::vector<std::uint64_t> out(BitString::words_for(len), 0);
    for (std::size_t done = 0; done < len; done += BitString::word_bits) {
        const auto n = static_cast<unsigned>(std::min<std::size_t>(BitString::word_bits, len - done));
        detail::or_bits(out, done, detail::read_bits(w.words(), offset + done, n), n);
    }
    return BitString::from_words(len, std::move(out));
}

PackedStrings::PackedStrings(std::size_t length, std::size_t count)
    : length_(length), stride_(BitString::words_for(length)), count_(count), words_(count * stride_, 0) {}

BitString PackedStrings::at(std::size_t i) const {
    if (i >= count_) {
        throw ContractViolation("PackedStrings::at: row " + std::to_string(i) + " out of range");
    }
    auto r = row(i);
    return BitString::from_words(length_, {r.begin(), r.end()});
}

void PackedStrings::push_back(const BitString& s) {
    if (count_ == 0 && words_.empty() && length_ == 0) {
        length_ = s.length();
        stride_ = BitString::words_for(length_);
    }
    if (s.length() != length_) {
        throw ContractViolation("PackedStrings::push_back: length mismatch");
    }
    words_.insert(words_.end(), s.words().begin(), s.words().end());
    ++count_;
}

namespace detail {

std::uint64_t read_bits(std::span<const std::uint64_t> words, std::size_t offset, unsigned n) noexcept {
    const std::size_t w = offset / BitString::word_bits;
    const unsigned b = offset % BitString::word_bits;
    std::uint64_t hi = words[w] << b;
    if (b != 0 && b + n > BitString::word_bits) {
        hi |= words[w + 1] >> (BitString::word_bits - b);
    }
    return n == BitString::word_bits ? hi : hi >> (BitString::word_bits - n);
}

void or_bits(std::span<std::uint64_t> words, std::size_t offset, std::uint64_t value, unsigned n) noexcept {
    if (n == 0) {
        return;
    }
    const std::size_t w = offset / BitString::word_bits;
    const unsigned b = offset % BitString::word_bits;
    const std::uint64_t aligned = n == BitString::word_bits ? value : value << (BitString::word_bits - n);
    words[w] |= aligned >> b;
    if (b != 0 && b + n > BitString::word_bits) {
        words[w + 1] |= aligned << (BitString::word_bits - b);
    }
}

void or_string(std::span<std::uint64_t> dst, std::size_t offset, const BitString& src) noexcept {
    const auto len = src.length();
    for (std::size_t done = 0; done < len; done += BitString::word_bits) {
        const auto n = static_cast<unsigned>(std::min<std::size_t>(BitString::word_bits, len - done));
        or_bits(dst, offset + done, read_bits(src.words(), done, n), n);
    }
}

void set_run(std::span<std::uint64_t> dst, std::size_t offset, std::size_t n) noexcept {
    for (std::size_t done = 0; done < n; done += BitString::word_bits) {
        const auto chunk = static_cast<unsigned>(std::min<std::size_t>(BitString::word_bits, n - done));
        const std::uint64_t value = chunk == BitString::word_bits ? ~std::uint64_t{0}
                                                                  : (std::uint64_t{1} << chunk) - 1;
        or_bits(dst, offset + done, value, chunk);
    }
}

}  // namespace detail

}  // namespace cslab
