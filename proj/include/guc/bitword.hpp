#pragma once

// Fixed-width bit words with circular rotation, popcount, circular run
// analysis and Hamming distance. Bit index 0 is the most significant bit,
// i.e. the leftmost character of the text form.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "guc/error.hpp"

namespace guc {

class Codeword {
public:
    using block_type = std::uint64_t;
    static constexpr std::size_t block_bits = 64;

    /// All-zero word of the given width. Width must be positive.
    explicit Codeword(std::size_t width) : width_(width), blocks_(block_count(width), 0) {
        if (width == 0) throw std::invalid_argument("Codeword: width must be positive");
    }

    static Codeword from_text(std::string_view text) {
        if (text.empty()) throw invalid_text("codeword text is empty");
        Codeword w(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            switch (text[i]) {
            case '0': break;
            case '1': w.set(i); break;
            default:
                throw invalid_text("codeword text has a character other than '0'/'1' at position " +
                                   std::to_string(i));
            }
        }
        return w;
    }

    /// Word whose text form is the width-bit binary representation of `value`.
    /// Bits of `value` above `width` are dropped.
    static Codeword from_integer(std::size_t width, std::uint64_t value) {
        Codeword w(width);
        w.blocks_[0] = value;
        w.clear_padding();
        return w;
    }

    std::string to_text() const {
        std::string s(width_, '0');
        for (std::size_t i = 0; i < width_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

    /// Low 64 bits of the word read as a binary number (the whole word when width <= 64).
    std::uint64_t to_integer() const noexcept { return blocks_[0]; }

    std::size_t width() const noexcept { return width_; }

    bool test(std::size_t i) const noexcept {
        const std::size_t p = width_ - 1 - i;
        return (blocks_[p / block_bits] >> (p % block_bits)) & 1U;
    }

    void set(std::size_t i, bool on = true) noexcept {
        const std::size_t p = width_ - 1 - i;
        const block_type m = block_type{1} << (p % block_bits);
        if (on)
            blocks_[p / block_bits] |= m;
        else
            blocks_[p / block_bits] &= ~m;
    }

    /// Sets `length` consecutive bits starting at index `start` (MSB-first, no wrap).
    void set_range(std::size_t start, std::size_t length) noexcept {
        for (std::size_t i = start; i < start + length; ++i) set(i);
    }

    std::size_t weight() const noexcept {
        std::size_t c = 0;
        for (auto b : blocks_) c += static_cast<std::size_t>(std::popcount(b));
        return c;
    }

    bool none() const noexcept {
        return std::all_of(blocks_.begin(), blocks_.end(), [](block_type b) { return b == 0; });
    }

    Codeword rotated_left(std::size_t s) const {
        s %= width_;
        if (s == 0) return *this;
        Codeword out(width_);
        if (width_ <= block_bits) {
            const block_type x = blocks_[0];
            out.blocks_[0] = (x << s) | (x >> (width_ - s));
            out.clear_padding();
            return out;
        }
        for (std::size_t i = 0; i < width_; ++i)
            if (test((i + s) % width_)) out.set(i);
        return out;
    }

    friend std::size_t hamming_distance(const Codeword& a, const Codeword& b) {
        if (a.width_ != b.width_)
            throw width_mismatch("hamming: widths differ (" + std::to_string(a.width_) + " vs " +
                                 std::to_string(b.width_) + ")");
        std::size_t d = 0;
        for (std::size_t i = 0; i < a.blocks_.size(); ++i)
            d += static_cast<std::size_t>(std::popcount(a.blocks_[i] ^ b.blocks_[i]));
        return d;
    }

    friend bool operator==(const Codeword&, const Codeword&) = default;

    std::size_t hash() const noexcept {
        std::size_t h = std::hash<std::size_t>{}(width_);
        for (auto b : blocks_) h ^= std::hash<block_type>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    static std::size_t block_count(std::size_t width) noexcept {
        return width == 0 ? 1 : (width + block_bits - 1) / block_bits;
    }

    // Bits beyond width in the top block stay zero; weight and equality rely on it.
    void clear_padding() noexcept {
        const std::size_t used = width_ % block_bits;
        if (used != 0) blocks_.back() &= (block_type{1} << used) - 1;
    }

    std::size_t width_;
    std::vector<block_type> blocks_;
};

/// Maximal run of equal bits on the circular word.
struct Run {
    bool bit;
    std::size_t start;
    std::size_t length;

    friend bool operator==(const Run&, const Run&) = default;
};

inline Codeword word_from_text(std::string_view text) { return Codeword::from_text(text); }

inline std::string word_to_text(const Codeword& w) { return w.to_text(); }

/// Circular left rotation: bit i of the result is bit (i + s) mod width of `w`.
inline Codeword rotate_left(const Codeword& w, std::size_t s) { return w.rotated_left(s); }

inline std::size_t weight(const Codeword& w) noexcept { return w.weight(); }

inline std::size_t hamming(const Codeword& a, const Codeword& b) { return hamming_distance(a, b); }

/// Maximal circular runs, starting with the run that contains index 0. A word
/// whose first and last bits agree has those segments merged into one run whose
/// start lies near the end of the word.
inline std::vector<Run> circular_runs(const Codeword& w) {
    const std::size_t n = w.width();
    std::vector<Run> runs;
    std::size_t i = 0;
    while (i < n) {
        const bool b = w.test(i);
        std::size_t j = i + 1;
        while (j < n && w.test(j) == b) ++j;
        runs.push_back({b, i, j - i});
        i = j;
    }
    if (runs.size() > 1 && runs.front().bit == runs.back().bit) {
        Run merged{runs.back().bit, runs.back().start, runs.back().length + runs.front().length};
        runs.pop_back();
        runs.front() = merged;
    }
    return runs;
}

}  // namespace guc

template <>
struct std::hash<guc::Codeword> {
    std::size_t operator()(const guc::Codeword& w) const noexcept { return w.hash(); }
};
