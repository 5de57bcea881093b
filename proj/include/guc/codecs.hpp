#pragma once

// Encoders and decoders for three generalizations of unary coding over
// n-bit words:
//
//   IncreasingK  a contiguous block of c ones (c = 1..n) shifted left without
//                wrap; values 0..n(n+1)/2.
//   FixedK       a k-block plus, from the second cycle on, a single 1 kept j
//                zeros to its left; each cycle is rotated r = 0..n-k times.
//                Values 0..(n-k)^2-1.
//   Guc          same cycle shapes as FixedK, but every cycle runs through all
//                n circular rotations, followed by one terminal word
//                1 0^(n-k-1) 1^k. Values 0..n(n-k-1)+1.
//
// Value 0 is the all-zero word in every scheme. Cycle j of FixedK/Guc starts
// at value j*L + 1 where L is the cycle length (n-k+1 or n).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "guc/bitword.hpp"
#include "guc/error.hpp"

namespace guc {

enum class SchemeId { IncreasingK, FixedK, Guc };

inline std::string_view scheme_name(SchemeId s) noexcept {
    switch (s) {
    case SchemeId::IncreasingK: return "increasing";
    case SchemeId::FixedK: return "fixed";
    case SchemeId::Guc: return "guc";
    }
    return "?";
}

inline std::optional<SchemeId> parse_scheme(std::string_view name) noexcept {
    if (name == "increasing") return SchemeId::IncreasingK;
    if (name == "fixed") return SchemeId::FixedK;
    if (name == "guc") return SchemeId::Guc;
    return std::nullopt;
}

/// n is the word width; k the length of the contiguous 1-block (unused by IncreasingK).
struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Where a nonzero value sits in its scheme's enumeration.
///
/// For FixedK and Guc, `cycle` is the number of zeros separating the extra 1
/// from the k-block (0 means no extra 1) and `rotation` the number of circular
/// left rotations of the cycle's base pattern. `terminal` marks the final Guc
/// word. For IncreasingK, `cycle` holds the block length c and `rotation` the
/// (non-circular) left shift.
struct CyclePosition {
    std::size_t cycle = 0;
    std::size_t rotation = 0;
    bool terminal = false;

    friend bool operator==(const CyclePosition&, const CyclePosition&) = default;
};

// Widths beyond this would overflow the 64-bit count formulas.
inline constexpr std::size_t max_supported_width = std::size_t{1} << 20;

inline void validate_params(SchemeId scheme, CodeParams p) {
    if (p.n < 1) throw invalid_params("n must be at least 1");
    if (p.n > max_supported_width)
        throw invalid_params("n must be at most " + std::to_string(max_supported_width));
    if (scheme == SchemeId::IncreasingK) return;
    if (p.k < 2)
        throw invalid_params("k must be at least 2 (got " + std::to_string(p.k) + ")");
    if (p.n < 4 || p.k > p.n - 2)
        throw invalid_params("k must be at most n-2 (got n=" + std::to_string(p.n) +
                             ", k=" + std::to_string(p.k) + ")");
}

inline bool params_valid(SchemeId scheme, CodeParams p) noexcept {
    try {
        validate_params(scheme, p);
        return true;
    } catch (const invalid_params&) {
        return false;
    }
}

/// Largest encodable value; the encodable range is 0..max_value.
inline std::uint64_t max_value(SchemeId scheme, CodeParams p) {
    validate_params(scheme, p);
    const std::uint64_t n = p.n, k = p.k;
    switch (scheme) {
    case SchemeId::IncreasingK: return n * (n + 1) / 2;
    case SchemeId::FixedK: return (n - k) * (n - k) - 1;
    case SchemeId::Guc: return n * (n - k - 1) + 1;
    }
    return 0;
}

namespace detail {

// Values in one FixedK/Guc cycle.
inline std::uint64_t cycle_length(SchemeId scheme, CodeParams p) noexcept {
    return scheme == SchemeId::Guc ? p.n : p.n - p.k + 1;
}

// Number of values encoded by IncreasingK blocks shorter than c.
inline std::uint64_t increasing_prefix(std::uint64_t n, std::uint64_t c) noexcept {
    return (c - 1) * (n + 1) - (c - 1) * c / 2;
}

inline void check_position(SchemeId scheme, CodeParams p, CyclePosition pos) {
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument("invalid cycle position for " + std::string(scheme_name(scheme)) +
                                    ": " + why);
    };
    switch (scheme) {
    case SchemeId::IncreasingK:
        if (pos.terminal) bad("increasing scheme has no terminal word");
        if (pos.cycle < 1 || pos.cycle > p.n) bad("block length out of 1..n");
        if (pos.rotation > p.n - pos.cycle) bad("shift exceeds n-c");
        return;
    case SchemeId::FixedK:
        if (pos.terminal) bad("fixed scheme has no terminal word");
        if (pos.cycle > p.n - p.k - 2) bad("cycle out of 0..n-k-2");
        if (pos.rotation > p.n - p.k) bad("rotation out of 0..n-k");
        return;
    case SchemeId::Guc:
        if (pos.terminal) {
            if (pos.cycle != p.n - p.k - 1 || pos.rotation != 0)
                bad("terminal position must be (n-k-1, 0)");
            return;
        }
        if (pos.cycle > p.n - p.k - 2) bad("cycle out of 0..n-k-2");
        if (pos.rotation > p.n - 1) bad("rotation out of 0..n-1");
        return;
    }
}

}  // namespace detail

/// Rotation-0 word of the cycle containing `pos`, right-aligned:
/// 0..0 1^c (IncreasingK), 0..0 1^k (cycle 0), 0..0 1 0^j 1^k (cycle j),
/// 1 0^(n-k-1) 1^k (Guc terminal). `pos.rotation` must be 0.
inline Codeword base_pattern(SchemeId scheme, CodeParams p, CyclePosition pos) {
    validate_params(scheme, p);
    if (pos.rotation != 0) throw std::invalid_argument("base_pattern: rotation must be 0");
    detail::check_position(scheme, p, pos);
    Codeword w(p.n);
    if (scheme == SchemeId::IncreasingK) {
        w.set_range(p.n - pos.cycle, pos.cycle);
        return w;
    }
    w.set_range(p.n - p.k, p.k);
    if (pos.cycle > 0) w.set(p.n - p.k - 1 - pos.cycle);
    return w;
}

inline CyclePosition value_to_position(SchemeId scheme, CodeParams p, std::uint64_t value) {
    const std::uint64_t top = max_value(scheme, p);
    if (value < 1 || value > top)
        throw value_out_of_range("value " + std::to_string(value) + " has no cycle position (valid 1.." +
                                 std::to_string(top) + ")");
    if (scheme == SchemeId::IncreasingK) {
        std::uint64_t c = 1;
        while (detail::increasing_prefix(p.n, c + 1) < value) ++c;
        return {c, value - 1 - detail::increasing_prefix(p.n, c), false};
    }
    if (scheme == SchemeId::Guc && value == top) return {p.n - p.k - 1, 0, true};
    const std::uint64_t len = detail::cycle_length(scheme, p);
    return {(value - 1) / len, (value - 1) % len, false};
}

inline std::uint64_t position_to_value(SchemeId scheme, CodeParams p, CyclePosition pos) {
    validate_params(scheme, p);
    detail::check_position(scheme, p, pos);
    if (scheme == SchemeId::IncreasingK) return detail::increasing_prefix(p.n, pos.cycle) + pos.rotation + 1;
    if (pos.terminal) return max_value(scheme, p);
    return pos.cycle * detail::cycle_length(scheme, p) + pos.rotation + 1;
}

inline Codeword encode(SchemeId scheme, CodeParams p, std::uint64_t value) {
    const std::uint64_t top = max_value(scheme, p);
    if (value > top)
        throw value_out_of_range("value " + std::to_string(value) + " out of range 0.." + std::to_string(top));
    if (value == 0) return Codeword(p.n);
    const CyclePosition pos = value_to_position(scheme, p, value);
    Codeword base = base_pattern(scheme, p, {pos.cycle, 0, pos.terminal});
    // r <= n-c for IncreasingK, so the circular rotation never wraps there.
    return rotate_left(base, pos.rotation);
}

/// Run-structure decoder. Returns nullopt for words the encoder never emits;
/// throws on invalid params or a width other than n.
inline std::optional<std::uint64_t> try_decode(SchemeId scheme, CodeParams p, const Codeword& w) {
    validate_params(scheme, p);
    if (w.width() != p.n)
        throw width_mismatch("decode: word width " + std::to_string(w.width()) + " != n=" +
                             std::to_string(p.n));
    const std::size_t n = p.n, k = p.k;
    const std::size_t ones = w.weight();
    if (ones == 0) return 0;

    const std::vector<Run> runs = circular_runs(w);
    std::vector<std::size_t> one_runs;  // indices into runs
    for (std::size_t i = 0; i < runs.size(); ++i)
        if (runs[i].bit) one_runs.push_back(i);

    if (scheme == SchemeId::IncreasingK) {
        if (one_runs.size() != 1) return std::nullopt;
        const Run& block = runs[one_runs[0]];
        if (block.start + block.length > n) return std::nullopt;  // wraps
        return position_to_value(scheme, p, {block.length, n - block.length - block.start, false});
    }

    if (ones == k && one_runs.size() == 1) {
        const std::size_t r = (2 * n - k - runs[one_runs[0]].start) % n;
        if (scheme == SchemeId::FixedK && r > n - k) return std::nullopt;
        return position_to_value(scheme, p, {0, r, false});
    }

    if (ones != k + 1) return std::nullopt;

    if (one_runs.size() == 1) {
        if (scheme == SchemeId::Guc && w == base_pattern(scheme, p, {n - k - 1, 0, true}))
            return max_value(scheme, p);
        return std::nullopt;
    }

    if (one_runs.size() != 2) return std::nullopt;
    // Two 1-runs of lengths 1 and k (k >= 2, so they are distinguishable),
    // separated by two 0-runs. The gap that follows the single 1 is the cycle.
    const std::size_t single = runs[one_runs[0]].length == 1 ? one_runs[0] : one_runs[1];
    if (runs[single].length != 1) return std::nullopt;
    const std::size_t gap = runs[(single + 1) % runs.size()].length;
    const std::size_t base_index = n - k - 1 - gap;
    const std::size_t r = (base_index + n - runs[single].start) % n;
    if (scheme == SchemeId::FixedK && r > n - k) return std::nullopt;
    return position_to_value(scheme, p, {gap, r, false});
}

inline std::uint64_t decode(SchemeId scheme, CodeParams p, const Codeword& w) {
    if (auto v = try_decode(scheme, p, w)) return *v;
    throw invalid_codeword("invalid codeword " + w.to_text() + " for scheme " +
                           std::string(scheme_name(scheme)));
}

}  // namespace guc
