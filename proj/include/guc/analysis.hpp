#pragma once

// Distance profiles, count comparison between FixedK and Guc, and exhaustive
// verification of the codecs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "guc/bitword.hpp"
#include "guc/codecs.hpp"

namespace guc {

struct DistanceRecord {
    std::uint64_t n2;
    std::size_t distance;

    friend bool operator==(const DistanceRecord&, const DistanceRecord&) = default;
};

struct CountRecord {
    std::size_t n;
    std::uint64_t fixed_k_count;
    std::uint64_t guc_count;

    friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

struct TableRow {
    std::uint64_t value;
    std::string code;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct VerificationReport {
    SchemeId scheme;
    CodeParams params;
    std::uint64_t total_codewords = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> duplicates;  // (earlier, later) value
    std::vector<std::uint64_t> roundtrip_failures;
    std::vector<std::uint64_t> oracle_mismatches;  // values the search decoder disagrees on

    bool passed() const {
        return duplicates.empty() && roundtrip_failures.empty() && oracle_mismatches.empty() &&
               total_codewords == max_value(scheme, params) + 1;
    }
};

/// Exhaustive verification is limited to widths up to this.
inline constexpr std::size_t max_verify_width = 24;

/// Every cycle position of the scheme, in ascending value order.
inline std::vector<CyclePosition> all_positions(SchemeId scheme, CodeParams p) {
    validate_params(scheme, p);
    std::vector<CyclePosition> out;
    switch (scheme) {
    case SchemeId::IncreasingK:
        for (std::size_t c = 1; c <= p.n; ++c)
            for (std::size_t r = 0; r <= p.n - c; ++r) out.push_back({c, r, false});
        break;
    case SchemeId::FixedK:
        for (std::size_t j = 0; j + 2 <= p.n - p.k; ++j)
            for (std::size_t r = 0; r <= p.n - p.k; ++r) out.push_back({j, r, false});
        break;
    case SchemeId::Guc:
        for (std::size_t j = 0; j + 2 <= p.n - p.k; ++j)
            for (std::size_t r = 0; r < p.n; ++r) out.push_back({j, r, false});
        out.push_back({p.n - p.k - 1, 0, true});
        break;
    }
    return out;
}

/// Reference decoder: tries every cycle position and compares the generated
/// word. O(max_value * n) per call; meant for cross-checking try_decode.
inline std::optional<std::uint64_t> search_decode(SchemeId scheme, CodeParams p, const Codeword& w) {
    validate_params(scheme, p);
    if (w.width() != p.n) throw width_mismatch("search_decode: width mismatch");
    if (w.none()) return 0;
    for (const CyclePosition& pos : all_positions(scheme, p)) {
        const Codeword candidate =
            rotate_left(base_pattern(scheme, p, {pos.cycle, 0, pos.terminal}), pos.rotation);
        if (candidate == w) return position_to_value(scheme, p, pos);
    }
    return std::nullopt;
}

inline std::vector<TableRow> enumerate_table(SchemeId scheme, CodeParams p) {
    const std::uint64_t top = max_value(scheme, p);
    std::vector<TableRow> rows;
    rows.reserve(top + 1);
    for (std::uint64_t v = 0; v <= top; ++v) rows.push_back({v, encode(scheme, p, v).to_text()});
    return rows;
}

inline std::vector<DistanceRecord> distance_profile(SchemeId scheme, CodeParams p, std::uint64_t n1,
                                                    std::uint64_t n2_max) {
    const std::uint64_t top = max_value(scheme, p);
    if (n1 > top || n2_max > top)
        throw value_out_of_range("distance_profile: values must lie in 0.." + std::to_string(top));
    const Codeword ref = encode(scheme, p, n1);
    std::vector<DistanceRecord> out;
    out.reserve(n2_max + 1);
    for (std::uint64_t n2 = 0; n2 <= n2_max; ++n2) out.push_back({n2, hamming(ref, encode(scheme, p, n2))});
    return out;
}

inline std::vector<CountRecord> count_comparison(std::size_t k, std::size_t n_min, std::size_t n_max) {
    if (k < 2) throw invalid_params("count_comparison: k must be at least 2");
    if (n_min < k + 2) throw invalid_params("count_comparison: n_min must be at least k+2");
    if (n_max < n_min) throw invalid_params("count_comparison: n_max must be at least n_min");
    std::vector<CountRecord> out;
    for (std::size_t n = n_min; n <= n_max; ++n)
        out.push_back({n, max_value(SchemeId::FixedK, {n, k}), max_value(SchemeId::Guc, {n, k})});
    return out;
}

/// Encodes every value, checks the codewords are pairwise distinct, decodes
/// each one, and cross-checks the run decoder against search_decode.
inline VerificationReport verify_scheme(SchemeId scheme, CodeParams p) {
    validate_params(scheme, p);
    if (p.n > max_verify_width)
        throw invalid_params("verify: n must be at most " + std::to_string(max_verify_width));
    VerificationReport report{scheme, p, 0, {}, {}, {}};
    const std::uint64_t top = max_value(scheme, p);
    std::unordered_map<Codeword, std::uint64_t> seen;
    for (std::uint64_t v = 0; v <= top; ++v) {
        const Codeword w = encode(scheme, p, v);
        auto [it, inserted] = seen.emplace(w, v);
        if (!inserted) report.duplicates.emplace_back(it->second, v);
        const auto decoded = try_decode(scheme, p, w);
        if (decoded != v) report.roundtrip_failures.push_back(v);
        if (search_decode(scheme, p, w) != decoded) report.oracle_mismatches.push_back(v);
    }
    report.total_codewords = seen.size();
    return report;
}

}  // namespace guc
