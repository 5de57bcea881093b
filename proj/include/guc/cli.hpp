#pragma once

// Command-line front end. Kept header-only so the test suites can drive it
// in-process with string streams; tools/guc.cpp is a thin main() around run_cli.

#include <charconv>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "guc/analysis.hpp"
#include "guc/codecs.hpp"

namespace guc::cli {

enum class OutputFormat { Text, Csv, Json };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format '" + s + "' (expected text, csv or json)");
}

inline void render_table(const std::vector<TableRow>& rows, OutputFormat fmt, std::ostream& out) {
    switch (fmt) {
    case OutputFormat::Text:
        for (const auto& r : rows) out << r.value << '\t' << r.code << '\n';
        break;
    case OutputFormat::Csv:
        out << "value,code\n";
        for (const auto& r : rows) out << r.value << ',' << r.code << '\n';
        break;
    case OutputFormat::Json: {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back({{"value", r.value}, {"code", r.code}});
        out << arr.dump(2) << '\n';
        break;
    }
    }
}

inline void render_distances(const std::vector<DistanceRecord>& rows, OutputFormat fmt, std::ostream& out) {
    switch (fmt) {
    case OutputFormat::Text:
        for (const auto& r : rows) out << r.n2 << '\t' << r.distance << '\n';
        break;
    case OutputFormat::Csv:
        out << "n2,distance\n";
        for (const auto& r : rows) out << r.n2 << ',' << r.distance << '\n';
        break;
    case OutputFormat::Json: {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back({{"n2", r.n2}, {"distance", r.distance}});
        out << arr.dump(2) << '\n';
        break;
    }
    }
}

inline void render_counts(const std::vector<CountRecord>& rows, OutputFormat fmt, std::ostream& out) {
    switch (fmt) {
    case OutputFormat::Text:
        for (const auto& r : rows) out << r.n << '\t' << r.fixed_k_count << '\t' << r.guc_count << '\n';
        break;
    case OutputFormat::Csv:
        out << "n,fixed_k_count,guc_count\n";
        for (const auto& r : rows) out << r.n << ',' << r.fixed_k_count << ',' << r.guc_count << '\n';
        break;
    case OutputFormat::Json: {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"n", r.n}, {"fixed_k_count", r.fixed_k_count}, {"guc_count", r.guc_count}});
        out << arr.dump(2) << '\n';
        break;
    }
    }
}

inline std::uint64_t parse_value(const std::string& s) {
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end)
        throw value_out_of_range("value '" + s + "' is not a nonnegative decimal integer");
    return v;
}

namespace detail {

struct SchemeArgs {
    std::string scheme;
    std::size_t n = 0;
    std::optional<std::size_t> k;
};

inline void add_scheme_options(CLI::App* cmd, SchemeArgs& a) {
    cmd->add_option("--scheme", a.scheme, "increasing | fixed | guc")
        ->required()
        ->check(CLI::IsMember({"increasing", "fixed", "guc"}));
    cmd->add_option("--n", a.n, "codeword width in bits")->required();
    cmd->add_option("--k", a.k, "length of the 1-block (fixed, guc)");
}

inline std::pair<SchemeId, CodeParams> resolve(const SchemeArgs& a) {
    const SchemeId scheme = *parse_scheme(a.scheme);
    if (scheme == SchemeId::IncreasingK) {
        if (a.k) throw invalid_params("--k is not accepted for the increasing scheme");
        CodeParams p{a.n, 0};
        validate_params(scheme, p);
        return {scheme, p};
    }
    if (!a.k) throw invalid_params("--k is required for the " + a.scheme + " scheme");
    CodeParams p{a.n, *a.k};
    validate_params(scheme, p);
    return {scheme, p};
}

}  // namespace detail

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; the return value is the process exit status.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized unary codes: encode, decode, tables, verification and analysis data", "guc"};
    app.require_subcommand(1);

    detail::SchemeArgs sa;
    std::string value_text, bits;
    std::string table_format = "text", data_format = "csv";
    std::uint64_t ref = 0;
    std::size_t cmp_k = 0, n_min = 0, n_max = 0;

    auto* enc = app.add_subcommand("encode", "print the codeword for a value");
    detail::add_scheme_options(enc, sa);
    enc->add_option("value", value_text, "nonnegative integer")->required();

    auto* dec = app.add_subcommand("decode", "print the value of a codeword");
    detail::add_scheme_options(dec, sa);
    dec->add_option("bits", bits, "codeword, MSB first")->required();

    auto* tab = app.add_subcommand("table", "print every value and its codeword");
    detail::add_scheme_options(tab, sa);
    tab->add_option("--format", table_format, "text | csv | json")->check(CLI::IsMember({"text", "csv", "json"}));

    auto* dist = app.add_subcommand("distance", "Hamming distance from a reference value to every value");
    detail::add_scheme_options(dist, sa);
    dist->add_option("--ref", ref, "reference value n1")->required();
    dist->add_option("--format", data_format, "text | csv | json (default csv)")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* cmp = app.add_subcommand("count-compare", "fixed-k vs guc maximum value over a range of n");
    cmp->add_option("--k", cmp_k, "block length")->required();
    cmp->add_option("--n-min", n_min, "smallest width")->required();
    cmp->add_option("--n-max", n_max, "largest width")->required();
    cmp->add_option("--format", data_format, "text | csv | json (default csv)")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    auto* ver = app.add_subcommand("verify", "exhaustively check a code (n <= 24)");
    detail::add_scheme_options(ver, sa);

    std::vector<const char*> argv{"guc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (enc->parsed()) {
            auto [scheme, p] = detail::resolve(sa);
            out << encode(scheme, p, parse_value(value_text)).to_text() << '\n';
        } else if (dec->parsed()) {
            auto [scheme, p] = detail::resolve(sa);
            out << decode(scheme, p, word_from_text(bits)) << '\n';
        } else if (tab->parsed()) {
            auto [scheme, p] = detail::resolve(sa);
            render_table(enumerate_table(scheme, p), parse_format(table_format), out);
        } else if (dist->parsed()) {
            auto [scheme, p] = detail::resolve(sa);
            render_distances(distance_profile(scheme, p, ref, max_value(scheme, p)), parse_format(data_format), out);
        } else if (cmp->parsed()) {
            render_counts(count_comparison(cmp_k, n_min, n_max), parse_format(data_format), out);
        } else if (ver->parsed()) {
            auto [scheme, p] = detail::resolve(sa);
            const VerificationReport rep = verify_scheme(scheme, p);
            if (rep.passed()) {
                out << "PASS total=" << rep.total_codewords << '\n';
                return 0;
            }
            out << "FAIL total=" << rep.total_codewords << " expected=" << max_value(scheme, p) + 1 << '\n';
            for (auto [a, b] : rep.duplicates) out << "duplicate " << a << ' ' << b << '\n';
            for (auto v : rep.roundtrip_failures) out << "roundtrip-failure " << v << '\n';
            for (auto v : rep.oracle_mismatches) out << "oracle-mismatch " << v << '\n';
            return 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace guc::cli
