#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "golden_tables.hpp"
#include "guc/cli.hpp"
#include <json.hpp>

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = guc::cli::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

TEST(CliEncode, Examples) {
    EXPECT_EQ(run({"encode", "--scheme", "guc", "--n", "8", "--k", "3", "13"}).out, "01110001\n");
    EXPECT_EQ(run({"encode", "--scheme", "guc", "--n", "8", "--k", "3", "0"}).out, "00000000\n");
    const Result r = run({"encode", "--scheme", "increasing", "--n", "4", "9"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "1110\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(CliEncode, Errors) {
    Result r = run({"encode", "--scheme", "guc", "--n", "8", "--k", "3", "34"});
    EXPECT_NE(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
    EXPECT_NE(run({"encode", "--scheme", "guc", "--n", "8", "--k", "1", "3"}).status, 0);
    EXPECT_NE(run({"encode", "--scheme", "guc", "--n", "8", "3"}).status, 0);
    EXPECT_NE(run({"encode", "--scheme", "increasing", "--n", "4", "--k", "2", "3"}).status, 0);
    EXPECT_NE(run({"encode", "--scheme", "bogus", "--n", "4", "3"}).status, 0);
    EXPECT_NE(run({"encode", "--scheme", "increasing", "--n", "4", "x3"}).status, 0);
    EXPECT_NE(run({}).status, 0);
}

TEST(CliDecode, Examples) {
    EXPECT_EQ(run({"decode", "--scheme", "guc", "--n", "8", "--k", "3", "10000111"}).out, "33\n");
    EXPECT_EQ(run({"decode", "--scheme", "fixed", "--n", "7", "--k", "3", "0000000"}).out, "0\n");
    const Result bad = run({"decode", "--scheme", "guc", "--n", "8", "--k", "3", "00001111"});
    EXPECT_NE(bad.status, 0);
    EXPECT_TRUE(bad.out.empty());
    EXPECT_NE(bad.err.find("invalid codeword"), std::string::npos);
    EXPECT_NE(run({"decode", "--scheme", "guc", "--n", "8", "--k", "3", "0000111"}).status, 0);
    EXPECT_NE(run({"decode", "--scheme", "guc", "--n", "8", "--k", "3", "0000a111"}).status, 0);
}

TEST(CliTable, TextMatchesGolden) {
    const Result r = run({"table", "--scheme", "guc", "--n", "8", "--k", "3"});
    ASSERT_EQ(r.status, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 34u);
    for (std::size_t i = 0; i < ls.size(); ++i)
        EXPECT_EQ(ls[i], std::to_string(i) + "\t" + std::string(guc::golden::guc_n8_k3[i]));
}

TEST(CliTable, CsvAndJson) {
    const auto csv = lines(run({"table", "--scheme", "fixed", "--n", "7", "--k", "3", "--format", "csv"}).out);
    ASSERT_EQ(csv.size(), 17u);
    EXPECT_EQ(csv[0], "value,code");
    for (std::size_t i = 0; i < 16; ++i)
        EXPECT_EQ(csv[i + 1], std::to_string(i) + "," + std::string(guc::golden::fixed_n7_k3[i]));

    const auto j = nlohmann::json::parse(run({"table", "--scheme", "increasing", "--n", "4", "--format", "json"}).out);
    ASSERT_EQ(j.size(), 11u);
    EXPECT_EQ(j[7]["value"], 7);
    EXPECT_EQ(j[7]["code"], "1100");

    EXPECT_EQ(run({"table", "--scheme", "increasing", "--n", "1"}).out, "0\t0\n1\t1\n");
    EXPECT_NE(run({"table", "--scheme", "increasing", "--n", "1", "--format", "xml"}).status, 0);
}

TEST(CliTable, PipesBackThroughDecode) {
    for (auto [scheme, n, k] : {std::tuple{"guc", "9", "3"}, std::tuple{"fixed", "8", "2"}}) {
        for (const auto& line : lines(run({"table", "--scheme", scheme, "--n", n, "--k", k}).out)) {
            const auto tab = line.find('\t');
            const Result r = run({"decode", "--scheme", scheme, "--n", n, "--k", k, line.substr(tab + 1)});
            ASSERT_EQ(r.status, 0);
            ASSERT_EQ(r.out, line.substr(0, tab) + "\n");
        }
    }
}

TEST(CliDistance, Csv) {
    const auto ls = lines(run({"distance", "--scheme", "guc", "--n", "8", "--k", "3", "--ref", "1", "--format", "csv"}).out);
    ASSERT_EQ(ls.size(), 35u);
    EXPECT_EQ(ls[0], "n2,distance");
    EXPECT_EQ(ls[1], "0,3");
    EXPECT_EQ(ls[2], "1,0");
    EXPECT_EQ(ls[3], "2,2");
    EXPECT_EQ(lines(run({"distance", "--scheme", "fixed", "--n", "7", "--k", "3", "--ref", "1", "--format", "csv"}).out)
                  .size(),
              17u);
    EXPECT_NE(run({"distance", "--scheme", "guc", "--n", "8", "--k", "3", "--ref", "34"}).status, 0);
    EXPECT_EQ(run({"distance", "--scheme", "guc", "--n", "8", "--k", "3", "--ref", "1"}).out,
              run({"distance", "--scheme", "guc", "--n", "8", "--k", "3", "--ref", "1", "--format", "csv"}).out);
}

TEST(CliCountCompare, Rows) {
    const Result r = run({"count-compare", "--k", "3", "--n-min", "5", "--n-max", "12"});
    ASSERT_EQ(r.status, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 9u);
    EXPECT_EQ(ls[0], "n,fixed_k_count,guc_count");
    EXPECT_EQ(ls[1], "5,3,6");
    EXPECT_EQ(ls[3], "7,15,22");
    EXPECT_EQ(ls[4], "8,24,33");
    const auto j = nlohmann::json::parse(
        run({"count-compare", "--k", "3", "--n-min", "8", "--n-max", "8", "--format", "json"}).out);
    EXPECT_EQ(j[0]["guc_count"], 33);
    EXPECT_EQ(run({"count-compare", "--k", "3", "--n-min", "8", "--n-max", "8", "--format", "text"}).out,
              "8\t24\t33\n");
    EXPECT_NE(run({"count-compare", "--k", "3", "--n-min", "4", "--n-max", "8"}).status, 0);
}

TEST(CliVerify, Examples) {
    EXPECT_EQ(run({"verify", "--scheme", "guc", "--n", "8", "--k", "3"}).out, "PASS total=34\n");
    EXPECT_EQ(run({"verify", "--scheme", "guc", "--n", "10", "--k", "4"}).out, "PASS total=52\n");
    const Result r = run({"verify", "--scheme", "increasing", "--n", "4"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "PASS total=11\n");
    EXPECT_NE(run({"verify", "--scheme", "guc", "--n", "25", "--k", "3"}).status, 0);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"table", "--scheme", "guc", "--n", "10", "--k", "4", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
