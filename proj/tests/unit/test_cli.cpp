#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ssiwasawa_cli/cli.hpp"

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "ssiwasawa");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = ssiw::cli::cli_main(static_cast<int>(argv.size()), argv.data(), in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::vector<std::string> column(const std::string& csv, std::size_t index) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        std::istringstream cells(line);
        std::string cell;
        for (std::size_t i = 0; i <= index; ++i) std::getline(cells, cell, ',');
        out.push_back(cell);
    }
    return out;
}

std::vector<std::string> last_column(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        out.push_back(line.substr(line.rfind(',') + 1));
    }
    return out;
}

} // namespace

TEST(Cli, TablesQ) {
    const CliRun r = run({"tables", "q", "--n", "5"});
    EXPECT_EQ(r.code, ssiw::cli::kOk);
    EXPECT_EQ(column(r.out, 1), (std::vector<std::string>{"0", "0", "2", "6", "20", "60"}));
}

TEST(Cli, Invariants) {
    const CliRun r = run({"invariants", R"({"p":3,"N":8,"D":3,"coeffs":[0,3,0,1]})"});
    EXPECT_EQ(r.code, ssiw::cli::kOk);
    EXPECT_EQ(r.out, "{\"mu\":0,\"lambda\":3}\n");
    const CliRun piped = run({"invariants", "-"}, R"({"p":3,"N":8,"D":3,"coeffs":[3,3]})");
    EXPECT_EQ(piped.out, "{\"mu\":1,\"lambda\":0}\n");
}

TEST(Cli, EvalZeta) {
    const CliRun r = run({"eval-zeta", R"({"p":3,"N":8,"D":1,"coeffs":[0,1]})", "--n", "2"});
    EXPECT_EQ(r.code, ssiw::cli::kOk);
    EXPECT_NE(r.out.find("\"ordp\":\"1/6\""), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, ssiw::cli::kBadInput);
    EXPECT_EQ(run({"tables", "nope"}).code, ssiw::cli::kBadInput);
    EXPECT_EQ(run({"--p", "4", "tables", "q"}).code, ssiw::cli::kBadInput);
    EXPECT_EQ(run({"growth", R"({"p":3})"}).code, ssiw::cli::kBadInput);
    EXPECT_EQ(run({"invariants", "{not json"}).code, ssiw::cli::kBadInput);
    EXPECT_EQ(run({"invariants", "/nonexistent/file.json"}).code, ssiw::cli::kBadInput);
    EXPECT_EQ(run({"--help"}).code, ssiw::cli::kOk);
    // a series that is zero to precision has no invariants: a computation failure
    EXPECT_EQ(run({"invariants", R"({"p":3,"N":2,"D":1,"coeffs":[{"u":"0","v":2,"r":0}]})"}).code, ssiw::cli::kFailed);
}

TEST(Cli, GrowthMatchesShaTable) {
    const CliRun growth = run({"growth", R"({"variant":"proof-derived","n_max":4})"});
    ASSERT_EQ(growth.code, ssiw::cli::kOk) << growth.err;
    EXPECT_NE(growth.out.find("# hypotheses: S=asserted"), std::string::npos);
    const CliRun sha = run({"tables", "sha", "--n", "4", "--d", "1"});
    ASSERT_EQ(sha.code, ssiw::cli::kOk);
    std::vector<std::string> sha_col = column(sha.out, 3);
    sha_col.erase(sha_col.begin());  // n = 0
    EXPECT_EQ(last_column(growth.out), sha_col);
}

TEST(Cli, Deterministic) {
    const CliRun a = run({"--seed", "5", "tables", "sha", "--n", "4"});
    const CliRun b = run({"--seed", "5", "tables", "sha", "--n", "4"});
    EXPECT_EQ(a.out, b.out);
    const CliRun g1 = run({"growth", R"({"variant":"as-stated","lambda_plus":2,"s":1})"});
    const CliRun g2 = run({"growth", R"({"variant":"as-stated","lambda_plus":2,"s":1})"});
    EXPECT_EQ(g1.out, g2.out);
}
