#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "vmp/analytic.hpp"
#include "vmp/cli.hpp"

using namespace vmp;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "vmpoisson");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string c;
        while (std::getline(ls, c, ',')) cells.push_back(c);
        rows.push_back(cells);
    }
    return rows;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

std::filesystem::path temp_dir() {
    auto d = std::filesystem::temp_directory_path() / ("vmp_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST(Format, Doubles) {
    EXPECT_EQ(format_double(-0.0), "0");
    EXPECT_EQ(format_double(2.5), "2.5");
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(Cli, MomentsNumeric) {
    const auto r = run({"moments", "--N", "2", "--n-max", "6", "--lambda", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv(r.out);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"n", "exact", "limit"}));
    EXPECT_EQ(rows[1], (std::vector<std::string>{"0", "1", "1"}));
    EXPECT_EQ(rows[5], (std::vector<std::string>{"4", "2.5", "3"}));
    EXPECT_EQ(rows.size(), 8u);
}

TEST(Cli, MomentsFibonacci) {
    const auto r = run({"moments", "--N", "1", "--n-max", "8", "--lambda", "1"});
    ASSERT_EQ(r.code, 0);
    const auto rows = csv(r.out);
    const char* fib[] = {"1", "0", "1", "1", "2", "3", "5", "8", "13"};
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(rows[n + 1][1], fib[n]);
}

TEST(Cli, MomentsSymbolic) {
    const auto r = run({"moments", "--n-max", "4"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("4,lambda^2 + 2 - nu,lambda^2 + 2\n"), std::string::npos) << r.out;
    const auto r2 = run({"moments", "--N", "2", "--n-max", "4"});
    EXPECT_NE(r2.out.find("4,lambda^2 + 3/2,lambda^2 + 2\n"), std::string::npos) << r2.out;
    EXPECT_EQ(run({"moments", "--lambda", "1"}).code, 1);
}

TEST(Cli, Counts) {
    const auto r = run({"counts", "--n-max", "6", "--N", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,k,nc2p,ordered_v,vl");
    EXPECT_NE(r.out.find("\n6,2,9,18,24\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\n6,3,5,28,"), std::string::npos);
}

TEST(Cli, Mgf) {
    const auto r = run({"mgf", "--N", "1", "--n-max", "6", "--lambda", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "n,coefficient\n0,1\n1,0\n2,1\n3,1\n4,2\n5,3\n6,5\n");
    const auto s = run({"mgf", "--N", "2", "--n-max", "4"});
    EXPECT_NE(s.out.find("4,lambda^2 + 3/2\n"), std::string::npos);
    EXPECT_EQ(run({"mgf"}).code, 1);
}

TEST(Cli, DensityWithSidecar) {
    const auto dir = temp_dir();
    const auto path = (dir / "d1.csv").string();
    const auto r = run({"density", "--lambda", "1", "--points", "101", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = csv(slurp(path));
    ASSERT_EQ(rows.size(), 102u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"x", "density"}));
    const auto side = nlohmann::json::parse(slurp(path + ".json"));
    EXPECT_NEAR(side["mass_check"].get<double>(), 1, 1e-6);
    EXPECT_NEAR(side["atom_position"].get<double>(), atom_position(1.0) + 1, 1e-9);
    const std::vector<std::string> keys = {"lambda", "atom_position", "atom_weight", "support", "mass_check"};
    std::vector<std::string> got;
    for (auto it = side.begin(); it != side.end(); ++it) got.push_back(it.key());
    EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), std::set<std::string>(keys.begin(), keys.end()));
    // key order is stable in the file itself
    const std::string text = slurp(path + ".json");
    EXPECT_LT(text.find("\"lambda\""), text.find("\"atom_position\""));
    EXPECT_LT(text.find("\"support\""), text.find("\"mass_check\""));
}

TEST(Cli, DensitySymmetricAtZero) {
    const auto r = run({"density", "--lambda", "0", "--points", "200"});
    ASSERT_EQ(r.code, 0);
    const auto rows = csv(r.out);
    ASSERT_EQ(rows.size(), 201u);
    for (int i = 1; i <= 200; ++i) {
        const auto& a = rows[i];
        const auto& b = rows[201 - i];
        EXPECT_NEAR(std::stod(a[0]), -std::stod(b[0]), 1e-15);
        EXPECT_NEAR(std::stod(a[1]), std::stod(b[1]), 1e-10);
    }
}

TEST(Cli, DensityFormats) {
    const auto dir = temp_dir();
    const auto path = (dir / "d4.json").string();
    ASSERT_EQ(run({"density", "--lambda", "4", "--points", "10", "--format", "json", "--out", path}).code, 0);
    const auto doc = nlohmann::json::parse(slurp(path));
    const double w = doc["atom_weight"].get<double>();
    EXPECT_GT(w, 0);
    EXPECT_LT(w, 1);
    EXPECT_EQ(doc["x"].size(), 10u);
    const auto svg = run({"density", "--lambda", "0.5", "--points", "20", "--format", "svg"});
    ASSERT_EQ(svg.code, 0);
    EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.out.find("<polyline"), std::string::npos);
    EXPECT_EQ(run({"density", "--points", "1"}).code, 1);
    EXPECT_EQ(run({"density", "--format", "xml"}).code, 1);
}

TEST(Cli, AtomCurve) {
    const auto r = run({"atom"});
    ASSERT_EQ(r.code, 0);
    const auto rows = csv(r.out);
    ASSERT_EQ(rows.size(), 101u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"lambda", "position", "weight"}));
    double prev_a = 0;
    for (size_t i = 1; i < rows.size(); ++i) {
        const double l = std::stod(rows[i][0]), pos = std::stod(rows[i][1]), w = std::stod(rows[i][2]);
        const double a = pos - l;
        if (i > 1) EXPECT_LT(a, prev_a);
        prev_a = a;
        EXPECT_GT(w, 0);
        EXPECT_LT(w, 1);
    }
    EXPECT_DOUBLE_EQ(std::stod(rows[1][0]), 0.05);
    EXPECT_NEAR(std::stod(rows[1][1]), 0.05 - 1.68842, 1e-3);
    EXPECT_DOUBLE_EQ(std::stod(rows.back()[0]), 5);
    EXPECT_EQ(run({"atom", "--lambda-min", "0"}).code, 1);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args = {"density", "--lambda", "2", "--points", "50"};
    EXPECT_EQ(run(args).out, run(args).out);
    EXPECT_EQ(run({"atom", "--lambda-steps", "7"}).out, run({"atom", "--lambda-steps", "7"}).out);
}

TEST(Cli, Verify) {
    const auto r = run({"verify", "--N", "3", "--n-max", "8"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto report = nlohmann::json::parse(r.out);
    ASSERT_TRUE(report.is_array());
    EXPECT_EQ(report.size(), 11u);
    for (const auto& c : report) {
        EXPECT_EQ(c["status"], "pass") << c["check_name"];
        EXPECT_TRUE(c.contains("residual"));
    }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"moments", "--bogus"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"moments", "--N", "0"}).code, 1);
    EXPECT_EQ(run({"density", "--tol", "-1"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, NumericFailureExitCode) {
    // an unreachable quadrature tolerance surfaces as a numeric failure
    const auto r = run({"density", "--lambda", "1", "--tol", "1e-300"});
    EXPECT_EQ(r.code, 3) << r.err;
}
