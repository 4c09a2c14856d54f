#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spherelab/cli.hpp"

using namespace spherelab;
using namespace spherelab::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int status = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "spherelab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

RunConfig parse(std::vector<std::string> args) {
    args.insert(args.begin(), "spherelab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return parse_arguments(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("spherelab-test-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    fs::path dir;
};

}  // namespace

TEST(Grid, ParsesAndSpaces) {
    const auto g = Grid::parse("0:90:4");
    EXPECT_EQ(g.values(), (std::vector<double>{0, 30, 60, 90}));
    EXPECT_EQ(Grid::parse("12.5:99:1").values(), (std::vector<double>{12.5}));
    EXPECT_THROW(Grid::parse("0:90"), UsageError);
    EXPECT_THROW(Grid::parse("0:90:0"), UsageError);
    EXPECT_THROW(Grid::parse("a:b:c"), UsageError);
}

TEST(Arguments, UnitIsRequiredWithAngles) {
    EXPECT_THROW(parse({"qm", "--state", "hardy", "--theta", "30"}), UsageError);
    EXPECT_NO_THROW(parse({"qm", "--state", "hardy", "--theta", "30", "--unit", "deg"}));
    EXPECT_THROW(parse({"qm", "--angles", "0", "0", "90", "--unit", "deg"}), UsageError);
    EXPECT_THROW(parse({"qm", "--unit", "grad"}), UsageError);
    EXPECT_THROW(parse({}), UsageError);
}

TEST(Arguments, CommandAsPositionalOrFlag) {
    EXPECT_EQ(parse({"identities"}).command, "identities");
    EXPECT_EQ(parse({"--command", "identities"}).command, "identities");
}

TEST(Arguments, HelpExitsCleanly) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.status, kExitSuccess);
    EXPECT_NE(r.out.find("--theta-grid"), std::string::npos);
}

TEST_F(TempDir, ConfigFileWithFlagOverride) {
    const auto cfg = dir / "run.json";
    std::ofstream(cfg) << R"({"command": "mc", "state": "singlet", "seed": 5, "theta_grid": "0:90:3", "unit": "deg",
                             "angles": [0, 0, 90, 0], "strict_table": true})";
    const auto c = parse({"--config", cfg.string(), "--seed", "9"});
    EXPECT_EQ(c.command, "mc");
    EXPECT_EQ(c.seed, 9u);
    EXPECT_EQ(c.angles, (std::vector<double>{0, 0, 90, 0}));
    ASSERT_TRUE(c.theta_grid.has_value());
    EXPECT_EQ(c.theta_grid->count, 3);
    EXPECT_TRUE(c.strict_table);
    EXPECT_EQ(parse({"--config", cfg.string()}).seed, 5u);

    std::ofstream(dir / "bad.json") << "[1, 2]";
    EXPECT_THROW(parse({"--config", (dir / "bad.json").string()}), UsageError);
}

TEST_F(TempDir, MissingAnglesFileIsUsageErrorWithoutArtifact) {
    const auto target = dir / "out.json";
    const auto r = run({"qm", "--state", "ghz4", "--angles-file", (dir / "missing.json").string(), "-o",
                        target.string()});
    EXPECT_EQ(r.status, kExitUsage);
    EXPECT_FALSE(fs::exists(target));
    EXPECT_FALSE(r.err.empty());
}

TEST_F(TempDir, UnknownCommandIsUsageError) { EXPECT_EQ(run({"frobnicate"}).status, kExitUsage); }

TEST_F(TempDir, AtomicWriteReplacesAndLeavesNoTemporaries) {
    const auto p = dir / "a.txt";
    write_atomic(p.string(), "first");
    write_atomic(p.string(), "second");
    EXPECT_EQ(slurp(p), "second");
    std::size_t files = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
    EXPECT_EQ(files, 1u);
    EXPECT_THROW(write_atomic((dir / "no" / "such" / "dir" / "x").string(), "x"), UsageError);
}

TEST_F(TempDir, OutputPathResolution) {
    EXPECT_EQ(resolve_output_path("given.csv", "qm", "json"), "given.csv");
    ::setenv(kOutputDirVariable, dir.c_str(), 1);
    EXPECT_EQ(fs::path(resolve_output_path("", "compare", "csv")), dir / "spherelab-compare.csv");
    ::unsetenv(kOutputDirVariable);
    EXPECT_EQ(fs::path(resolve_output_path("", "compare", "json")).filename(), "spherelab-compare.json");
}

TEST_F(TempDir, ArtifactsAreByteIdenticalAcrossRunsAndWorkers) {
    const auto a = dir / "a.json";
    const auto b = dir / "b.json";
    const std::vector<std::string> base{"mc", "--state", "singlet", "--angles", "0", "0", "90", "0", "--unit",
                                        "deg", "--samples", "20000", "--seed", "3"};
    auto args_a = base;
    args_a.insert(args_a.end(), {"--workers", "1", "-o", a.string()});
    auto args_b = base;
    args_b.insert(args_b.end(), {"--workers", "3", "-o", b.string()});
    ASSERT_EQ(run(args_a).status, kExitSuccess);
    ASSERT_EQ(run(args_b).status, kExitSuccess);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(slurp(a).empty());
}

TEST_F(TempDir, CompareCsvIsParseableAndPasses) {
    const auto p = dir / "cmp.csv";
    const auto r = run({"compare", "--state", "singlet", "--samples", "200", "--seed", "1", "--format", "csv", "-o",
                        p.string()});
    EXPECT_EQ(r.status, kExitSuccess);
    const auto text = slurp(p);
    EXPECT_EQ(text.rfind("label,model,oracle,residual,tolerance,verdict\n", 0), 0u);
    EXPECT_EQ(text.find(",mismatch\n"), std::string::npos);
}

TEST_F(TempDir, TinyToleranceTurnsCompareIntoMismatch) {
    const auto p = dir / "cmp.json";
    const auto r = run({"compare", "--state", "ghz4", "--samples", "50", "--tol-algebraic", "0", "-o", p.string()});
    EXPECT_EQ(r.status, kExitMismatch);
    EXPECT_TRUE(fs::exists(p));
}

TEST_F(TempDir, IdentitiesSuitePasses) {
    const auto report = identity_suite(1, 500, sphere7::CrossTable::cyclic());
    EXPECT_TRUE(report.passed());
    EXPECT_GE(report.rows.size(), 20u);
    EXPECT_EQ(run({"identities", "--samples", "200", "-o", (dir / "id.json").string()}).status, kExitSuccess);
}

TEST_F(TempDir, SolveHardyDocumentsEveryGridPoint) {
    const auto p = dir / "hardy.csv";
    const auto r = run({"solve-hardy", "--theta-grid", "0:90:3", "--unit", "deg", "--format", "csv", "-o",
                        p.string()});
    EXPECT_EQ(r.status, kExitSuccess);
    EXPECT_TRUE(fs::exists(p));
}
