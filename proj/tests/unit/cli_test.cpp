// Copyright 2026 The kdrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using kdrep::cli::run;
namespace exit_code = kdrep::cli::exit_code;

namespace {

const fs::path kBundled = KDREP_BUNDLED_DIR;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("kdrep_cli_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }
    std::string out(const std::string& sub) const { return (dir_ / sub).string(); }

    fs::path dir_;
};

const char* kMislabeled = R"({
  "schema_version": 1,
  "systems": [{"name": "q", "dim": 2}],
  "channels": [{"name": "leaky", "trace_class": "trace-preserving",
                "kraus": [[[[0.8, 0], [0, 0]], [[0, 0], [0.8, 0]]]]}]
})";

}  // namespace

TEST_F(CliTest, RepresentQubitRow) {
    const auto r = invoke({"represent", (kBundled / "qubit_zx.json").string(), "--out", out("a")});
    ASSERT_EQ(r.code, exit_code::ok) << r.err;
    const std::string csv = slurp(dir_ / "a" / "represent.csv");
    EXPECT_EQ(csv.rfind("object,i,i',re,im\n", 0), 0u);
    EXPECT_NE(csv.find("\nstate0,0,0,0.5,0.0\n"), std::string::npos) << csv;
    EXPECT_TRUE(fs::exists(dir_ / "a" / "represent_channels.csv"));
    const auto summary = nlohmann::json::parse(slurp(dir_ / "a" / "represent.json"));
    EXPECT_EQ(summary["meta"]["command"], "represent");
}

TEST_F(CliTest, RepresentIsByteStable) {
    const std::string in = (kBundled / "classical.json").string();
    ASSERT_EQ(invoke({"represent", in, "--out", out("a")}).code, exit_code::ok);
    ASSERT_EQ(invoke({"represent", in, "--out", out("b")}).code, exit_code::ok);
    for (const char* f : {"represent.csv", "represent_channels.csv"}) {
        EXPECT_EQ(slurp(dir_ / "a" / f), slurp(dir_ / "b" / f)) << f;
    }
}

TEST_F(CliTest, MalformedJsonLeavesNoOutput) {
    const auto bad = write("bad.json", "{\"schema_version\": 1, \"systems\": [");
    const auto r = invoke({"represent", bad.string(), "--out", out("none")});
    EXPECT_EQ(r.code, exit_code::parse);
    EXPECT_FALSE(fs::exists(dir_ / "none"));
}

TEST_F(CliTest, WrongShapeIsParseError) {
    const auto bad = write("shape.json", R"({"schema_version": 1, "systems": [{"name": "q", "dim": 2}],
        "states": [{"name": "s", "matrix": [[1, 0], [0]]}]})");
    EXPECT_EQ(invoke({"represent", bad.string(), "--out", out("o")}).code, exit_code::parse);
    EXPECT_EQ(invoke({"represent", (dir_ / "missing.json").string()}).code, exit_code::parse);
}

TEST_F(CliTest, UnknownOptionIsParseError) {
    EXPECT_EQ(invoke({"represent"}).code, exit_code::parse);
    EXPECT_EQ(invoke({"frobnicate"}).code, exit_code::parse);
    EXPECT_EQ(invoke({"search", "--mode", "sideways"}).code, exit_code::parse);
}

TEST_F(CliTest, DimensionMismatchIsValidation) {
    const auto bad = write("dims.json", R"({"schema_version": 1, "systems": [{"name": "q", "dim": 2}],
        "states": [{"name": "s", "matrix": [[[1,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0]]]}]})");
    EXPECT_EQ(invoke({"represent", bad.string(), "--out", out("o")}).code, exit_code::validation);
}

TEST_F(CliTest, MislabeledChannelReportsResidual) {
    const auto bad = write("leaky.json", kMislabeled);
    const auto r = invoke({"verify", bad.string(), "--out", out("o")});
    EXPECT_EQ(r.code, exit_code::validation);
    // Residual of sum K^dagger K against the identity: 1 - 0.64.
    EXPECT_NE(r.err.find("residual"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("0.36"), std::string::npos) << r.err;
}

TEST_F(CliTest, OrthogonalFrameIsAdmissibility) {
    const auto bad = write("orth.json", R"({"schema_version": 1, "systems": [{"name": "q", "dim": 2}],
        "frames": [{"name": "zz", "system": "q", "basis_a": [[[1,0],[0,0]],[[0,0],[1,0]]],
                    "basis_a_prime": [[[0,0],[1,0]],[[1,0],[0,0]]]}],
        "states": [{"name": "s", "matrix": [[[1,0],[0,0]],[[0,0],[0,0]]]}]})");
    EXPECT_EQ(invoke({"represent", bad.string(), "--out", out("o")}).code, exit_code::admissibility);
}

TEST_F(CliTest, MaxDimFromEnvironment) {
    setenv("KDREP_MAX_DIM", "2", 1);
    const auto r = invoke({"represent", (kBundled / "classical.json").string(), "--out", out("o")});
    unsetenv("KDREP_MAX_DIM");
    EXPECT_EQ(r.code, exit_code::validation);
}

TEST_F(CliTest, CertifyVerdicts) {
    auto r = invoke({"certify", (kBundled / "classical.json").string(), "--out", out("c")});
    EXPECT_EQ(r.code, exit_code::ok) << r.err;
    auto doc = nlohmann::json::parse(slurp(dir_ / "c" / "certify.json"));
    EXPECT_EQ(doc["certification"]["verdict"], "NONNEGATIVE");
    EXPECT_TRUE(doc["certification"]["substochasticity"]["passed"].get<bool>());

    r = invoke({"certify", (kBundled / "ypsilon.json").string(), "--out", out("y")});
    EXPECT_EQ(r.code, exit_code::negative);
    doc = nlohmann::json::parse(slurp(dir_ / "y" / "certify.json"));
    EXPECT_EQ(doc["certification"]["verdict"], "NEGATIVE");
    EXPECT_NEAR(doc["certification"]["max_abs_imag"].get<double>(), 0.25, 1e-9);
    EXPECT_NEAR(doc["negativity"]["total_imaginarity"].get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, HugeToleranceCertifiesEverything) {
    for (const char* f : {"qubit_zx.json", "ypsilon.json", "classical.json"}) {
        EXPECT_EQ(invoke({"certify", (kBundled / f).string(), "--tol", "1.0", "--out", out("t")}).code, exit_code::ok)
            << f;
    }
}

TEST_F(CliTest, RandomVerifyAllSuites) {
    const auto r = invoke({"verify", "--random", "--suite", "all", "--seed", "7", "--trials", "100", "--out", out("v")});
    EXPECT_EQ(r.code, exit_code::ok) << r.out;
    const std::string csv = slurp(dir_ / "v" / "verify.csv");
    EXPECT_EQ(csv.find(",false,"), std::string::npos) << csv;
    for (const char* check : {"identity", "sequential", "parallel", "swap", "min_margin", "max_modulus"}) {
        EXPECT_NE(csv.find(check), std::string::npos) << check;
    }
}

TEST_F(CliTest, RandomVerifyIsByteStable) {
    for (const char* sub : {"a", "b"}) {
        ASSERT_EQ(invoke({"verify", "--random", "--suite", "normalization", "--seed", "3", "--trials", "20", "--out",
                          out(sub)})
                      .code,
                  exit_code::ok);
    }
    EXPECT_EQ(slurp(dir_ / "a" / "verify.csv"), slurp(dir_ / "b" / "verify.csv"));
}

TEST_F(CliTest, VerifyFileMode) {
    const auto r = invoke({"verify", (kBundled / "classical.json").string(), "--out", out("v")});
    EXPECT_EQ(r.code, exit_code::ok) << r.out;
    EXPECT_NE(slurp(dir_ / "v" / "verify.csv").find("sequential:hop>hop"), std::string::npos);
}

TEST_F(CliTest, FailingCheckExitsOne) {
    // A negative pass threshold fails every check.
    const auto r = invoke({"verify", "--random", "--suite", "functoriality", "--seed", "1", "--trials", "5", "--tol=-1", "--out", out("f")});
    EXPECT_EQ(r.code, exit_code::check_failed);
}

TEST_F(CliTest, SearchWitnessRoundTrip) {
    const auto r = invoke({"search", (kBundled / "classical.json").string(), "--mode", "nonneg", "--restarts", "5",
                           "--seed", "2", "--out", out("s")});
    ASSERT_EQ(r.code, exit_code::ok) << r.err;
    const auto doc = nlohmann::json::parse(slurp(dir_ / "s" / "search.json"));
    EXPECT_LE(doc["best_objective"].get<double>(), 1e-9);
    ASSERT_TRUE(fs::exists(dir_ / "s" / "witness_fragment.json"));
    const auto c = invoke({"certify", (dir_ / "s" / "witness_fragment.json").string(), "--out", out("w")});
    EXPECT_EQ(c.code, exit_code::ok) << c.out << c.err;
    // Re-serializing the ingested witness frame gives the same bytes.
    const auto again = invoke({"search", (dir_ / "s" / "witness_fragment.json").string(), "--restarts", "1", "--seed",
                               "2", "--out", out("s2")});
    ASSERT_EQ(again.code, exit_code::ok);
    const auto w1 = nlohmann::json::parse(slurp(dir_ / "s" / "witness_fragment.json"));
    const auto rep = invoke({"represent", (dir_ / "s" / "witness_fragment.json").string(), "--out", out("r")});
    ASSERT_EQ(rep.code, exit_code::ok);
    const auto summary = nlohmann::json::parse(slurp(dir_ / "r" / "represent.json"));
    EXPECT_EQ(summary["frame"]["factors"][0]["basis_a"], w1["frames"][0]["basis_a"]);
    EXPECT_EQ(summary["frame"]["factors"][0]["basis_a_prime"], w1["frames"][0]["basis_a_prime"]);
}

TEST_F(CliTest, SearchExtremalPrintsValueAndIsStable) {
    const auto a = invoke({"search", "--mode", "max-imag", "--restarts", "4", "--seed", "1", "--out", out("a")});
    ASSERT_EQ(a.code, exit_code::ok) << a.err;
    EXPECT_NE(a.out.find("best value: "), std::string::npos);
    EXPECT_NE(a.out.find("state: ["), std::string::npos);
    EXPECT_NE(a.out.find("basis_a_prime:"), std::string::npos);
    const auto b = invoke({"search", "--mode", "max-imag", "--restarts", "4", "--seed", "1", "--out", out("b")});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(slurp(dir_ / "a" / "search.csv"), slurp(dir_ / "b" / "search.csv"));
    const auto doc = nlohmann::json::parse(slurp(dir_ / "a" / "search.json"));
    EXPECT_LE(doc["best_value"].get<double>(), 0.25 + 1e-9);
}

TEST_F(CliTest, SearchNonnegNeedsInput) {
    EXPECT_EQ(invoke({"search", "--mode", "nonneg", "--out", out("o")}).code, exit_code::validation);
}
