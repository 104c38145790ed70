// Copyright 2026 The Commute Authors.
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commute/cli.hpp"
#include "commute/matc.hpp"
#include "commute/permutation.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;
using namespace commute;

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "commute");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("commute_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, HelpAndParseErrors) {
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"--tol", "-1", "verify"}).code, 2);
  EXPECT_EQ(run_cli({"expand", "--basis", "pauli"}).code, 2);
}

TEST_F(CliTest, VerifySuites) {
  for (const char* suite : {"eq1", "eq2", "eq5", "nonions", "proposition", "lemma", "properties"}) {
    const Outcome o = run_cli({"verify", "--suite", suite});
    EXPECT_EQ(o.code, 0) << suite << "\n" << o.out;
    EXPECT_NE(o.out.find("exit_status: ok"), std::string::npos) << suite;
  }
  EXPECT_EQ(run_cli({"--tol", "0", "verify", "--suite", "eq1"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "--suite", "bogus"}).code, 2);
}

TEST_F(CliTest, KiblerSuiteReportsFailure) {
  const Outcome o = run_cli({"verify", "--suite", "kibler", "--json", path("k.json")});
  EXPECT_EQ(o.code, 1);
  const auto j = cli::Json::parse(slurp(path("k.json")));
  EXPECT_EQ(j["exit_status"], "identity-failed");
  bool saw_sixteen = false;
  for (const auto& rec : j["records"]) {
    const std::string s = rec.dump();
    saw_sixteen = saw_sixteen || s.find("differing entries: 16") != std::string::npos;
  }
  EXPECT_TRUE(saw_sixteen);
}

TEST_F(CliTest, JsonIsByteIdenticalAcrossRuns) {
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"verify", "--suite", "all"},
        std::vector<std::string>{"--seed", "3", "search", "--restarts", "4"},
        std::vector<std::string>{"--seed", "3", "search", "--restarts", "4", "--threads", "3"}}) {
    std::vector<std::string> a = {"--json", path("a.json")}, b = {"--json", path("b.json")};
    a.insert(a.end(), cmd.begin(), cmd.end());
    b.insert(b.end(), cmd.begin(), cmd.end());
    const Outcome oa = run_cli(a), ob = run_cli(b);
    EXPECT_EQ(oa.code, ob.code);
    EXPECT_EQ(oa.out, ob.out);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  }
  // thread count does not change the search report
  run_cli({"--json", path("s1.json"), "--seed", "3", "search", "--restarts", "4"});
  run_cli({"--json", path("s3.json"), "--seed", "3", "search", "--restarts", "4", "--threads", "3"});
  EXPECT_EQ(slurp(path("s1.json")), slurp(path("s3.json")));
}

TEST_F(CliTest, GenTcmFiles) {
  const Outcome o = run_cli({"gen", "tcm", "--n", "2", "--p", "3", "--out", dir_.string()});
  ASSERT_EQ(o.code, 0) << o.err;
  const PermutationMatrix perm = load_perm(path("tcm_2x3.perm"));
  EXPECT_EQ(perm, build_tcm(2, 3));
  const ComplexMatrix dense = load_matc(path("tcm_2x3.matc"));
  EXPECT_EQ(dense, oracle::swap(2, 3));
}

TEST_F(CliTest, GenFamilyThenExpand) {
  ASSERT_EQ(run_cli({"gen", "scaled-gell-mann", "--n", "3", "--out", path("b")}).code, 0);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(path("b"))) ++files;
  EXPECT_EQ(files, 8u);
  EXPECT_EQ(load_matc(path("b/scaled-gell-mann_0.matc")), scaled_gell_mann(3).elements[0]);

  // a traceless matrix lies in the span of the generated files
  const ComplexMatrix m = 0.5 * scaled_gell_mann(3).elements[2] - 2.0 * scaled_gell_mann(3).elements[7];
  save_matc(path("m.matc"), m);
  const Outcome o = run_cli({"expand", "--matrix", path("m.matc"), "--basis", path("b"),
                             "--out", path("coef.matc")});
  ASSERT_EQ(o.code, 0) << o.out << o.err;
  const ComplexMatrix coef = load_matc(path("coef.matc"));
  ASSERT_EQ(coef.rows(), 8u);
  ASSERT_EQ(coef.cols(), 1u);
  for (std::size_t k = 0; k < 8; ++k) {
    const double want = k == 2 ? 0.5 : k == 7 ? -2.0 : 0.0;
    EXPECT_NEAR(std::abs(coef(k, 0) - Complex(want)), 0.0, 1e-12) << k;
  }
  // identity is not traceless, so the residual is nonzero without --with-identity
  save_matc(path("i.matc"), ComplexMatrix::identity(3));
  EXPECT_EQ(run_cli({"expand", "--matrix", path("i.matc"), "--basis", path("b")}).code, 1);
}

TEST_F(CliTest, GenWrittenFilesRoundTrip) {
  ASSERT_EQ(run_cli({"gen", "kibler", "--out", path("k")}).code, 0);
  const MatrixBasis b = kibler();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string file = path("k/kibler_" + std::to_string(i) + ".matc");
    EXPECT_EQ(load_matc(file), b.elements[i]);
    EXPECT_EQ(slurp(file), to_matc_string(b.elements[i]));
  }
}

TEST_F(CliTest, ExpandSwapOverProductBasis) {
  save_matc(path("s.matc"), oracle::swap(2, 2));
  const Outcome o = run_cli({"expand", "--matrix", path("s.matc"), "--basis", "pauli",
                             "--with-identity", "--pair", "--out", path("c.matc")});
  ASSERT_EQ(o.code, 0) << o.out << o.err;
  const ComplexMatrix c = load_matc(path("c.matc"));
  ASSERT_EQ(c.rows(), 4u);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      EXPECT_NEAR(std::abs(c(a, b) - Complex(a == b ? 0.5 : 0.0)), 0.0, 1e-12);
}

TEST_F(CliTest, InvalidInputs) {
  EXPECT_EQ(run_cli({"gen", "nosuch", "--out", dir_.string()}).code, 2);
  EXPECT_EQ(run_cli({"gen", "gell-mann", "--out", dir_.string()}).code, 2);
  EXPECT_EQ(run_cli({"gen", "kibler", "--n", "3", "--out", dir_.string()}).code, 2);
  EXPECT_EQ(run_cli({"expand", "--matrix", path("missing.matc"), "--basis", "pauli"}).code, 2);
  std::ofstream(path("bad.matc")) << "MATC 1\n2 2\n0 x\n";
  const Outcome o = run_cli({"expand", "--matrix", path("bad.matc"), "--basis", "pauli",
                             "--json", path("e.json")});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("line"), std::string::npos);
  const auto j = cli::Json::parse(slurp(path("e.json")));
  EXPECT_TRUE(j.contains("error"));
  EXPECT_EQ(j["exit_status"], "invalid-input");
  EXPECT_EQ(run_cli({"search", "--family", "nope"}).code, 2);
  EXPECT_EQ(run_cli({"bench", "--n", "1000", "--p", "1000"}).code, 2);
}

TEST_F(CliTest, MonomialSearch) {
  const Outcome done = run_cli({"search", "--family", "monomial-cube-root", "--json", path("m.json")});
  EXPECT_EQ(done.code, 0) << done.out;
  const std::string body = slurp(path("m.json"));
  EXPECT_NE(body.find("exhausted-none"), std::string::npos);
  const Outcome cut = run_cli({"search", "--family", "monomial-cube-root", "--dim", "2",
                               "--phase-order", "4", "--bound", "10"});
  EXPECT_EQ(cut.code, 3) << cut.out;
  EXPECT_NE(cut.out.find("exit_status: inconclusive"), std::string::npos);
}

TEST_F(CliTest, HollowSearch) {
  EXPECT_EQ(run_cli({"search", "--family", "hollow-involution", "--restarts", "5"}).code, 0);
  EXPECT_EQ(run_cli({"search", "--family", "hollow-involution", "--dim", "2", "--restarts", "5",
                     "--out", path("h")}).code, 0);
  EXPECT_TRUE(fs::exists(path("h/hollow_best.matc")));
}

TEST_F(CliTest, SearchWritesCandidate) {
  const Outcome o = run_cli({"--seed", "7", "search", "--restarts", "10", "--out", path("s")});
  EXPECT_EQ(o.code, 0) << o.out;
  std::vector<ComplexMatrix> fam;
  for (int i = 1; i <= 8; ++i) fam.push_back(load_matc(path("s/s_" + std::to_string(i) + ".matc")));
  EXPECT_LT(residual(fam), 1e-8);
}

TEST_F(CliTest, Bench) {
  const Outcome o = run_cli({"bench", "--n", "8", "--p", "4", "--trials", "2"});
  EXPECT_EQ(o.code, 0) << o.out;
}

}  // namespace
