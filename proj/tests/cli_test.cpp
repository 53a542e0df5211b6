/*
 * Copyright 2026 The algcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracle.hpp"

using namespace algcodes;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("algcodes_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  static void write(const std::string& p, const std::string& text) { std::ofstream(p) << text; }
  std::string build(const std::string& preset) {
    const std::string spec = path(preset + ".spec");
    EXPECT_EQ(invoke({"build", "--preset", preset, "--out", spec}).code, 0);
    return spec;
  }
  static CodeSpec load(const std::string& p) {
    std::istringstream in(read(p));
    return read_codespec(in);
  }
  static ArrayFile load_array(const CodeSpec& s, const std::string& p) {
    std::istringstream in(read(p));
    return read_array(in, s.field, uses_line_format(s));
  }
  static void save_array(const CodeSpec& s, const std::string& p, const ArrayFile& a) {
    std::ostringstream out;
    write_array(out, a, uses_line_format(s));
    write(p, out.str());
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, InfoReportsParameters) {
  const Result h = invoke({"info", "--preset", "hermitian-q9", "--m", "11"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("n=24 k=15"), std::string::npos);
  EXPECT_NE(h.out.find("phi_m: 9 cells"), std::string::npos);
  const Result c = invoke({"info", "--preset", "hcrs-q9", "--m", "9"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("n=64 k=44"), std::string::npos);
  const Result r = invoke({"info", "--kind", "rs", "--field", "3,2,2:1:1", "--m", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("n=8 k=6"), std::string::npos);
}

TEST_F(CliTest, FailuresCarryReasonCodes) {
  const Result small = invoke({"info", "--preset", "hermitian-q9", "--m", "3"});
  EXPECT_EQ(small.code, 2);
  EXPECT_EQ(small.err.rfind("MTooSmall:", 0), 0u);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"info"}).err.rfind("UsageError:", 0), 0u);
  EXPECT_EQ(invoke({"info", "--preset", "nope"}).err.rfind("InvalidArgument:", 0), 0u);
  EXPECT_EQ(invoke({"info", "--kind", "rs", "--field", "3,2,1:0:1", "--m", "2"}).err.rfind("NonPrimitivePolynomial:", 0), 0u);
  EXPECT_EQ(invoke({"info", "--preset", "rs-q9", "--m", "7"}).err.rfind("BadRedundancy:", 0), 0u);
  const Result missing = invoke({"decode", "--spec", path("none.spec"), "--in", "x", "--out", "y"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.err.rfind("IoError:", 0), 0u);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, ConstructionFailureExitsThree) {
  CodeSpec s = make_curve_code(Field::gf9(), CurveSpec::hermitian(Field::gf9()), 11);
  s.wp = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<Point> pts(s.points.begin(), s.points.begin() + 9);
  s.basis_wp = vanishing_ideal_basis(pts, s.order, s.field);
  std::ostringstream text;
  write_codespec(text, s);
  write(path("bad.spec"), text.str());
  const Result r = invoke({"info", "--spec", path("bad.spec")});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind("NonGenericSupport:", 0), 0u);
}

TEST_F(CliTest, EncodeZeroInfo) {
  const std::string spec = build("hermitian-q9");
  std::string zeros;
  for (int i = 0; i < 8; ++i) zeros += "-1 -1 -1 -1 -1 -1 -1 -1\n";
  write(path("zero.arr"), zeros);
  for (const char* mode : {"systematic", "nonsystematic"}) {
    ASSERT_EQ(invoke({"encode", "--spec", spec, "--mode", mode, "--in", path("zero.arr"), "--out", path("c.arr")}).code, 0);
    std::string body = read(path("c.arr"));
    EXPECT_EQ(body.substr(body.find('\n') + 1), zeros);
    EXPECT_NE(read(path("c.arr.check")).find("-1 -1 -1 -1 -1 -1 -1 -1 -1\n"), std::string::npos);
  }
}

TEST_F(CliTest, EncodeDecodeRoundTripAllFamilies) {
  std::mt19937 rng(81);
  for (const char* preset : {"hermitian-q9", "hcrs-q9", "rs-q9"}) {
    const std::string spec = build(preset);
    const CodeSpec s = load(spec);
    for (const auto& [mode, layout] : {std::pair{"systematic", InfoLayout::Systematic},
                                       std::pair{"nonsystematic", InfoLayout::NonSystematic}}) {
      const auto info = oracle::random_word(rng, s.k);
      save_array(s, path("info.arr"), info_to_array(s, info, layout));
      ASSERT_EQ(invoke({"encode", "--spec", spec, "--mode", mode, "--in", path("info.arr"), "--out", path("c.arr")}).code, 0);
      const auto c = array_to_word(s, load_array(s, path("c.arr")));
      EXPECT_TRUE(is_codeword(s, c));
      if (layout == InfoLayout::Systematic) {
        for (int t = 0; t < s.k; ++t) EXPECT_EQ(c[s.wp_prime[t]], info[t]);
      }

      auto received = c;
      for (int e = 0; e < s.max_errors; ++e) received[(e * 5 + 1) % s.n] = s.field.add(received[(e * 5 + 1) % s.n], Elt{e});
      save_array(s, path("r.arr"), word_to_array(s, received));
      const Result d = invoke({"decode", "--spec", spec, "--mode", mode, "--in", path("r.arr"), "--out", path("d.arr"),
                            "--info-out", path("di.arr")});
      ASSERT_EQ(d.code, 0) << d.err;
      EXPECT_EQ(d.out.rfind("decoded errors=" + std::to_string(s.max_errors) + " voted-cells=", 0), 0u);
      EXPECT_EQ(array_to_word(s, load_array(s, path("d.arr"))), c);
      EXPECT_EQ(array_to_info(s, load_array(s, path("di.arr")), layout), info);
    }
  }
}

TEST_F(CliTest, OverloadedWordsExitFourOrDecodeToACodeword) {
  const std::string spec = build("hermitian-q9");
  const CodeSpec s = load(spec);
  std::mt19937 rng(82);
  int fours = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto w = encode_systematic(s, oracle::random_word(rng, s.k));
    std::vector<int> idx(24);
    for (int i = 0; i < 24; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int e = 0; e < 5; ++e) w[idx[e]] = s.field.add(w[idx[e]], oracle::random_nonzero(rng));
    save_array(s, path("r.arr"), word_to_array(s, w));
    const Result d = invoke({"decode", "--spec", spec, "--in", path("r.arr"), "--out", path("d.arr")});
    if (d.code == 4) {
      ++fours;
      EXPECT_EQ(d.err.rfind("DecodingFailure:", 0), 0u);
    } else {
      ASSERT_EQ(d.code, 0);
      EXPECT_TRUE(is_codeword(s, array_to_word(s, load_array(s, path("d.arr")))));
    }
  }
  EXPECT_GT(fours, 0);
}

TEST_F(CliTest, ExtendedEncodeAndDecodeRejection) {
  const std::string spec = build("hermitian-q9");
  const CodeSpec s = load(spec);
  std::mt19937 rng(83);
  const auto info = oracle::random_word(rng, s.k + 3);
  save_array(s, path("info.arr"), info_to_array(s, info, InfoLayout::Extended));
  ASSERT_EQ(invoke({"encode", "--spec", spec, "--mode", "extended", "--in", path("info.arr"), "--out", path("c.arr")}).code, 0);
  const auto c = array_to_word(s, load_array(s, path("c.arr")));
  ASSERT_EQ(c.size(), 27u);
  EXPECT_TRUE(is_codeword(s, c));
  EXPECT_NE(read(path("c.arr")).find("zero-points\n(-1, -1): "), std::string::npos);
  const Result d = invoke({"decode", "--spec", spec, "--in", path("c.arr"), "--out", path("d.arr")});
  EXPECT_EQ(d.code, 2);
  EXPECT_EQ(d.err.rfind("ExtendedDecodeUnsupported:", 0), 0u);
}

TEST_F(CliTest, SimulateIsDeterministicAndThreadIndependent) {
  const std::string spec = build("hermitian-q9");
  const Result a = invoke({"simulate", "--spec", spec, "--errors", "3", "--trials", "60", "--seed", "9", "--csv", path("a.csv")});
  const Result b = invoke({"simulate", "--spec", spec, "--errors", "3", "--trials", "60", "--seed", "9", "--csv", path("b.csv"),
                        "--threads", "4"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "trials=60 errors=3 success=60 failure=0 miscorrection=0\n");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(read(path("a.csv")), read(path("b.csv")));
  EXPECT_EQ(read(path("a.csv")).substr(0, 30), "trial,seed,outcome,corrected\n0");
  EXPECT_NE(a.err.find("wall-time"), std::string::npos);
  const Result zero = invoke({"simulate", "--preset", "rs-q9", "--errors", "0", "--trials", "25"});
  EXPECT_EQ(zero.out, "trials=25 errors=0 success=25 failure=0 miscorrection=0\n");
  EXPECT_EQ(invoke({"simulate", "--preset", "rs-q9", "--errors", "9", "--trials", "1"}).code, 2);
}

TEST_F(CliTest, SimulatorSeedsPerTrial) {
  const CodeSpec s = make_preset("hcrs-q9");
  const cli::Simulation whole = cli::simulate(s, DecodeMode::Systematic, 4, 20, 100);
  const cli::Simulation tail = cli::simulate(s, DecodeMode::Systematic, 4, 10, 110);
  EXPECT_EQ(whole.success, 20);
  for (int t = 0; t < 10; ++t) EXPECT_EQ(whole.trials[10 + t].corrected, tail.trials[t].corrected);
  cli::SplitMix64 g(0);
  EXPECT_EQ(g.next(), 0xe220a8397b1dcdafULL);  // published first output for seed 0
}

TEST_F(CliTest, GroebnerBases) {
  const std::string spec = build("hermitian-q9");
  const Result all = invoke({"groebner", "--spec", spec, "--ideal", "all"});
  ASSERT_EQ(all.code, 0);
  EXPECT_NE(all.out.find("staircase 24\n"), std::string::npos);
  EXPECT_NE(all.out.find("= x^8 + a^4\n"), std::string::npos);
  EXPECT_NE(all.out.find("= y^3 + a^4 x^4 + y\n"), std::string::npos);

  const Result one = invoke({"groebner", "--preset", "rs-q9", "--m", "0", "--ideal", "wp"});
  EXPECT_NE(one.out.find("= x + a^4\n"), std::string::npos);
  EXPECT_NE(one.out.find("= y + a^4\n"), std::string::npos);

  // Two planted errors on the zero codeword.
  const CodeSpec s = load(spec);
  std::vector<Elt> w(24);
  w[3] = Elt{1};
  w[17] = Elt{6};
  save_array(s, path("r.arr"), word_to_array(s, w));
  const Result e = invoke({"groebner", "--spec", spec, "--ideal", "errors", "--in", path("r.arr")});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("staircase 2\n"), std::string::npos);
  std::string line;
  for (Elt v : parity(s, w)) line += std::to_string(v.log) + " ";
  write(path("syn.txt"), "# planted\n" + line + "\n");
  const Result e2 = invoke({"groebner", "--spec", spec, "--ideal", "errors", "--syndromes", path("syn.txt")});
  EXPECT_EQ(e2.out, e.out);
  EXPECT_EQ(invoke({"groebner", "--spec", spec, "--ideal", "errors"}).code, 2);
}
