#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "idealforge/cli/app.hpp"
#include "idealforge/cli/syntax.hpp"
#include "idealforge/random.hpp"

namespace idealforge::cli {
namespace {

namespace fs = std::filesystem;

TEST(Syntax, ParsesExamples) {
  const SymbolicSet f2 = parse_symbolic("level 2: x0 notin {0}");
  EXPECT_EQ(f2, SymbolicSet::atom(2, 0, Predicate::not_in({0})));
  const SymbolicSet two = parse_symbolic("level 2: (x0 in {1,2} & x1 notin {3}) | x0 in {5}");
  EXPECT_EQ(two.conjuncts().size(), 2u);
  EXPECT_EQ(print(two), "level 2: x0 in {1,2} & x1 notin {3} | x0 in {5}");
}

TEST(Syntax, ReportsPositions) {
  try {
    (void)parse_symbolic("level 2: x2 in {1}");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 10u);
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
  EXPECT_THROW((void)parse_symbolic("level 2: x0 in {1"), ParseError);
  EXPECT_THROW((void)parse_sum("sum: tail(head=level 2: all; last=level 1: all; from=2)"), ParseError);
  EXPECT_THROW((void)parse_certified("certified family A: cell 1=(1)"), ParseError);
  EXPECT_THROW((void)parse("level 1: x0 in {1} garbage"), ParseError);
}

TEST(Syntax, RoundTripsGeneratedExpressions) {
  Rng rng(2024);
  for (int k = 0; k < 500; ++k) {
    Rng r = rng.split(k);
    const SymbolicSet s = random_symbolic_set(r, 1 + r.below(4));
    ASSERT_EQ(parse_symbolic(print(s)), s) << print(s);

    const SumSymbolicSet m = random_sum_set(r);
    const std::string text = print(m);
    const SumSymbolicSet back = parse_sum(text);
    ASSERT_EQ(print(back), text);
    ASSERT_TRUE(sum_same_set(back, m)) << text;

    const CertifiedSet a = random_certified_set(r, k % 2 ? Family::B : Family::A, r.below(3));
    ASSERT_EQ(parse_certified(print(a)), a) << print(a);
  }
}

class RunTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("idealforge-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int run_cli(const std::vector<std::string>& args, std::string& out) {
    std::ostringstream o;
    std::ostringstream e;
    const int code = run(args, o, e);
    out = o.str();
    return code;
  }

  CheckOutcome check_text(const std::string& text) { return check_document(from_json(Json::parse(text))); }

  fs::path dir_;
};

TEST_F(RunTest, MemberNonMemberAndTamper) {
  const std::string f2 = write("f2.setx", "level 2: x0 notin {0}\n");
  std::string doc;
  EXPECT_EQ(run_cli({"member", "--ideal", "fin^2", "--set", f2}, doc), kFail);
  const Json j = Json::parse(doc);
  EXPECT_EQ(j["verdict"], "non-member");
  EXPECT_TRUE(check_text(doc).valid);

  Json tampered = j;
  tampered["certificate"]["cofinite_conjunct"] = 7;
  EXPECT_FALSE(check_document(from_json(tampered)).valid);

  Json flipped = j;
  flipped["verdict"] = "member";
  EXPECT_FALSE(check_document(from_json(flipped)).valid);

  Json bad_digest = j;
  bad_digest["claim"]["inputs"]["set"] = "level 2: x0 in {0}";
  EXPECT_THROW((void)from_json(bad_digest), std::invalid_argument);

  const std::string doc_path = write("verdict.json", tampered.dump(2));
  std::string out;
  EXPECT_EQ(run_cli({"check", "--doc", doc_path}, out), kFail);
}

TEST_F(RunTest, UsageAndParseErrors) {
  std::string out;
  EXPECT_EQ(run_cli({"member", "--ideal", "fin^2"}, out), kUsage);
  EXPECT_EQ(run_cli({"nonsense"}, out), kUsage);
  const std::string bad = write("bad.setx", "level 2: x2 in {1}\n");
  EXPECT_EQ(run_cli({"member", "--ideal", "fin^2", "--set", bad}, out), kUsage);
}

TEST_F(RunTest, DocumentsAreReproducibleAndCheck) {
  const std::string sumx = write("m.sumx", "sum:\n  tail(head=level 0: all; last=level 3: x0 in {0}; from=3)\n");
  const std::string cfx = write("a.cfx", "certified family B:\n  bundle 1: x1 in {2}\n  cell 0=(1) 2=(0,0,2)\n");
  const std::vector<std::vector<std::string>> commands{
      {"member", "--ideal", "finomega", "--set", sumx},
      {"member", "--ideal", "finpow-omega", "--set", sumx},
      {"member", "--ideal", "finprime:B", "--set", cfx},
      {"system", "--name", "exindlim", "--check", "condition-c"},
      {"system", "--name", "standard", "--check", "coherence"},
      {"demo", "exindlim", "--max-i", "3", "--samples", "10", "--seed", "7"},
      {"embed", "mc", "--count", "200", "--verify", "--generators", "5", "--seed", "3"},
      {"oracle", "crosscheck", "--suite", "symcore-enum", "--trials", "20", "--seed", "1"},
  };
  for (const auto& cmd : commands) {
    std::string first;
    std::string second;
    const int code = run_cli(cmd, first);
    EXPECT_EQ(run_cli(cmd, second), code) << cmd[0];
    EXPECT_EQ(first, second) << cmd[0];
    const CheckOutcome c = check_text(first);
    EXPECT_TRUE(c.valid) << cmd[0] << ": " << c.reason;
  }
}

}  // namespace
}  // namespace idealforge::cli
