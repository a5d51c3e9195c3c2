#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "ak/ak.hpp"
#include "commands.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = akt::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(AK_FIXTURES_DIR) + "/" + name; }

ak::Json json_of(const Outcome& o) { return ak::Json::parse(o.out); }

// Exit status of the real binary, output discarded.
int binary_exit(const std::string& args) {
  const std::string cmd = std::string(AKT_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, ValidateGoodFixture) {
  const auto o = run({"validate", fixture("ex2.json")});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("ok: ex2"), std::string::npos);
}

TEST(Cli, ValidateDegenerate) {
  const auto o = run({"validate", fixture("ex2_degenerate.json")});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("Degenerate"), std::string::npos);
}

TEST(Cli, ValidateBrokenJacobiNamesTheTriple) {
  const auto o = run({"validate", fixture("ex1_broken_jacobi.json")});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("JacobiViolation"), std::string::npos);
  EXPECT_NE(o.err.find("(X1, X2, Y2)"), std::string::npos);
  EXPECT_NE(o.err.find("Y1: -1"), std::string::npos);
}

TEST(Cli, ValidateMissingFileIsInvalid) {
  const auto o = run({"validate", fixture("does_not_exist.json")});
  EXPECT_EQ(o.code, 1);  // not a file, so looked up as a catalog name
  EXPECT_EQ(run({"validate", "ex3"}).code, 0);
}

TEST(Cli, AnalyzeEx4) {
  const auto j = json_of(run({"--report", "json", "analyze", "ex4"}));
  EXPECT_EQ(j["nijenhuis"]["image"]["involutive"], true);
  EXPECT_EQ(j["nijenhuis"]["image_perp"]["involutive"], false);
  EXPECT_EQ(j["nijenhuis"]["norm_sq_N"], "200");
}

TEST(Cli, AnalyzeThurstonAlpha) {
  const auto j = json_of(run({"analyze", "thurston", "--alpha", "3", "--report", "json"}));
  EXPECT_EQ(j["name"], "thurston(3)");
  EXPECT_EQ(j["nijenhuis"]["norm_sq_N"], "24");
  EXPECT_EQ(j["curvature"]["scalar_g"], "-3/2");
  EXPECT_EQ(run({"analyze", "thurston", "--alpha", "0"}).code, 1);
  EXPECT_EQ(run({"analyze", "thurston", "--alpha", "x"}).code, 2);
}

TEST(Cli, AnalyzeDim6) {
  const auto j = json_of(run({"--report", "json", "analyze", "dim6"}));
  EXPECT_EQ(j["predicates"]["maximally_non_integrable"], true);
  EXPECT_EQ(j["nabla_N"]["label"], "maximally non-integrable");
}

TEST(Cli, AnalyzeFixtureAndFull) {
  const auto o = run({"analyze", fixture("ex2.json"), "--report", "json", "--full"});
  ASSERT_EQ(o.code, 0);
  const auto j = json_of(o);
  EXPECT_EQ(j["name"], "ex2");
  EXPECT_TRUE(j.contains("tensors"));
  EXPECT_EQ(j["hash"], ak::triple_hash(ak::builtin("ex2").triple));
}

TEST(Cli, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--report", "json", "--full", "analyze", "ex3"},
        std::vector<std::string>{"analyze", "dim6"}, std::vector<std::string>{"goldens"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, Goldens) {
  const auto o = run({"goldens"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  const auto j = json_of(run({"goldens", "--filter", "twistor", "--report", "json"}));
  ASSERT_FALSE(j["rows"].empty());
  for (const auto& r : j["rows"]) EXPECT_EQ(r["group"], "twistor");
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_EQ(run({"goldens", "--filter", "nothing"}).code, 1);
  for (const auto& r : json_of(run({"goldens", "--filter", "ex3", "--report", "json"}))["rows"])
    EXPECT_EQ(r["subject"], "ex3");
}

TEST(Cli, GoldensDetectSwappedExpectations) {
  auto entries = ak::catalog();
  for (auto& e : entries)
    if (e.name == "ex3") std::swap(e.expected.image_involutive, e.expected.perp_involutive);
  const auto rows = ak::run_goldens(entries, "ex3");
  const auto fails = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.pass; });
  EXPECT_EQ(fails, 2);
}

TEST(Cli, Examples) {
  const auto list = run({"examples", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("thurston(1/2)"), std::string::npos);
  const auto show = run({"examples", "show", "thurston", "--alpha", "2"});
  EXPECT_EQ(show.code, 0);
  const auto t = ak::triple_from_json(ak::Json::parse(show.out));
  EXPECT_EQ(t.j()(2, 0), ak::Scalar(2));
  EXPECT_EQ(run({"examples", "show", "ex9"}).code, 1);
}

TEST(Cli, Construct) {
  const auto p = run({"construct", "--base", "ex2", "--op", "product"});
  ASSERT_EQ(p.code, 0);
  EXPECT_EQ(ak::triple_from_json(ak::Json::parse(p.out)).dim(), 6u);
  const auto c = run({"construct", "--base", "ex2", "--op", "character", "--xi", "1,0,0,0"});
  ASSERT_EQ(c.code, 0);
  const auto t = ak::triple_from_json(ak::Json::parse(c.out));
  EXPECT_EQ(ak::classify(t).image.dim(), 4u);
  EXPECT_EQ(run({"construct", "--base", "ex2", "--op", "character", "--xi", "0,1,0,0"}).code, 2);
  EXPECT_EQ(run({"construct", "--base", "ex2", "--op", "character", "--xi", "0,0,0,0"}).code, 2);
  EXPECT_EQ(run({"construct", "--base", "ex2", "--op", "character", "--xi", "1,0"}).code, 2);
  EXPECT_EQ(run({"construct", "--base", "ex2", "--op", "sideways"}).code, 1);
}

TEST(Cli, Synthesize) {
  const auto o = run({"synthesize", "--n", "4", "--k", "2", "--inv-image", "n", "--inv-perp", "y"});
  ASSERT_EQ(o.code, 0);
  const auto r = ak::classify(ak::triple_from_json(ak::Json::parse(o.out)));
  EXPECT_EQ(r.image.dim(), 4u);
  EXPECT_FALSE(r.image_involutive);
  EXPECT_TRUE(r.perp_involutive);
  EXPECT_EQ(run({"synthesize", "--n", "2", "--k", "2"}).code, 1);
}

TEST(Cli, NspaceDim) {
  const auto o = run({"nspace-dim", "--n", "3", "--report", "json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(json_of(o)["dim"], 16);
  EXPECT_EQ(run({"nspace-dim", "--n", "0"}).code, 1);
}

TEST(Cli, Twistor) {
  const auto j = json_of(run({"twistor", "--n", "2", "--report", "json"}));
  EXPECT_EQ(j["J+"]["integrable"], true);
  EXPECT_EQ(j["J-"]["maximally_non_integrable"], true);
  EXPECT_EQ(j["J-"]["positive"], true);
  EXPECT_EQ(j["J+"]["positive"], false);
  EXPECT_FALSE(j["J+"]["witness"].is_null());
  const auto minus = json_of(run({"twistor", "--n", "3", "--sign", "-", "--report", "json"}));
  EXPECT_FALSE(minus.contains("J+"));
  EXPECT_EQ(minus["J-"]["image_rank"], 12);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({"--report", "xml", "analyze", "ex1"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BinaryExitCodes) {
  EXPECT_EQ(binary_exit("validate " + fixture("ex2.json")), 0);
  EXPECT_EQ(binary_exit("validate " + fixture("ex2_degenerate.json")), 2);
  EXPECT_EQ(binary_exit("goldens"), 0);
  EXPECT_EQ(binary_exit("no-such-command"), 1);
}
