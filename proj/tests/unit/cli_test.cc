#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "advbound/cli/cli.h"
#include "advbound/cli/report.h"

namespace advbound::cli {
namespace {

const std::string kFixtures = ADVBOUND_FIXTURES;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
  nlohmann::json report() const { return nlohmann::json::parse(out); }
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("advbound_cli_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

TEST(CliTest, ParseFamily) {
  const auto r = run_cli({"parse", "--family", "or", "--n", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = r.report();
  EXPECT_EQ(doc["schema"], "advbound-report/1");
  EXPECT_EQ(doc["results"]["function"]["table"]["rows"].size(), 4u);
  EXPECT_TRUE(doc["pass"].get<bool>());
}

TEST(CliTest, ParseFormulaReportsStructure) {
  const auto r = run_cli({"parse", "--formula", "(x1|x2)&~x3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto f = r.report()["results"]["formula"];
  EXPECT_TRUE(f["read_once"].get<bool>());
  EXPECT_EQ(f["leaves"], 3);
  EXPECT_EQ(f["max_variable"], 3);
}

TEST(CliTest, PartialTableFile) {
  const auto path = temp_file("partial.json", R"({"n": 2, "rows": [{"x": "00", "f": 0}, {"x": "11", "f": 1}]})");
  const auto r = run_cli({"parse", "--table", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto s = r.report()["results"]["function"];
  EXPECT_FALSE(s["total"].get<bool>());
  EXPECT_EQ(s["table"]["rows"].size(), 2u);
}

TEST(CliTest, ConflictingSourcesAreUsageErrors) {
  const auto r = run_cli({"parse", "--family", "and", "--n", "2", "--formula", "x1&x2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--formula"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run_cli({"parse"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"parse", "--family", "xor3", "--n", "2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"parse", "--table", "/nonexistent/table.json"}).code, kExitUsage);
}

TEST(CliTest, HelpExitsCleanly) { EXPECT_EQ(run_cli({"--help"}).code, kExitOk); }

TEST(CliTest, GadgetIsExact) {
  const auto r = run_cli({"gadget", "--gate", "and", "--beta", "3,4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto g = r.report()["results"]["gadget"];
  EXPECT_EQ(g["value"].get<double>(), 5.0);
  EXPECT_NEAR(g["lower"].get<double>(), 5.0, 1e-12);
  EXPECT_NEAR(g["upper"].get<double>(), 5.0, 1e-12);
  EXPECT_EQ(run_cli({"gadget", "--gate", "and", "--beta", "3,-4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"gadget", "--gate", "xor", "--beta", "1,1"}).code, kExitUsage);
}

TEST(CliTest, ReadOnceBound) {
  const auto r = run_cli({"readonce", "(x1|x2)&x3", "--certificate"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto res = r.report()["results"];
  EXPECT_NEAR(res["value"].get<double>(), std::sqrt(3.0), 1e-12);
  EXPECT_EQ(res["trace"].size(), 5u);
  EXPECT_TRUE(res.contains("certificate"));
  const auto weighted = run_cli({"readonce", "x1&x2", "--alpha", "3,4"});
  EXPECT_NEAR(weighted.report()["results"]["value"].get<double>(), 5.0, 1e-12);
}

TEST(CliTest, ReadOnceRejectsRepeatedVariables) {
  const auto r = run_cli({"readonce", "x1|x1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("read-once"), std::string::npos) << r.err;
}

TEST(CliTest, BoundOnOr) {
  const auto r = run_cli({"bound", "--family", "or", "--n", "2", "--seed", "7", "--restarts", "4", "--iterations",
                          "2000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = r.report();
  EXPECT_EQ(doc["seed"], 7);
  const auto cert = doc["results"]["certificate"];
  EXPECT_NEAR(cert["lower"]["value"].get<double>(), std::sqrt(2.0), 1e-3);
  EXPECT_NEAR(cert["upper"]["value"].get<double>(), std::sqrt(2.0), 1e-3);
  EXPECT_EQ(run_cli({"bound", "--family", "or", "--n", "2", "--alpha", "1,0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"bound", "--family", "or", "--n", "2", "--alpha", "1,1,1"}).code, kExitUsage);
}

TEST(CliTest, ComposeWithCertificates) {
  const auto r = run_cli({"compose", "--outer", "and:2", "--inner", "and:2", "id:1", "--certify", "--restarts", "2",
                          "--iterations", "1000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto res = r.report()["results"];
  EXPECT_EQ(res["composed"]["arity"], 3);
  EXPECT_EQ(res["offsets"], (std::vector<int>{0, 2}));
  EXPECT_NEAR(res["lower"].get<double>(), std::sqrt(3.0), 1e-2);
  EXPECT_LE(res["lower"].get<double>(), res["upper"].get<double>() + 1e-9);
}

TEST(CliTest, CheckGammaFixture) {
  const auto r = run_cli({"check-gamma", "--gamma", kFixtures + "/and2_cost34_gamma.json", "--witness",
                          kFixtures + "/and2_cost34_witness.json", "--alpha", "3,4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto res = r.report()["results"];
  EXPECT_NEAR(res["adv"]["value"].get<double>(), 5.0, 1e-12);
  EXPECT_NEAR(res["mm"]["value"].get<double>(), 5.0, 1e-12);
  EXPECT_TRUE(res["weak_duality"].get<bool>());
}

TEST(CliTest, CheckGammaFlagsInvalidMatrix) {
  const auto path = temp_file("bad_gamma.json", R"({"labels": ["0", "1"], "entries": [[1, 1], [1, 0]],
    "function": {"n": 1, "rows": [{"x": "0", "f": 0}, {"x": "1", "f": 1}]}})");
  const auto r = run_cli({"check-gamma", "--gamma", path});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_FALSE(r.report()["pass"].get<bool>());
}

TEST(CliTest, VerifyIterationDepthOne) {
  const auto r = run_cli({"verify-iteration", "--family", "or", "--n", "2", "--depth", "1", "--restarts", "2",
                          "--iterations", "1000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.report()["results"]["report"]["pass"].get<bool>());
}

TEST(CliTest, OutputIsDeterministicApartFromTiming) {
  const std::vector<std::string> args{"bound", "--family", "and", "--n", "2", "--alpha", "1,2", "--seed", "3",
                                      "--restarts", "2", "--iterations", "500"};
  auto a = run_cli(args).report();
  auto b = run_cli(args).report();
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["inputs_digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
  auto other = args;
  other[8] = "4";
  EXPECT_NE(run_cli(other).report()["inputs_digest"], a["inputs_digest"]);
}

TEST(ReportTest, RoundTripsAndChecksSchema) {
  Report r;
  r.command = {"gadget", "--gate", "or"};
  r.inputs_digest = digest_string(fnv1a64("abc"));
  r.seed = 12;
  r.results = {{"value", 1.5}};
  r.pass = false;
  r.elapsed_ms = 3.25;
  const auto back = report_from_json(to_json(r));
  EXPECT_EQ(back.command, r.command);
  EXPECT_EQ(back.inputs_digest, r.inputs_digest);
  EXPECT_EQ(back.seed, 12u);
  EXPECT_EQ(back.results, r.results);
  EXPECT_FALSE(back.pass);
  EXPECT_EQ(back.elapsed_ms, 3.25);
  auto doc = to_json(r);
  doc["schema"] = "other/2";
  EXPECT_THROW(report_from_json(doc), std::invalid_argument);
}

TEST(ReportTest, KnownDigests) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(digest_string(0x1ULL), "fnv1a64:0000000000000001");
}

}  // namespace
}  // namespace advbound::cli
