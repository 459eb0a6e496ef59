#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "logmmp/hilbert.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args, const logmmp::VerifyOptions& options = {}) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = logmmp::cli::run(args, out, err, options);
  return {code, out.str(), err.str()};
}

std::string redump(const std::string& text) {
  return nlohmann::ordered_json::parse(text).dump(2) + "\n";
}

}  // namespace

TEST(CliWalls, GenusFiveHasTwoThirdsAtFive) {
  const auto r = run({"walls", "--genus", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("5  2/3"), std::string::npos) << r.out;
  const auto j = nlohmann::json::parse(run({"walls", "--genus", "5", "--format", "json"}).out);
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_EQ(j["rows"][2]["j"], 5);
  EXPECT_EQ(j["rows"][2]["alpha"], "2/3");
}

TEST(CliWalls, GenusTwo) {
  const auto r = run({"walls", "--genus", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "j,alpha,k,coefficient\n3,9/11,2,13/55\n3,9/11,3,39/55\n");
}

TEST(CliWalls, Errors) {
  EXPECT_EQ(run({"walls", "--genus", "1"}).code, 2);
  EXPECT_EQ(run({"walls"}).code, 2);
  EXPECT_EQ(run({"walls", "--genus", "3", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliIntersect, Examples) {
  auto r = run({"intersect", "--genus", "3", "--divisor", "B4", "--curve", "1,1,2,4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-1\n");
  r = run({"intersect", "--genus", "2", "--divisor", "L_alpha:9/11", "--curve", "1,1,1,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\n");
  r = run({"intersect", "--genus", "3", "--divisor", "0,0,1", "--curve", "4,2,1,1"});
  EXPECT_EQ(r.out, "-1\n");
  EXPECT_EQ(run({"intersect", "--genus", "3", "--divisor", "B4", "--curve", "1,1,1,1"}).code, 2);
  EXPECT_EQ(run({"intersect", "--genus", "3", "--divisor", "B9", "--curve", "1,1,2,4"}).code, 2);
  EXPECT_EQ(run({"intersect", "--genus", "3", "--divisor", "L_alpha:1/0", "--curve", "1,1,2,4"}).code, 2);
}

TEST(CliMu, TailOnTheTwoThirdsWall) {
  const auto r = run({"mu", "--family", "tail", "--b", "2", "--genus", "3", "--alpha", "2/3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["m"], "6");
  EXPECT_EQ(j["mu"], "0");
  EXPECT_EQ(j["classification"], "strictly_semistable");
}

TEST(CliMu, BridgeWithOracle) {
  const auto r = run({"mu", "--family", "bridge", "--b", "2", "--genus", "4", "--m", "3", "--oracle", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["mu"], "2");
  EXPECT_EQ(j["classification"], "stable");
  EXPECT_EQ(j["oracle"]["count"], 23);
  EXPECT_EQ(j["oracle"]["weight_sum"], 153);
}

TEST(CliMu, Errors) {
  EXPECT_EQ(run({"mu", "--family", "tail", "--b", "1", "--genus", "2", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"mu", "--family", "tail", "--b", "2", "--genus", "3", "--m", "2", "--alpha", "2/3"}).code, 2);
  EXPECT_EQ(run({"mu", "--family", "tail", "--b", "2", "--genus", "3"}).code, 2);
  EXPECT_EQ(run({"mu", "--family", "cusp", "--b", "2", "--genus", "3", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"mu", "--family", "tail", "--b", "2", "--genus", "3", "--alpha", "7/10"}).code, 2);
  EXPECT_EQ(run({"mu", "--family", "tail", "--b", "2", "--genus", "3", "--m", "5/2", "--oracle"}).code, 2);
}

TEST(CliNefScan, Examples) {
  auto j = nlohmann::json::parse(run({"nef-scan", "--genus", "3", "--alpha", "9/11", "--format", "json"}).out);
  ASSERT_EQ(j["zero"].size(), 1u);
  EXPECT_EQ(j["zero"][0], nlohmann::json::parse("[1,1,1,5]"));
  EXPECT_TRUE(j["negative"].empty());
  j = nlohmann::json::parse(run({"nef-scan", "--genus", "2", "--alpha", "1", "--format", "json"}).out);
  EXPECT_TRUE(j["negative"].empty());
  j = nlohmann::json::parse(run({"nef-scan", "--genus", "3", "--alpha", "1/2", "--format", "json"}).out);
  EXPECT_FALSE(j["negative"].empty());
  EXPECT_EQ(j["minimum"], "-7/4");
  EXPECT_EQ(run({"nef-scan", "--genus", "3", "--alpha", "1/2", "--level", "9"}).code, 2);
}

TEST(CliVerify, PassesAndFailsOnPerturbation) {
  const auto ok = run({"verify"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.substr(ok.out.size() - 5), "PASS\n");
  logmmp::VerifyOptions perturbed;
  perturbed.tail_weight = [](int b, const logmmp::Rat& m) {
    return logmmp::tail_weight_closed_form(b, m) * logmmp::Rat(2);
  };
  const auto bad = run({"verify"}, perturbed);
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL  tail_weight_closed_form"), std::string::npos) << bad.out;
}

TEST(CliProperty, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"walls", "--genus", "7"},
      {"walls", "--genus", "6", "--format", "json"},
      {"intersect", "--genus", "4", "--divisor", "L_alpha:2/3", "--curve", "1,2,3,4", "--format", "csv"},
      {"mu", "--family", "bridge", "--b", "3", "--genus", "6", "--m", "2", "--oracle"},
      {"nef-scan", "--genus", "5", "--alpha", "3/5", "--level", "3", "--format", "json"},
      {"verify", "--format", "json"},
  };
  for (const auto& c : commands) {
    const auto first = run(c);
    const auto second = run(c);
    EXPECT_EQ(first.code, 0);
    EXPECT_EQ(first.out, second.out);
  }
}

TEST(CliProperty, JsonRoundTripsByteIdentically) {
  const std::vector<std::vector<std::string>> commands = {
      {"walls", "--genus", "9", "--format", "json"},
      {"intersect", "--genus", "4", "--divisor", "B3", "--curve", "1,2,3,4", "--format", "json"},
      {"mu", "--family", "tail", "--b", "3", "--genus", "5", "--m", "7/3", "--format", "json"},
      {"mu", "--family", "tail", "--b", "2", "--genus", "3", "--m", "2", "--oracle", "--format", "json"},
      {"nef-scan", "--genus", "4", "--alpha", "1/2", "--format", "json"},
      {"verify", "--format", "json"},
  };
  for (const auto& c : commands) {
    const auto r = run(c);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(redump(r.out), r.out);
  }
}
