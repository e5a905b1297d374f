#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "lrkit_cli/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lrkit");
  std::ostringstream out, err;
  const int status = lrkit::cli::parse_and_dispatch(args, out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, Coefficient) {
  EXPECT_EQ(run({"lr", "--lambda", "5,3", "--mu", "6,3", "--nu", "8,6,3", "--n", "3"}).out, "3\n");
  EXPECT_EQ(run({"lr", "--lambda", "0", "--mu", "4,2", "--nu", "4,2", "--n", "3"}).out, "1\n");
  for (const char* method : {"hive", "tableaux", "gl3", "auto"}) {
    EXPECT_EQ(run({"lr", "--lambda", "5,3", "--mu", "6,3", "--nu", "9,6,2", "--n", "3", "--method", method}).out,
              "3\n");
  }
}

TEST(Cli, Piecewise) {
  const Result r = run({"piecewise", "--family", "gl3", "--point", "1,1,1,1,0"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "5 piece 0 (C1)\n");
  const Result j = run({"--json", "piecewise", "--family", "gl4nr2", "--point", "2,2,1,1,0"});
  EXPECT_EQ(nlohmann::json::parse(j.out).at("value"), 8);
  const Result scan = run({"piecewise", "--family", "gl3", "--verify-range", "2"});
  EXPECT_EQ(scan.status, 0);
  EXPECT_EQ(scan.out.rfind("PASS", 0), 0u);
}

TEST(Cli, ChecksAndExitCodes) {
  EXPECT_EQ(run({"conj1", "--lambda", "5,3", "--mu", "6,3", "--n", "3"}).status, 0);
  EXPECT_EQ(run({"conj2", "--lambda", "3,3,2", "--mu", "4,4,1", "--n", "5", "--waive"}).status, 1);
  EXPECT_EQ(run({"repro-gl5"}).status, 0);
  EXPECT_EQ(run({"lr", "--lambda", "5,3"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"lr", "--lambda", "3,5", "--mu", "1", "--nu", "4"}).status, 2);
  EXPECT_EQ(run({"--version"}).status, 0);
}

TEST(Cli, Horn) {
  const Result r = run({"horn", "--family", "nr2", "--lambda", "4,2,2", "--mu", "2,1,1", "--nu", "3,3,3,3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("not a member"), std::string::npos);
  EXPECT_NE(r.out.find("#3"), std::string::npos);
}

TEST(Cli, Multiset) {
  EXPECT_EQ(run({"multiset", "--lambda", "5,3", "--mu", "6,3", "--n", "3", "--above", "1"}).out, "10\n");
  const Result j = run({"--json", "multiset", "--lambda", "5,3", "--mu", "6,3", "--n", "3"});
  EXPECT_EQ(nlohmann::json::parse(j.out).at("components"), 21);
}

}  // namespace
