#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dzid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string model(const std::string& name) { return std::string(DZID_MODELS_DIR) + "/" + name; }

}  // namespace

TEST(Cli, Kdv) {
  const Result r = run({"kdv", "--genus", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("C(4) = 1/1152"), std::string::npos);
  EXPECT_NE(r.out.find("C(3,2) = -7/1920"), std::string::npos);
  EXPECT_NE(r.out.find("C(2,2,2) = 1/360"), std::string::npos);
  EXPECT_EQ(run({"kdv", "--genus", "1"}).out, "1/24 * log(v[1,1])\nC(1) = 1/24\n");
  EXPECT_EQ(run({"kdv", "--genus", "1", "--format", "latex"}).out, "\\frac{1}{24}\\log v^{1,1}\n");
  EXPECT_EQ(run({"kdv", "--genus", "0"}).code, 2);
  EXPECT_EQ(run({"kdv", "--genus", "5"}).code, 2);
  EXPECT_EQ(run({"kdv"}).code, 2);
  EXPECT_EQ(run({"kdv", "--genus", "2", "--format", "yaml"}).code, 2);
}

TEST(Cli, KdvJson) {
  const Result r = run({"kdv", "--genus", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["genus"], 3);
  EXPECT_EQ(j["terms"].size(), 11U);
  bool found = false;
  for (const auto& t : j["terms"])
    if (t["partition"] == std::vector<int>{7}) {
      EXPECT_EQ(t["coefficient"], "1/82944");
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Cli, Verify) {
  const Result pt = run({"verify"});
  EXPECT_EQ(pt.code, 0) << pt.out << pt.err;
  EXPECT_NE(pt.out.find("0 failed"), std::string::npos);
  const Result a2 = run({"verify", "--model", model("a2.frob"), "--genus1", "--max-p", "3"});
  EXPECT_EQ(a2.code, 0) << a2.out << a2.err;
  const Result all = run({"verify", "--model", model("a3.frob"), "--all", "--max-p", "2", "--format", "json"});
  EXPECT_EQ(all.code, 0) << all.out << all.err;
  EXPECT_NE(all.err.find("skipped"), std::string::npos);
  const auto j = nlohmann::json::parse(all.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_EQ(j["reports"].size(), 9U);
  EXPECT_EQ(run({"verify", "--model", model("a3_broken.frob")}).code, 2);
  EXPECT_EQ(run({"verify", "--model", model("nope.frob")}).code, 2);
  EXPECT_EQ(run({"verify", "--max-genus", "0"}).code, 2);
}

TEST(Cli, VerifyThreadsAgree) {
  const Result one = run({"verify", "--universal", "--aop", "--max-genus", "2", "--jobs", "1"});
  const Result three = run({"verify", "--universal", "--aop", "--max-genus", "2", "--jobs", "3"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, three.out);
}

TEST(Cli, Intersect) {
  EXPECT_EQ(run({"intersect", "--genus", "2", "--ks", "4"}).out, "1/1152\n");
  EXPECT_EQ(run({"intersect", "--genus", "1", "--ks", "1"}).out, "1/24\n");
  EXPECT_EQ(run({"intersect", "--genus", "0", "--ks", "0,0,0"}).out, "1\n");
  EXPECT_EQ(run({"intersect", "--genus", "1", "--ks", "1,2"}).out, "0\n");
  EXPECT_EQ(run({"intersect", "--genus", "1", "--ks", "-1"}).code, 2);
}

TEST(Cli, Trees) {
  const Result r = run({"trees", "--n", "2", "--chi", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("2 trees, a = (2,2)", 0), 0U);
  EXPECT_NE(r.out.find("((1,2))"), std::string::npos);
  EXPECT_NE(r.out.find("q=(0,0,3)  -6"), std::string::npos);
  const Result j = run({"trees", "--n", "3", "--chi", "6", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out).size(), 8U);
  EXPECT_EQ(run({"trees", "--n", "2", "--chi", "4", "--a", "1,2"}).code, 2);
  EXPECT_EQ(run({"trees", "--n", "0", "--chi", "4"}).code, 2);
}

TEST(Cli, Correlator) {
  const Result r = run({"correlator", "--model", model("a2.frob"), "--insertions", "1,0;1,0;1,0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "v[2,1]\n");
  EXPECT_EQ(run({"correlator", "--insertions", "1,0;1,0;1,0;1,0"}).out, "v[1,2]\n");
  EXPECT_EQ(run({"correlator", "--insertions", "1,x"}).code, 2);
  EXPECT_EQ(run({"correlator", "--insertions", "3,0"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
