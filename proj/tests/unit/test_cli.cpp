#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "ncreal/json_io.hpp"

using namespace ncreal;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = ncreal::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

const char* kCubic = "# cubic system\nx1^3 + 1\nx1^2 + x1*^2\nx1 x1* - x1*^2\nx1* x1 - 5\n";

}  // namespace

TEST(Cli, RealCommutator) {
  const CliRun r = invoke({"real", "-e", "x1 x1* - x1* x1 - 1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status: Real"), std::string::npos);
}

TEST(Cli, Unshrinkable) {
  const CliRun r = invoke({"unshrinkable", "x1 x2* x2 x1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  EXPECT_EQ(invoke({"unshrinkable", "x1 x1* x2"}).out, "false\nu = x1, v = x2\n");
  EXPECT_EQ(invoke({"unshrinkable", "x1 + x2"}).code, 1);
}

TEST(Cli, GroebnerFile) {
  const CliRun r = invoke({"groebner", "-f", temp_file("cubic.txt", kCubic)});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x1 x1*^2 - 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("x1* x1 - 5\n"), std::string::npos);
}

TEST(Cli, Factor) {
  EXPECT_EQ(invoke({"factor", "6 x1 x1 x1 + 6 x1 x2 x1 + 6 x2 x1 x1 + 6 x2 x2 x1 + 6 x1 x1 x2 + 6 x2 x1 x2"}).code, 0);
  EXPECT_EQ(invoke({"factor", "x1^2 - x2^2 + x2 x1 - x1 x2"}).out, "1 · (x1 + x2)·(x1 - x2)\n");
  EXPECT_EQ(invoke({"factor", "x1 + 1"}).code, 1);
}

TEST(Cli, Sos) {
  EXPECT_EQ(invoke({"sos", "x1* x1 + x1* x2* + x2 x1 + x2 x2*"}).out.substr(0, 9), "sos: yes\n");
  const CliRun no = invoke({"sos", "x1^2 + x1*^2"});
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(no.out.substr(0, 8), "sos: no\n");
  EXPECT_EQ(invoke({"sos", "4 + 2 x1 + 2 x1* + x1 x1* + x1* x1"}).out.substr(0, 9), "sos: yes\n");
}

TEST(Cli, JsonVerdictVerifies) {
  const CliRun r = invoke({"real", "-e", "x1 x1* - x1*^2 + 2 x1 + 4", "--json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("status"), "NotReal");
  const std::string cert = temp_file("verdict.json", r.out);
  const CliRun v = invoke({"verify", "-e", "x1 x1* - x1*^2 + 2 x1 + 4", "--cert", cert});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("accepted"), std::string::npos);
  const CliRun wrong = invoke({"verify", "-e", "x1 x1* - x1* x1 - 1", "--cert", cert});
  EXPECT_EQ(wrong.code, ncreal::cli::kRejected);
}

TEST(Cli, BareCertificate) {
  const std::string cert =
      temp_file("bare.json", R"({"weights":["1"],"polys":["2 x1* + 4"],"multipliers":["x1 + 2"]})");
  EXPECT_EQ(invoke({"verify", "-e", "x1 x1* - x1*^2 + 2 x1 + 4", "--cert", cert}).code, 0);
}

TEST(Cli, TextAndJsonAgree) {
  for (const char* p : {"x1 x1* - x1* x1 - 1", "x1 - x1* + 1", "x1 x1* x2", "x1^2 + x1*^2", "x1 x2 + 1"}) {
    const CliRun text = invoke({"real", "-e", p});
    const CliRun json = invoke({"real", "-e", p, "--json"});
    EXPECT_EQ(text.code, json.code);
    const std::string status = Json::parse(json.out).at("status");
    EXPECT_NE(text.out.find("status: " + status + "\n"), std::string::npos) << p;
  }
}

TEST(Cli, UndecidedExitCode) {
  // A tiny iteration budget leaves a nontrivial SDP undecided.
  const CliRun r = invoke({"real", "--method", "sdp", "--max-iter", "1", "-e", "x1 x2 x1* + x2* x2 - x1"});
  if (r.out.find("status: Inconclusive") != std::string::npos ||
      r.out.find("status: NumericallyReal") != std::string::npos) {
    EXPECT_EQ(r.code, ncreal::cli::kUndecided);
  } else {
    EXPECT_EQ(r.code, 0);
  }
}

TEST(Cli, Eval) {
  const std::string pt = temp_file("pt.json", R"({"n":2,"X":[[[0,1],[0,0]]],"v":[1,0]})");
  const CliRun r = invoke({"eval", "-e", "x1 x1* - x1* x1 - 1", "--point", pt, "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).at("in_zero_set"), true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"bogus"}).code, 1);
  EXPECT_EQ(invoke({"real"}).code, 1);
  EXPECT_EQ(invoke({"real", "-e", "x1 +"}).code, 1);
  EXPECT_EQ(invoke({"real", "-e", "x1", "--method", "magic"}).code, 1);
  EXPECT_EQ(invoke({"groebner", "-f", "/nonexistent/file"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, Parse) {
  const CliRun r = invoke({"parse", "-e", "x1 + x1 - 1/2", "-e", "x2*", "--json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("num_vars"), 2);
  EXPECT_EQ(j.at("polynomials")[0], "2 x1 - 1/2");
}
