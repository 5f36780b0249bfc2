#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run zp_run(std::vector<std::string> args) {
  args.insert(args.begin(), "zp");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = zp::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("zp_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, ZetaGolden) {
  auto r = zp_run({"zeta", "x^4*y", "x^7 + x*y^4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "(5s^2+16s+8)/((2+5s)(4+7s)(1+s))\n"
            "terms: 1/(4+7s) + 1/((2+5s)(3+6s)) + 1/((2+5s)(1+s)) + 1/((3+6s)(4+7s))\n");
}

TEST(Cli, PolesOfMaximalIdeal) {
  auto r = zp_run({"poles", "x", "y"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-2 (order 1) leading 2\n");
}

TEST(Cli, Classify) {
  auto r = zp_run({"classify", "x^4*y", "x^7 + x*y^4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-1:cond1(S1)\n-4/7:cond3(E3)\n-1/2:none\n-2/5:cond4(E1)\n");
}

TEST(Cli, PrincipalizeText) {
  auto r = zp_run({"principalize", "x^4*y", "x^7 + x*y^4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("blow-ups: 3\nstep 1: center (0,0) in chart 0 -> E1 (N=5, nu=2)\n", 0), 0u) << r.out;
}

TEST(Cli, Dot) {
  auto r = zp_run({"principalize", "--dot", "x^4*y", "x^7 + x*y^4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph diagram {", 0), 0u);
  EXPECT_EQ(zp_run({"zeta", "--dot", "x"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(zp_run({"zeta", "x + 1"}).code, 2);
  auto parse = zp_run({"zeta", "x + * y"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_EQ(parse.err.find("position"), parse.err.rfind("position")) << parse.err;
  EXPECT_EQ(zp_run({"zeta", "x + z"}).code, 2);
  auto irr = zp_run({"zeta", "y^2 - 2*x^2", "x^3"});
  EXPECT_EQ(irr.code, 3);
  EXPECT_NE(irr.err.find("t^2 - 2"), std::string::npos);
  EXPECT_EQ(zp_run({"zeta", "--max-blowups", "2", "x^4*y", "x^7 + x*y^4"}).code, 3);
  EXPECT_EQ(zp_run({"bogus"}).code, 2);
  EXPECT_EQ(zp_run({"family", "3", "5"}).code, 2);
}

TEST(Cli, Verify) {
  auto r = zp_run({"verify", "x^4*y", "x^7 + x*y^4"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("n: E1:3, E2:0, E3:1"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, VerifyFailsOnCorruptedDiagram) {
  const std::string bad = temp_file("bad.json", R"({"vertices": [{"id": "E1", "N": 2, "nu": 4}], "edges": [], "minimal": true})");
  auto r = zp_run({"verify", "--diagram-json", bad});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.out.find("nu-bound: FAIL"), std::string::npos) << r.out;
  const std::string junk = temp_file("junk.json", "{not json");
  EXPECT_EQ(zp_run({"zeta", "--diagram-json", junk}).code, 2);
}

TEST(Cli, DiagramJsonRoundTrip) {
  auto p = zp_run({"principalize", "--json", "x^4*y", "x^7 + x*y^4"});
  ASSERT_EQ(p.code, 0);
  auto j = nlohmann::json::parse(p.out);
  const std::string file = temp_file("golden.json", j["diagram"].dump());
  auto z = zp_run({"zeta", "--diagram-json", file});
  EXPECT_EQ(z.code, 0);
  EXPECT_EQ(z.out, zp_run({"zeta", "x^4*y", "x^7 + x*y^4"}).out);
}

TEST(Cli, Family) {
  auto r = zp_run({"family", "7", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chain: (5,2) (6,3) (7,4) [as predicted]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("pole -4/7"), std::string::npos);
}

TEST(Cli, Realize) {
  auto r = zp_run({"realize", "--", "-3/5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(a,b)=(5,3); verified pole -3/5\n");
  EXPECT_EQ(zp_run({"realize", "--", "-5/2"}).code, 2);
  EXPECT_EQ(zp_run({"realize", "--", "abc"}).code, 2);
}

TEST(Cli, Deterministic) {
  for (int i = 0; i < 3; ++i) {
    auto a = zp_run({"verify", "--json", "--seed", "5", "x*y*(x + y)", "x^6 + y^5"});
    auto b = zp_run({"verify", "--json", "--seed", "5", "x*y*(x + y)", "x^6 + y^5"});
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, Json) {
  auto r = zp_run({"zeta", "--json", "x^4*y", "x^7 + x*y^4"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["zeta"]["text"], "(5s^2+16s+8)/((2+5s)(4+7s)(1+s))");
  EXPECT_EQ(j["poles"].size(), 3u);
}

TEST(Cli, CheckFlag) {
  auto r = zp_run({"zeta", "--check", "x^4*y", "x^7 + x*y^4"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, BatchFiles) {
  const std::string a = temp_file("a.txt", "# golden\nx^4*y\n\nx^7 + x*y^4\n");
  const std::string b = temp_file("b.txt", "x\ny\n");
  const std::string c = temp_file("c.txt", "y^2 - x^3\n");
  auto serial = zp_run({"zeta", "-f", a, "-f", b, "-f", c});
  auto parallel = zp_run({"zeta", "--jobs", "2", "-f", a, "-f", b, "-f", c});
  EXPECT_EQ(serial.code, 0);
  EXPECT_EQ(serial.out, parallel.out);
  EXPECT_LT(serial.out.find("== " + a), serial.out.find("== " + b));
  EXPECT_LT(serial.out.find("== " + b), serial.out.find("== " + c));
  EXPECT_EQ(zp_run({"zeta", "-f", a, "x"}).code, 2);
}

TEST(Cli, VerifyFamilyMember) {
  auto r = zp_run({"verify", "x^5*y", "x^9 + y^6"});
  EXPECT_EQ(r.code, 0) << r.out;
}
