#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(GLINK_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(GLINK_DATA) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

nlohmann::json as_json(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, HVectorOfADoublePoint) {
  auto r = run("hvector " + data("fatpoint_a2.json") + " --format text");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("h-vector (1, 3)"), std::string::npos);
  auto j = as_json(run("hvector " + data("fatpoint_a2.json")));
  EXPECT_EQ(j["h_vector"], nlohmann::json::array({1, 3}));
  EXPECT_EQ(j["prime"], 32003);
  EXPECT_EQ(j["seed"], 1);
  EXPECT_TRUE(j["cohen_macaulay"].get<bool>());
}

TEST(Cli, HVectorOfCompleteIntersection) {
  auto j = as_json(run("hvector " + data("ci_2_3.json")));
  EXPECT_EQ(j["h_vector"], nlohmann::json::array({1, 2, 2, 1}));
  EXPECT_EQ(j["degree"], 6);
}

TEST(Cli, UnitIdealIsRejected) {
  auto r = run("hvector " + data("unit.json"));
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(as_json(r)["error"]["message"], "unit ideal has no scheme");
}

TEST(Cli, ParseErrorsCarryLineAndColumn) {
  auto bad_json = write_temp("bad.json", "{\n  \"ring\": {\"vars\": [\"x\"]},\n  \"generators\": [\"x\",]\n}\n");
  auto r = run("hvector " + bad_json);
  EXPECT_EQ(r.code, 4);
  std::string msg = as_json(r)["error"]["message"];
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;

  auto bad_poly = write_temp("badpoly.json", R"({"ring": {"vars": ["x", "y"]}, "generators": ["x^2", "x*z"]})");
  r = run("hvector " + bad_poly);
  EXPECT_EQ(r.code, 4);
  msg = as_json(r)["error"]["message"];
  EXPECT_NE(msg.find("generators[1]"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;

  EXPECT_EQ(run("hvector /nonexistent.json").code, 4);
  EXPECT_EQ(run("frobnicate x.json").code, 4);
  EXPECT_EQ(run("hvector " + data("ci_2_3.json") + " --format yaml").code, 4);
}

TEST(Cli, LinkOfTwoLines) {
  auto r = run("link " + data("link_two_lines.json") + " --format text");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("degree additivity: 1 + 1 = 2"), std::string::npos);
}

TEST(Cli, LinkContainmentViolation) {
  auto r = run("link " + data("link_not_contained.json"));
  EXPECT_NE(r.code, 0);
  std::string msg = as_json(r)["error"]["message"];
  EXPECT_EQ(msg.rfind("containment", 0), 0u);
}

TEST(Cli, KeyLinkIdentity) {
  auto r = run("link " + data("lemma.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(as_json(r)["verdict"], "identity holds");
}

TEST(Cli, FatPointChains) {
  auto j = as_json(run("fatpoints " + data("point_double.json")));
  EXPECT_EQ(j["report"]["link_count"], 2);
  EXPECT_TRUE(j["ok"].get<bool>());
  bool reduced = false;
  for (const auto& c : j["report"]["checks"])
    if (c["name"] == "final scheme reduced") reduced = c["passed"];
  EXPECT_TRUE(reduced);
  auto text = run("fatpoints " + data("point_double.json") + " --format text");
  EXPECT_NE(text.out.find("[ok] final scheme reduced"), std::string::npos);

  auto simple = run("fatpoints " + data("points_simple.json"));
  EXPECT_EQ(simple.code, 0);
  EXPECT_EQ(as_json(simple)["report"]["link_count"], 0);
}

TEST(Cli, FatPointExitCodes) {
  // the second link as written keeps components at the residual points
  EXPECT_EQ(run("fatpoints " + data("points_2_1.json")).code, 2);
  EXPECT_EQ(run("fatpoints " + data("points_2_1.json") + " --skip-redundant-forms").code, 0);
  // the scheme after the first double step is far beyond the default limits
  auto r = run("fatpoints " + data("points_2_2.json") + " --skip-redundant-forms");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(as_json(r)["error"]["kind"], "resource limit");
  auto one = as_json(run("fatpoints " + data("points_2_1.json") + " --skip-redundant-forms --focus 0"));
  EXPECT_TRUE(one["next_is_fat_point_union"].get<bool>());
}

TEST(Cli, Lift) {
  auto ok = run("lift " + data("lift_xy_squared.json"));
  EXPECT_EQ(ok.code, 0);
  auto j = as_json(ok);
  EXPECT_TRUE(j["certificate"]["passed"].get<bool>());
  EXPECT_TRUE(j["certificate"]["reduced"].get<bool>());

  auto ncm = as_json(run("lift " + data("lift_not_cm.json")));
  EXPECT_FALSE(ncm["certificate"]["lift_cohen_macaulay"].get<bool>());
  EXPECT_FALSE(ncm["certificate"]["input_cohen_macaulay"].get<bool>());

  EXPECT_EQ(run("lift " + data("lift_linear.json")).code, 0);
  // p must exceed the exponents
  EXPECT_EQ(run("lift " + data("lift_xy_squared.json") + " --prime 2").code, 4);
}

TEST(Cli, Embed) {
  auto r = run("embed " + data("embed_ci.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(as_json(r)["hilbert_function_preserved"].get<bool>());
  auto w = run("embed " + data("embed_three_points.json"));
  EXPECT_EQ(w.code, 4);
  EXPECT_EQ(as_json(w)["error"]["message"], "Gorenstein witness required");
  EXPECT_EQ(run("embed " + data("twisted_cubic_with_witness.json")).code, 0);
}

TEST(Cli, DeterministicOutput) {
  for (const std::string args : {"fatpoints " + data("points_2_1.json") + " --skip-redundant-forms",
                                  "link " + data("lemma.json"), "embed " + data("embed_ci.json") + " --seed 99",
                                  "lift " + data("lift_xy_squared.json") + " --seed 3"}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
  auto s1 = as_json(run("embed " + data("embed_ci.json") + " --seed 99"));
  EXPECT_EQ(s1["seed"], 99);
}

TEST(Cli, OutFile) {
  std::string path = testing::TempDir() + "hv.json";
  auto r = run("hvector " + data("fatpoint_a2.json") + " --out " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["command"], "hvector");
}
