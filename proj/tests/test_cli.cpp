#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_commands.hpp"

namespace fs = std::filesystem;
using rmac::cli::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rmac");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rmac::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("rmac_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, TableRows) {
  const auto r = run({"table", "--n-min", "3", "--n-max", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_TRUE(j["all_agree"].get<bool>());
  const auto& three = j["rows"][0];
  EXPECT_EQ(three["V"], 8);
  EXPECT_EQ(three["E"], 12);
  EXPECT_EQ(three["F"], 6);
  EXPECT_EQ(three["genus"], 0);
  const auto& four = j["rows"][1];
  EXPECT_EQ(four["genus"], 1);
  const auto& six = j["rows"][3];
  EXPECT_EQ(six["chi"], -32);
  EXPECT_EQ(six["genus"], 17);
  EXPECT_EQ(six["necklaces"], 14);
  EXPECT_EQ(six["quotient_genus"], 2);
}

TEST(Cli, TableTextAndCsv) {
  const auto t = run({"table", "--n", "5"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("g_formula"), std::string::npos);
  const auto c = run({"table", "--n", "5", "--format", "csv"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("\n5,32,80,40,-8,5,5,8,0,1,1,pass,yes\n"), std::string::npos) << c.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"table", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"table", "--n-min", "6", "--n-max", "4"}).code, 2);
  EXPECT_EQ(run({"table", "--n", "21"}).code, 2);
  EXPECT_EQ(run({"table", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "--checks", "surface,bogus", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"export", "--n", "3"}).code, 2);  // missing --out
}

TEST(Cli, AmbientCapRaisesLimit) {
  EXPECT_EQ(run({"necklace", "--n", "22"}).code, 2);
  EXPECT_EQ(run({"necklace", "--n", "22", "--ambient-cap", "24"}).code, 0);
}

TEST(Cli, VerifyAllChecksSmallRange) {
  const auto r = run({"verify", "--n-min", "3", "--n-max", "6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["results"].size(), 7u * 4u);
  EXPECT_TRUE(j["all_pass"].get<bool>());
}

TEST(Cli, VerifyRiemannHurwitz) {
  const auto r = run({"verify", "--checks", "rh", "--n-min", "3", "--n-max", "10"});
  ASSERT_EQ(r.code, 0);
  std::size_t passes = 0;
  std::istringstream is(r.out);
  for (std::string line; std::getline(is, line);)
    if (line.rfind("PASS rh", 0) == 0) ++passes;
  EXPECT_EQ(passes, 8u);
}

TEST(Cli, VerifyEmbedReportsFaces) {
  const auto r = run({"verify", "--checks", "embed", "--n", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["results"][0]["details"]["faces"], 40);
  EXPECT_EQ(j["results"][0]["details"]["genus"], 5);
}

TEST(Cli, VerifyFixtures) {
  const std::string dir = RMAC_FIXTURE_DIR;
  const auto torus = run({"verify", "--input", dir + "/torus_two_squares.json", "--checks", "surface,orient"});
  EXPECT_EQ(torus.code, 0) << torus.out << torus.err;

  const auto klein = run({"verify", "--input", dir + "/klein_two_squares.json", "--checks", "orient", "--format", "json"});
  EXPECT_EQ(klein.code, 1);
  const auto j = json::parse(klein.out);
  EXPECT_FALSE(j["all_pass"].get<bool>());
  EXPECT_EQ(j["results"][0]["details"]["witness"]["violations"][0]["kind"], "odd_cycle");

  EXPECT_EQ(run({"verify", "--input", dir + "/torus_two_squares.json", "--checks", "embed"}).code, 2);
  EXPECT_EQ(run({"verify", "--input", dir + "/does_not_exist.json"}).code, 3);
}

TEST(Cli, QuotientSummary) {
  const auto r = run({"quotient", "--n-min", "3", "--n-max", "8", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  const auto& six = j["rows"][3];
  EXPECT_EQ(six["vertex_orbits"], 14);
  EXPECT_EQ(six["edge_orbits"], 32);
  EXPECT_EQ(six["square_orbits"], 16);
  EXPECT_EQ(six["genus"], 2);
  EXPECT_EQ(six["branch_points"], 5);
}

TEST(Cli, NecklaceDefaultsStartAtOne) {
  const auto r = run({"necklace", "--n-max", "16", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 16u);
  EXPECT_EQ(j["rows"][0]["total"], 2);
  EXPECT_EQ(j["rows"][15]["total"], 4116);
  EXPECT_EQ(j["rows"][15]["aperiodic"], 4080);
  const auto k3 = run({"necklace", "--n", "3", "--k", "3", "--format", "json"});
  EXPECT_EQ(json::parse(k3.out)["rows"][0]["total"], 11);
}

TEST(Cli, ExportWritesArtifactsDeterministically) {
  const auto a = scratch("a"), b = scratch("b");
  ASSERT_EQ(run({"export", "--n-min", "3", "--n-max", "4", "--out", a.string(), "--quotient"}).code, 0);
  ASSERT_EQ(run({"export", "--n-min", "3", "--n-max", "4", "--out", b.string(), "--quotient"}).code, 0);
  for (const char* name : {"z_n3.json", "z_n3.certificate.json", "z_n3.off", "hypercube_n3.edges", "rotation_n3.json",
                           "quotient_n4.json", "quotient_n4.off", "quotient_graph_n4.edges", "quotient_graph_n4.labels"}) {
    ASSERT_TRUE(fs::exists(a / name)) << name;
    EXPECT_EQ(slurp(a / name), slurp(b / name)) << name;
  }
  EXPECT_EQ(slurp(a / "z_n3.off").substr(0, 12), "OFF\n8 12 0\n0");
  const auto q = json::parse(slurp(a / "quotient_n4.json"));
  int labelled = 0;
  for (const auto& c : q["cells"])
    if (c.contains("label")) ++labelled;
  EXPECT_EQ(labelled, 6);
  EXPECT_EQ(slurp(a / "quotient_graph_n4.edges").substr(0, 4), "6 8\n");
  const auto cert = json::parse(slurp(a / "z_n4.certificate.json"));
  EXPECT_EQ(cert["genus"], 1);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Cli, ExportUnwritableDirectory) {
  const auto file = scratch("blocker");
  { std::ofstream(file) << "x"; }
  EXPECT_EQ(run({"export", "--n", "3", "--out", (file / "sub").string()}).code, 3);
  fs::remove_all(file);
}

TEST(Cli, ExportCustomProjection) {
  const auto dir = scratch("proj");
  fs::create_directories(dir);
  { std::ofstream(dir / "p.json") << "[[1,0,0],[0,1,0],[0,0,1]]"; }
  ASSERT_EQ(run({"export", "--n", "3", "--out", dir.string(), "--projection", (dir / "p.json").string()}).code, 0);
  EXPECT_NE(slurp(dir / "z_n3.off").find("1.000000 1.000000 1.000000"), std::string::npos);
  EXPECT_EQ(run({"export", "--n", "4", "--out", dir.string(), "--projection", (dir / "p.json").string()}).code, 1);
  fs::remove_all(dir);
}
