#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "ctrop/json.hpp"
#include "ctrop/named_trees.hpp"

using namespace ctrop;
using Json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run ctrop_run(const std::string& args) {
  const char* bin = std::getenv("CTROP_BIN");
  if (!bin) throw std::runtime_error("CTROP_BIN is not set");
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  Run r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ctrop_cli_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

std::string weight_file(const std::string& name, const WeightVector& w) {
  return write_temp(name, json::weight_to_json(w).dump());
}

WeightVector unit_distances(const LeafLabeledTree& t) { return to_weight_vector(distances(t, unit_weights(t))); }

}  // namespace

TEST(Cli, FanStats) {
  const auto r = ctrop_run("fan-stats --n 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out), Json::parse(R"({"k3":1,"k4":13,"k5":21})"));
  EXPECT_EQ(ctrop_run("fan-stats --n 9").code, 2);
}

TEST(Cli, SignPatterns) {
  const auto r = ctrop_run("sign-patterns --n 3 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("csdo"), 4);
  EXPECT_EQ(j.at("asdo"), 12);
  EXPECT_EQ(j.at("total"), 16);
  EXPECT_EQ(j.at("atlas").size(), 16u);
}

TEST(Cli, MembershipOut) {
  const auto r = ctrop_run("membership --input " + weight_file("non", unit_distances(non_aspt_tree())));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out), Json::parse(R"({"verdict":"out","witness":{"kind":"s","labels":[1,2,3]}})"));
}

TEST(Cli, MembershipInRoundTrips) {
  const auto w = interior_point(caterpillar_tree(4));
  const auto r = ctrop_run("membership --input " + weight_file("cat", w));
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "in");
  EXPECT_EQ(to_weight_vector(distances(json::tree_from_json(j.at("tree")))), w);
}

TEST(Cli, Cone) {
  const auto t = caterpillar_tree(3);
  const auto r = ctrop_run("cone --input " + weight_file("cone", interior_point(t)));
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("key"), canonical_key(t).hex());
  EXPECT_EQ(j.at("k"), 5);
  EXPECT_EQ(j.at("rays").size(), 2u);
  EXPECT_EQ(j.at("lineality").size(), 3u);
  EXPECT_EQ(json::weight_from_json(j.at("rays").at(0)).n(), 3);
  EXPECT_EQ(ctrop_run("cone --input " + weight_file("cone_out", unit_distances(non_aspt_tree()))).code, 2);
}

TEST(Cli, InitialIdeal) {
  const auto t = dual_tree(theta0(3), phi0(3));
  const auto r = ctrop_run("initial-ideal --psi-check --input " + weight_file("ini", interior_point(t)));
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("initial_forms").size(), 9u);
  EXPECT_EQ(j.at("monomial_free"), true);
  EXPECT_EQ(j.at("psi_kernel"), true);
  const auto& first = j.at("initial_forms").at(0);
  EXPECT_EQ(json::poly_from_json(first.at("form"), 3).size(), first.at("form").at("terms").size());
  EXPECT_EQ(ctrop_run("initial-ideal --psi-check --input " + weight_file("ini_star", WeightVector(3))).code, 2);
}

TEST(Cli, SignedTrop) {
  const auto r = ctrop_run("signed-trop --ordering 1,2,3,-1,-2,-3");
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("kind"), "CSDO");
  EXPECT_EQ(j.at("cones").at("5").size(), 6u);
  const auto a = Json::parse(ctrop_run("signed-trop --ordering [1,2,3,-3,-2,-1]").out);
  EXPECT_EQ(a.at("kind"), "ASDO");
  EXPECT_EQ(a.at("cones").at("5").size(), 5u);
  EXPECT_EQ(ctrop_run("signed-trop --ordering 1,2,3,-2,-1,-3").code, 2);
  EXPECT_EQ(ctrop_run("signed-trop --ordering 1,2,x").code, 1);
}

TEST(Cli, SamplePointIsDeterministic) {
  const auto a = ctrop_run("sample-point --ordering 1,2,3,-1,-2,-3 --seed 7");
  const auto b = ctrop_run("sample-point --ordering 1,2,3,-1,-2,-3 --seed 7");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = Json::parse(a.out);
  EXPECT_EQ(j.at("y").size(), 6u);
  for (const auto& [key, value] : j.at("y").items()) EXPECT_NO_THROW(json::rational_from_json(value));
}

TEST(Cli, MalformedInput) {
  EXPECT_EQ(ctrop_run("membership --input " + write_temp("bad", "{\"n\": 3")).code, 1);
  EXPECT_EQ(ctrop_run("membership --input " + write_temp("missing", R"({"n":3,"coords":{}})")).code, 1);
  EXPECT_EQ(ctrop_run("membership --input /nonexistent/file.json").code, 1);
  EXPECT_EQ(ctrop_run("fan-stats").code, 1);
  EXPECT_EQ(ctrop_run("fan-stats --n 3 --format xml").code, 1);
  EXPECT_EQ(ctrop_run("").code, 1);
}

TEST(Cli, VerifyOracle) {
  const auto r = ctrop_run("verify --suite oracle");
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_FALSE(j.contains("criteria"));
  for (const auto& c : j.at("oracle")) {
    EXPECT_EQ(c.at("expected"), c.at("got")) << c.at("check");
    EXPECT_TRUE(c.at("source") == "published" || c.at("source") == "derived");
  }
}
