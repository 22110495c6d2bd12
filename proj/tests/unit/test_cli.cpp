#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hsr/cli.hpp"

using hsr::run_cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, Poly) {
  EXPECT_EQ(run({"poly", "--d", "3", "--n", "6", "--format", "plain"}).out, "1, 37/10, 25/4, 23/4, 11/4, 11/20\n");
  EXPECT_EQ(run({"poly", "--d", "1", "--n", "3"}).out, "1, 3/2, 1/2\n");
  EXPECT_EQ(run({"poly", "--d", "5", "--n", "4"}).code, 2);
  const auto json = run({"poly", "--d", "1", "--n", "3", "--format", "json"});
  EXPECT_EQ(json.out, "{\"coefficients\":[\"1\",\"3/2\",\"1/2\"],\"d\":1,\"n\":3}\n");
  EXPECT_EQ(run({"poly", "--d", "1", "--n", "3", "--format", "csv"}).out, "k,coefficient\n0,1\n1,3/2\n2,1/2\n");
}

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "--d", "2", "--n", "4", "--m", "2"}).out, "19\n");
  EXPECT_EQ(run({"count", "--d", "2", "--n", "4", "--m", "1"}).out, "6\n");
  EXPECT_EQ(run({"count", "--d", "2", "--n", "4", "--m", "0"}).out, "1\n");
  EXPECT_EQ(run({"count", "--d", "2", "--n", "5", "--m", "3", "--strict"}).out, "5\n");
  EXPECT_EQ(run({"count", "--d", "2", "--n", "4", "--m", "-1"}).code, 2);
}

TEST(Cli, Roots) {
  const auto simplex = run({"roots", "--d", "1", "--n", "4"});
  EXPECT_EQ(simplex.code, 0);
  EXPECT_EQ(simplex.out.substr(0, simplex.out.find('\n')), "d,n,root_index,re,im,residual");
  EXPECT_EQ(lines(simplex.out), 4);
  EXPECT_NE(simplex.out.find("1,4,0,-3,0,"), std::string::npos);
  EXPECT_NE(simplex.out.find("1,4,2,-1,0,"), std::string::npos);
  const auto d36 = run({"roots", "--d", "3", "--n", "6"});
  EXPECT_EQ(lines(d36.out), 6);
  EXPECT_NE(d36.out.find(",-1,0,"), std::string::npos);
  EXPECT_EQ(run({"roots", "--d", "2", "--n", "4", "--tolerance", "-1"}).code, 2);
}

TEST(Cli, Verify) {
  const auto ok = run({"verify", "--d", "3", "--n", "6"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "CERTIFIED\n");
  EXPECT_EQ(run({"verify", "--d", "2", "--n", "4"}).out, "CERTIFIED\n");
  EXPECT_EQ(run({"verify", "--d", "3", "--n", "5"}).code, 2);
}

TEST(Cli, Bounds) {
  const auto rouche = run({"bounds", "rouche", "--d", "3", "--n", "7", "--edge", "imaginary", "--samples", "2001"});
  EXPECT_EQ(rouche.code, 0);
  EXPECT_EQ(rouche.out.rfind("max_ratio=", 0), 0u);
  EXPECT_NE(rouche.out.find(", PASS"), std::string::npos);
  EXPECT_NE(run({"bounds", "d4sum", "--d", "4"}).out.find("PASS"), std::string::npos);
  EXPECT_EQ(run({"bounds", "migi", "--d", "3", "--n", "6", "--s", "1"}).code, 0);
  EXPECT_EQ(run({"bounds", "hidari", "--d", "3", "--n", "6", "--s", "1"}).code, 2);
  EXPECT_EQ(run({"bounds", "hneg", "--d", "3"}).code, 2);
  EXPECT_EQ(run({"bounds", "aida", "--d", "3", "--n", "7", "--s", "1", "--alpha", "1"}).code, 0);
  EXPECT_EQ(run({"bounds", "aida", "--d", "3", "--n", "7", "--s", "0"}).code, 2);
  EXPECT_EQ(run({"bounds", "rouche", "--d", "3", "--n", "7", "--edge", "bottom", "--format", "json"}).code, 0);
}

TEST(Cli, BadArguments) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"poly", "--d", "3"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"poly", "--d", "3", "--n", "6", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CampaignWithConfigFile) {
  const fs::path dir = fs::temp_directory_path() / "hsr_cli_campaign";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path cfg = dir / "config.json";
  {
    std::ofstream f(cfg);
    f << R"({"d_min": 1, "d_max": 1, "grid": "range", "n_min": 2, "n_max": 6, "certify": true, "out": ")"
      << (dir / "from_file").string() << "\"}";
  }
  const auto r = run({"campaign", "--config", cfg.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("certified=5"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "from_file" / "report.csv"));

  // Flags win over the file.
  const auto over = run({"campaign", "--config", cfg.string(), "--n-max", "4", "--out", (dir / "flags").string()});
  EXPECT_EQ(over.code, 0);
  EXPECT_NE(over.out.find("rows=3"), std::string::npos);

  const auto numeric = run({"campaign", "--grid", "diagonal", "--d-min", "4", "--d-max", "5", "--out",
                            (dir / "numeric").string(), "--threads", "2"});
  EXPECT_EQ(numeric.code, 1);

  const auto plot = run({"plot", (dir / "numeric" / "roots.csv").string(), "--out", (dir / "plots").string()});
  EXPECT_EQ(plot.code, 0);
  EXPECT_TRUE(fs::exists(dir / "plots" / "roots_d4.svg"));
  EXPECT_TRUE(fs::exists(dir / "plots" / "roots_d5.svg"));

  std::ofstream(dir / "bad.json") << "{ not json";
  EXPECT_EQ(run({"campaign", "--config", (dir / "bad.json").string()}).code, 2);
}
