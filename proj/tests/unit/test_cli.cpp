#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "metramsey/scalar.hpp"
#include "run.hpp"

using metramsey::Scalar;
using metramsey::testgen::run_cli;
using metramsey::testgen::sample;
using nlohmann::json;

namespace {

json run_json(const std::vector<std::string>& args, int expect_exit = 0) {
  const auto r = run_cli(args);
  EXPECT_EQ(r.exit_code, expect_exit) << r.out;
  return json::parse(r.out);
}

} // namespace

TEST(Cli, ReportShape) {
  const auto j = run_json({"hj", "2", "2", "2"});
  for (const char* key : {"args", "command", "inputs_digest", "result", "rng", "version"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_FALSE(j.contains("wall_time_ms"));
  EXPECT_EQ(j["command"], "hj");
  EXPECT_TRUE(run_json({"--timing", "hj", "2", "2", "2"}).contains("wall_time_ms"));
}

TEST(Cli, Examples) {
  EXPECT_EQ(run_json({"ramsey", sample("k6_triangles.json")})["result"]["min_colours"], 1);
  EXPECT_EQ(run_json({"ramsey", sample("k5_triangles.json")})["result"]["min_colours"], 2);
  EXPECT_EQ(run_json({"ramsey", sample("full_set_3.json")})["result"]["min_colours"], 2);
  EXPECT_EQ(run_json({"hj", "2", "2", "2"})["result"]["every_colouring_has_monochromatic_line"], true);
  EXPECT_EQ(run_json({"hj", "2", "2", "1"})["result"]["every_colouring_has_monochromatic_line"], false);
  EXPECT_EQ(run_json({"rigid", "4", "2"})["result"]["count"], 7);
  EXPECT_EQ(run_json({"intertwine", sample("vector_x.json"), sample("vector_y.json")})["result"].size(), 1u);
  const auto pairs = run_json({"intertwine", "--blocks", sample("blocks10.json"), "--pairs", "4"});
  ASSERT_EQ(pairs["result"]["pairs"].size(), 4u);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(pairs["result"]["pairs"][k]["count"], k + 1);
}

TEST(Cli, DistanceExamples) {
  const auto self = run_json({"dist", sample("pumpkin_cross.json"), sample("pumpkin_cross.json")});
  EXPECT_EQ(self["result"]["distance"]["exact"], "0");
  const auto half = run_json({"dist", sample("tuple_diagonal.json"), sample("tuple_cross.json")});
  EXPECT_EQ(half["result"]["distance"]["exact"], "1/2");
  const auto d1 = run_json({"dist", sample("tuple_d1.json"), sample("tuple_d1_other.json")});
  EXPECT_LE(Scalar::parse(d1["result"]["distance"]["exact"].get<std::string>()), Scalar(1, 1000));
}

TEST(Cli, Order) {
  const auto j = run_json({"order", sample("metric_pair_half.json"), sample("metric_path3.json")});
  EXPECT_TRUE(j["result"].contains("leq"));
  const auto self = run_json({"order", sample("metric_path3.json"), sample("metric_path3.json")});
  EXPECT_EQ(self["result"]["leq"], true);
  EXPECT_EQ(self["result"]["isometric"], true);
  const auto none = run_json({"order", sample("metric_path3.json"), sample("metric_singleton.json")});
  EXPECT_EQ(none["result"]["leq"], false);
  EXPECT_EQ(none["result"]["witness"], "none");
}

TEST(Cli, Oscillation) {
  const auto j = run_json({"oscillation", sample("oscillation_first_coord.json"), "--count", "10"});
  EXPECT_EQ(j["result"]["sample_diameters"].size(), 10u);
  EXPECT_EQ(run_json({"oscillation", sample("oscillation_constant.json")})["result"]["best_diameter"]["exact"], "0");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"pp", sample("tuple_off_sphere.json")}).exit_code, 1);
  EXPECT_EQ(run_cli({"order", sample("metric_bad_triangle.json"), sample("metric_path3.json")}).exit_code, 1);
  EXPECT_EQ(run_cli({"pp", sample("malformed.json")}).exit_code, 2);
  EXPECT_EQ(run_cli({"pp", sample("no_such_file.json")}).exit_code, 2);
  EXPECT_EQ(run_cli({"bogus"}).exit_code, 2);
  EXPECT_EQ(run_cli({"--eps", "abc", "dist", sample("tuple_d1.json"), sample("tuple_d1.json")}).exit_code, 2);
  EXPECT_EQ(run_cli({"--eps", "-1", "dist", sample("tuple_d1.json"), sample("tuple_d1.json")}).exit_code, 1);
  EXPECT_EQ(run_cli({"hj", "3", "3", "3"}).exit_code, 3);
  EXPECT_EQ(run_cli({"--max-colourings", "100", "ramsey", sample("k6_triangles.json")}).exit_code, 3);
  EXPECT_EQ(run_cli({"rigid", "12", "5", "--max-count", "10"}).exit_code, 3);
}

TEST(Cli, DeterministicAndReparsable) {
  const std::vector<std::vector<std::string>> commands{
      {"pp", sample("tuple_cross.json")},
      {"--seed", "3", "oscillation", sample("oscillation_first_coord.json"), "--count", "5"},
      {"rigid", "5", "3"},
  };
  for (const auto& c : commands) {
    const auto a = run_cli(c);
    const auto b = run_cli(c);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(json::accept(a.out));
  }
}

TEST(Cli, PpRoundTripsThroughDist) {
  const auto pp = run_json({"pp", sample("tuple_cross.json")});
  const auto path = std::filesystem::temp_directory_path() / "metramsey_cli_pp.json";
  std::ofstream(path) << pp["result"]["pumpkin"].dump();
  const auto d = run_json({"dist", path.string(), sample("tuple_cross.json")});
  EXPECT_EQ(d["result"]["distance"]["exact"], "0");
  std::filesystem::remove(path);
}

TEST(Cli, StdinAndOut) {
  const auto from_stdin = run_cli({"pp", "-"}, sample("tuple_cross.json"));
  const auto from_file = run_cli({"pp", sample("tuple_cross.json")});
  EXPECT_EQ(json::parse(from_stdin.out)["result"], json::parse(from_file.out)["result"]);
  EXPECT_EQ(json::parse(from_stdin.out)["inputs_digest"], json::parse(from_file.out)["inputs_digest"]);

  const auto path = std::filesystem::temp_directory_path() / "metramsey_cli_out.json";
  ASSERT_EQ(run_cli({"--out", path.string(), "rigid", "3", "2"}).exit_code, 0);
  std::stringstream text;
  text << std::ifstream(path).rdbuf();
  EXPECT_EQ(json::parse(text.str())["result"]["count"], 3);
  std::filesystem::remove(path);
}

TEST(Cli, CsvFormat) {
  const auto r = run_cli({"--format", "csv", "rigid", "3", "2"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("key,value\n", 0), 0u);
  EXPECT_NE(r.out.find("result.count,3"), std::string::npos);
}
