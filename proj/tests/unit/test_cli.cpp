#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "colorcode/cli.hpp"
#include "colorcode/io.hpp"
#include "colorcode/parallel.hpp"
#include "colorcode/strings.hpp"

using namespace colorcode;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "colorcode_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, GsdText) {
  const CliRun r = run({"gsd", "--torus", "6x6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "n=72 rank=68 gsd=16\n");
}

TEST(Cli, GsdJson) {
  const CliRun r = run({"--json", "gsd", "--lattice", COLORCODE_FIXTURE_DIR "/micro_torus_3x2.json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["n"], 12);
  EXPECT_EQ(j["rank"], 8);
  EXPECT_EQ(j["gsd"], 16);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(run({"gsd", "--torus", "5x5"}).code, kExitUsage);
  EXPECT_EQ(run({"gsd", "--torus", "six"}).code, kExitUsage);
  EXPECT_EQ(run({"gsd", "--torus", "6x6", "--planar", "6x6"}).code, kExitUsage);
  EXPECT_EQ(run({"fuse", "--a", "rx"}).code, kExitUsage);
  EXPECT_EQ(run({"fuse", "--a", "rx", "--b", "qq", "--side", "category"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--check", "12"}).code, kExitUsage);
  const CliRun r = run({"omega", "--torus", "6x6", "--pauli", "+ XZ"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("qubits"), std::string::npos);
}

TEST(Cli, MalformedLatticeFile) {
  const auto path = scratch("broken.json");
  std::ofstream(path) << "{\"geometry\": 3";
  EXPECT_EQ(run({"gsd", "--lattice", path.string()}).code, kExitUsage);
  std::ofstream(path) << "{\"geometry\": {\"kind\": \"torus\", \"bricks_x\": 3, \"rows\": 2}, \"vertices\": []}";
  EXPECT_EQ(run({"gsd", "--lattice", path.string()}).code, kExitUsage);
}

TEST(Cli, OmegaAndSyndrome) {
  std::string ops(72, 'I');
  EXPECT_EQ(run({"omega", "--torus", "6x6", "--pauli", "+ " + ops}).out, "1\n");
  ops[0] = 'X';
  EXPECT_EQ(run({"omega", "--torus", "6x6", "--pauli", "+ " + ops}).out, "0\n");
  const CliRun s = run({"--json", "syndrome", "--torus", "6x6", "--pauli", "+ " + ops});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  const auto list = Json::parse(s.out);
  EXPECT_EQ(list.size(), 3U);
  for (const auto& f : list) EXPECT_TRUE(f["j"].get<bool>() && !f["k"].get<bool>());
}

TEST(Cli, SyndromeOfStringFile) {
  const auto lattice = build_torus(6, 6);
  const auto graph = same_color_face_graph(lattice, Color::Red);
  const int a = graph.nodes.front();
  const int b = graph.adjacency[static_cast<std::size_t>(a)].front().face;
  const auto path = scratch("string.json");
  write_text_file(path, string_to_json(string_through(lattice, Color::Red, {a, b})).dump());
  const CliRun s = run({"--json", "syndrome", "--torus", "6x6", "--string", path.string(), "--kind", "z"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  const auto list = Json::parse(s.out);
  ASSERT_EQ(list.size(), 2U);
  for (const auto& f : list) {
    EXPECT_EQ(f["color"], "red");
    EXPECT_TRUE(f["k"].get<bool>() && !f["j"].get<bool>());
  }
}

TEST(Cli, Fuse) {
  CliRun r = run({"fuse", "--a", "rx", "--b", "ry", "--side", "category"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "rx x ry = rz\n");
  r = run({"--json", "fuse", "--a", "f1", "--b", "f2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["fusion"], "gy");
  EXPECT_TRUE(j["agree"].get<bool>());
}

TEST(Cli, Braid) {
  EXPECT_EQ(run({"braid", "--a", "rx", "--b", "gy"}).out, "monodromy=-1\n");
  EXPECT_EQ(run({"braid", "--a", "rx", "--b", "bz", "--orientation", "left"}).out, "sign=-1\n");
  EXPECT_EQ(run({"braid", "--a", "rx", "--b", "gy", "--separation", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"braid", "--torus", "6x6", "--a", "rx", "--b", "gy"}).code, kExitUsage);
}

TEST(Cli, TablesMatchGoldenFiles) {
  const std::string fusion = slurp(COLORCODE_GOLDEN_DIR "/fusion.csv");
  const std::string monodromy = slurp(COLORCODE_GOLDEN_DIR "/monodromy.csv");
  EXPECT_EQ(run({"tables", "--which", "fusion", "--side", "category"}).out, fusion);
  EXPECT_EQ(run({"tables", "--which", "monodromy", "--side", "category"}).out, monodromy);
  EXPECT_EQ(run({"tables", "--which", "fusion", "--side", "lattice"}).out, fusion);
  EXPECT_EQ(run({"tables", "--which", "monodromy", "--side", "lattice"}).out, monodromy);
  const CliRun j = run({"tables", "--which", "fusion", "--side", "category", "--format", "json"});
  EXPECT_EQ(Json::parse(j.out)["rows"][1][2], "rz");
}

TEST(Cli, ConfigFileAndFlagOverride) {
  const auto path = scratch("settings.toml");
  std::ofstream(path) << "# settings\n[lattice]\ntorus = \"12x12\"\n";
  EXPECT_EQ(run({"--config", path.string(), "gsd"}).out, "n=288 rank=284 gsd=16\n");
  EXPECT_EQ(run({"--config", path.string(), "gsd", "--torus", "6x6"}).out, "n=72 rank=68 gsd=16\n");
  std::ofstream(path) << "[braiding]\nseparation = 12\n";
  EXPECT_EQ(run({"--config", path.string(), "braid", "--a", "rx", "--b", "gy"}).code, kExitUsage);
  EXPECT_EQ(run({"--config", path.string(), "braid", "--a", "rx", "--b", "gy", "--separation", "6"}).code, kExitOk);
  std::ofstream(path) << "[lattice]\ntorus = 7\n";
  EXPECT_EQ(run({"--config", path.string(), "gsd"}).code, kExitUsage);
  std::ofstream(path) << "[lattice\n";
  EXPECT_EQ(run({"--config", path.string(), "gsd"}).code, kExitUsage);
  EXPECT_EQ(run({"--config", scratch("missing.toml").string(), "gsd"}).code, kExitUsage);
}

TEST(Cli, ThreadCapFromEnvironment) {
  ::setenv("COLORCODE_THREADS", "2", 1);
  EXPECT_EQ(thread_limit(), 2);
  EXPECT_EQ(run({"--threads", "8", "tables", "--which", "fusion", "--side", "lattice"}).code, kExitOk);
  ::setenv("COLORCODE_THREADS", "junk", 1);
  EXPECT_GE(thread_limit(), 1);
  ::unsetenv("COLORCODE_THREADS");
}

TEST(Cli, VerifySelectedChecks) {
  CliRun r = run({"verify", "--check", "1", "--check", "4"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_EQ(count_of(r.out, "PASS"), 2);
  r = run({"--json", "verify", "--oracle", "--fixture", COLORCODE_FIXTURE_DIR "/micro_torus_3x2.json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["passed"].get<bool>());
  // A golden directory with a corrupted table is a mismatch.
  const auto dir = scratch("bad_golden");
  std::filesystem::create_directories(dir);
  for (const char* name : {"fusion.csv", "monodromy.csv", "anyons.csv"}) {
    std::filesystem::copy_file(std::filesystem::path(COLORCODE_GOLDEN_DIR) / name, dir / name,
                               std::filesystem::copy_options::overwrite_existing);
  }
  std::string text = slurp(dir / "monodromy.csv");
  const auto cell = text.find("\nrx,");
  ASSERT_NE(cell, std::string::npos);
  text.replace(cell + 4, 1, text[cell + 4] == '-' ? "" : "-");
  write_text_file(dir / "monodromy.csv", text);
  r = run({"verify", "--check", "8", "--golden", dir.string()});
  EXPECT_EQ(r.code, kExitMismatch) << r.out << r.err;
}

TEST(Cli, RenderSvg) {
  const auto lattice = build_torus(6, 6);
  const auto graph = same_color_face_graph(lattice, Color::Green);
  const int a = graph.nodes.front();
  const int b = graph.adjacency[static_cast<std::size_t>(a)].front().face;
  const auto path = scratch("overlay.json");
  write_text_file(path, string_to_json(string_through(lattice, Color::Green, {a, b})).dump());
  const CliRun r = run({"render", "--torus", "6x6", "--overlay", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("<svg"), std::string::npos);
  EXPECT_EQ(count_of(r.out, "class=\"face\""), 36);
  EXPECT_EQ(count_of(r.out, "class=\"string\""), 1);
  EXPECT_EQ(count_of(r.out, "class=\"violation\""), 0);
  EXPECT_EQ(run({"render", "--torus", "6x6", "--overlay", path.string()}).out, r.out);
  const auto file = scratch("out.svg");
  std::string ops(72, 'I');
  ops[5] = 'Y';
  EXPECT_EQ(run({"render", "--torus", "6x6", "--pauli", "+ " + ops, "--out", file.string()}).code, kExitOk);
  EXPECT_EQ(count_of(slurp(file), "class=\"violation\""), 3);
}
