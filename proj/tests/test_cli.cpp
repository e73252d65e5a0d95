#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(EGR_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "egr_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("build nope").code, 2);
  EXPECT_EQ(run("build flag --q 3").code, 2);
  EXPECT_EQ(run("build match-odd --q 7").code, 2);
  EXPECT_EQ(run("bounds --k 3").code, 2);
  EXPECT_EQ(run("bounds --k 3 --g 6 --lambda 2 --signature 1,1,1").code, 2);
  EXPECT_EQ(run("verify --graph /nonexistent --claim /nonexistent").code, 2);
}

TEST(Cli, BuildWritesGraphAndClaim) {
  const auto g6 = scratch("cage.g6");
  ASSERT_EQ(run("build cage65 -o " + g6.string()).code, 0);
  const auto text = slurp(g6);
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(text.back(), '\n');
  const auto claim = nlohmann::json::parse(slurp(g6.string() + ".claim.json"));
  EXPECT_EQ(claim["n"], 40);
  EXPECT_EQ(claim["lambda"], 22);

  const auto r = run("build baer --q 2 --format edgelist");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 56);
}

TEST(Cli, VerifyConstructionAndFiles) {
  const auto r = run("verify --construction flag --q 5");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());

  const auto me = run("verify --construction match-even --q 4");
  EXPECT_EQ(me.code, 0);
  const auto mj = nlohmann::json::parse(me.out);
  EXPECT_EQ(mj["measured"]["n"], 32);
  EXPECT_EQ(mj["measured"]["k"], 5);
  EXPECT_EQ(mj["measured"]["classification"], "egr");
  EXPECT_EQ(mj["measured"]["lambda"], 12);

  const auto g6 = scratch("hs.g6");
  ASSERT_EQ(run("build amalgam1 --q 5 -o " + g6.string()).code, 0);
  EXPECT_EQ(run("verify --graph " + g6.string() + " --claim " + g6.string() + ".claim.json").code, 0);

  // A claim that does not hold exits with 1.
  auto claim = nlohmann::json::parse(slurp(g6.string() + ".claim.json"));
  claim["lambda"] = 35;
  const auto bad = scratch("hs.bad.json");
  std::ofstream(bad) << claim.dump();
  EXPECT_EQ(run("verify --graph " + g6.string() + " --claim " + bad.string()).code, 1);
}

TEST(Cli, BoundsJson) {
  const auto r = run("bounds --k 6 --g 5 --lambda 22");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& b : j["bounds"])
    if (b["name"] == "dfjr") {
      EXPECT_EQ(b["value"], 40);
    }
  const auto s = nlohmann::json::parse(run("bounds --k 3 --g 5 --signature 4,4,4").out);
  for (const auto& b : s["bounds"])
    if (b["name"] == "sgr_odd") {
      EXPECT_EQ(b["value"], 10);
    }
}

TEST(Cli, SweepCsv) {
  const auto r = run("sweep --k 3 --g 6 --lambda 1:8 --bipartite");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "lambda,moore,dfjr,spectral,cycle");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 9);
  EXPECT_EQ(run("sweep --k 3 --g 6 --lambda x").code, 2);
  EXPECT_EQ(run("sweep --k 3 --g 5").code, 2);
}

TEST(Cli, ExportFormats) {
  const auto el = run("export flag --q 4 --format edgelist");
  ASSERT_EQ(el.code, 0);
  const auto path = scratch("flag4.txt");
  std::ofstream(path) << el.out;
  const auto g6 = run("export --graph " + path.string() + " --format graph6");
  EXPECT_EQ(g6.code, 0);
  EXPECT_EQ(g6.out, run("build flag --q 4").out);
  const auto js = nlohmann::json::parse(run("export flag --q 4 --format json").out);
  EXPECT_EQ(js["n"], 24);
  EXPECT_EQ(js["classification"], "egr");
  EXPECT_EQ(js["lambda"], 2);
  EXPECT_EQ(run("export flag --q 4 --format dot").code, 2);
}

TEST(Cli, ReproduceSubset) {
  const auto r = run("reproduce --only 11 --max-n 60");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("criterion 11"), std::string::npos);
  const auto d = run("reproduce --only 2,4");
  EXPECT_EQ(d.code, 0) << d.out;
  EXPECT_NE(d.out.find("PASS  criterion 2"), std::string::npos);
}
