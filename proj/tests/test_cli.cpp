#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(HH1_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "hh1_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json without_timings(nlohmann::json results) {
  for (auto& r : results) r.erase("elapsed_ms");
  return results;
}

}  // namespace

TEST(Cli, BuildEmitsAlgebraJson) {
  const Outcome r = run("build --kind smash --p 3 --n 2 --r 1");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["labels"].size(), 27u);
  EXPECT_EQ(j["p"], 3);
  const Outcome t = run("build --kind trunc --p 3 --exps 2");
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(nlohmann::json::parse(t.out)["labels"].size(), 9u);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("build --kind smash --p 2 --n 1 --r 1").code, 2);
  EXPECT_EQ(run("build --kind smash --p 9").code, 2);
  EXPECT_EQ(run("build --kind nonsense").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("reproduce-paper --p 7").code, 2);
  EXPECT_EQ(run("reproduce-paper --only no-such-check").code, 2);
  EXPECT_EQ(run("build --kind json").code, 2);
}

TEST(Cli, InvalidInputExitsThree) {
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{\"p\": 3, \"labels\": [\"1\"], \"unit\": [1], \"mult\": [[0,0,0,1],[0,0,0,1]], "
                        "\"radical_gens\": null, \"counit\": null}";
  EXPECT_EQ(run("hh1 --kind json --file " + bad.string()).code, 3);
  const auto garbage = scratch("garbage.json");
  std::ofstream(garbage) << "{not json";
  EXPECT_EQ(run("hh1 --kind json --file " + garbage.string()).code, 3);
  EXPECT_EQ(run("hh1 --kind json --file " + scratch("missing.json").string()).code, 3);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  const auto file = scratch("tkr.json");
  const Outcome first = run("build --kind quiver --p 3 --json " + file.string());
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(slurp(file), first.out);
  const Outcome second = run("build --kind json --file " + file.string());
  ASSERT_EQ(second.code, 0);
  EXPECT_EQ(second.out, first.out);
}

TEST(Cli, Hh1Reports) {
  const Outcome s = run("hh1 --kind smash --p 3 --n 2 --r 1");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out)["hochschild"]["dim_hh1"], 3);
  const Outcome q = run("hh1 --kind quiver --p 3");
  ASSERT_EQ(q.code, 0);
  const auto qj = nlohmann::json::parse(q.out);
  EXPECT_EQ(qj["hochschild"]["dim_hh1"], 4);
  const Outcome g = run("build --kind trivext --p 3");
  ASSERT_EQ(g.code, 0);
  const Outcome t = run("hh1 --kind trunc --p 3 --exps 1,1");
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(nlohmann::json::parse(t.out)["hochschild"]["dim_hh1"], 18);
}

TEST(Cli, OutputIsDeterministic) {
  EXPECT_EQ(run("hh1 --kind smash --p 5 --n 1 --r 1 --seed 4").out, run("hh1 --kind smash --p 5 --n 1 --r 1 --seed 4").out);
  const auto a = scratch("a.json"), b = scratch("b.json");
  ASSERT_EQ(run("reproduce-paper --only lemma-3.6,lemma-4.1,blocks --json " + a.string()).code, 0);
  ASSERT_EQ(run("reproduce-paper --only lemma-3.6,lemma-4.1,blocks --json " + b.string()).code, 0);
  EXPECT_EQ(without_timings(nlohmann::json::parse(slurp(a))), without_timings(nlohmann::json::parse(slurp(b))));
}

TEST(Cli, InjectedFaultFailsSmashMultiplicationCheck) {
  const auto out = scratch("fault.json");
  const Outcome r = run("reproduce-paper --only lemma-3.1 --inject-fault --json " + out.string());
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(slurp(out));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["check_id"], "lemma-3.1");
  EXPECT_EQ(j[0]["status"], "fail");
  EXPECT_TRUE(j[0]["details"].contains("counterexample"));
  EXPECT_EQ(run("reproduce-paper --only lemma-3.1").code, 0);
}

TEST(Cli, MarkdownTableListsChecks) {
  const auto md = scratch("suite.md");
  const Outcome r = run("reproduce-paper --p 5 --only lemma-3.5,lemma-3.7 --md " + md.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(slurp(md), r.out);
  EXPECT_NE(r.out.find("| lemma-3.5 | 5 | pass |"), std::string::npos);
  EXPECT_NE(r.out.find("| lemma-3.7 | 5 | pass |"), std::string::npos);
}
