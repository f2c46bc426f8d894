#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(FFACTOR_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

nlohmann::ordered_json parse(const CliRun& r) { return nlohmann::ordered_json::parse(r.out); }

std::string without_timing(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  j.erase("timing_ms");
  return j.dump();
}

}  // namespace

TEST(Cli, SolveExitCodes) {
  write("cli_c4.txt", "p ffactor 4 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ndefault-f 2\n");
  const CliRun yes = run("solve cli_c4.txt");
  EXPECT_EQ(yes.status, 0);
  EXPECT_EQ(parse(yes).at("certificates").at(0).at("edges").size(), 4u);

  ASSERT_EQ(run("gen g1 --a 1 --b 3 --r 2 --delta 5 --alpha 2 -o cli_g1.txt").status, 0);
  const CliRun no = run("--report cli_g1.json solve cli_g1.txt");
  EXPECT_EQ(no.status, 1);
  std::ifstream in("cli_g1.json");
  std::stringstream report;
  report << in.rdbuf();
  const auto j = nlohmann::ordered_json::parse(report.str());
  EXPECT_EQ(j.at("certificates").at(0).at("delta"), -4);
  EXPECT_EQ(run("recheck cli_g1.json").status, 0);
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(run("bogus").status, 2);
  EXPECT_EQ(run("solve --no-such-flag x").status, 2);
  EXPECT_EQ(run("solve does-not-exist.txt").status, 2);
  write("cli_bad.txt", "p ffactor 2 1\ne 0 5\ndefault-f 1\n");
  EXPECT_EQ(run("solve cli_bad.txt").status, 2);
}

TEST(Cli, SizeCapsNameTheOverride) {
  ASSERT_EQ(run("gen g0 --a 1 --b 3 --k 1 --delta 16 --p 3 -o cli_g0.txt").status, 0);
  const std::string cmd = std::string(FFACTOR_CLI) + " invariants --toughness cli_g0.txt 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string text;
  char buf[512];
  while (fgets(buf, sizeof buf, pipe) != nullptr) text += buf;
  EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 2);
  EXPECT_NE(text.find("--force"), std::string::npos);
  EXPECT_NE(text.find("20"), std::string::npos);
  const CliRun forced = run("invariants --odd-toughness --force cli_g0.txt");
  EXPECT_EQ(forced.status, 0);
  EXPECT_EQ(parse(forced).at("verdict").at("odd_toughness"), "1/3");
  EXPECT_EQ(run("invariants --alpha --kappa cli_g0.txt").status, 0);
}

TEST(Cli, AuditAndTheorem) {
  write("cli_c4.txt", "p ffactor 4 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\ndefault-f 2\n");
  ASSERT_EQ(run("gen g0 --a 1 --b 3 --k 1 --delta 16 --p 3 -o cli_g0.txt").status, 0);
  const CliRun audit = run("audit cli_g0.txt");
  EXPECT_EQ(audit.status, 1);
  EXPECT_EQ(parse(audit).at("certificates").at(0).at("delta"), -2);
  EXPECT_EQ(run("audit cli_c4.txt").status, 0);
  EXPECT_EQ(parse(run("audit cli_c4.txt")).at("verdict"), "none found (exact)");

  const CliRun refuted = run("verify-theorem cai-conjecture cli_g0.txt --a 1 --b 3 --confirm");
  EXPECT_EQ(refuted.status, 1);
  EXPECT_EQ(parse(refuted).at("verdict"), "predicted-and-REFUTED");
  const CliRun main_run = run("verify-theorem main cli_g0.txt --a 1 --b 3 --confirm --force");
  EXPECT_EQ(main_run.status, 0);
  EXPECT_EQ(parse(main_run).at("verdict"), "not-predicted");
  EXPECT_EQ(run("verify-theorem nope cli_g0.txt").status, 2);
}

TEST(Cli, FuzzIsDeterministic) {
  const CliRun a = run("fuzz main --trials 500 --seed 42");
  const CliRun b = run("fuzz main --trials 500 --seed 42");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(parse(a).at("verdict").at("discrepancies"), 0);
  EXPECT_GT(parse(a).at("verdict").at("hypotheses_met").get<int>(), 0);
  EXPECT_EQ(without_timing(a.out), without_timing(b.out));
  EXPECT_EQ(run("fuzz cai-conjecture --family g0 --ab 1,3").status, 1);
}

TEST(Cli, HelpListsCaps) {
  const CliRun help = run("--help");
  EXPECT_EQ(help.status, 0);
  EXPECT_NE(help.out.find("FFACTOR_EXACT_MAX_N"), std::string::npos);
}
