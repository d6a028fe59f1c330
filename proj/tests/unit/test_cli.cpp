#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

  struct Invocation {
    std::string out;
    int         code = -1;
  };

  Invocation run(std::string const& args) {
    std::string const command = std::string(COXFLAG_CLI) + " " + args + " 2>/dev/null";
    FILE*             pipe    = popen(command.c_str(), "r");
    Invocation               r;
    if (pipe == nullptr) {
      return r;
    }
    std::array<char, 4096> buffer{};
    while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
      r.out += buffer.data();
    }
    int const status = pclose(pipe);
    r.code           = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (!r.out.empty() && r.out.back() == '\n') {
      r.out.pop_back();
    }
    return r;
  }

  std::string sample(char const* name) {
    return std::string(SAMPLE_DIR) + "/" + name;
  }

}  // namespace

TEST(Cli, RankRendersOrdinal) {
  Invocation const r = run("rank -g " + sample("p3.json") + " -w '{0,1}.{1,2}.{0,1}'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "w*3");
}

TEST(Cli, AmpleJson) {
  Invocation const r = run("ample -g " + sample("k3.json") + " --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, R"({"lower":1,"strict_upper":2})");
}

TEST(Cli, Equivalence) {
  Invocation const r = run("equiv -g " + sample("p3.json") + " '{0}.{2}' '{2}.{0}'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true");
  EXPECT_EQ(run("equiv -g " + sample("p3.json") + " '{0}.{1}' '{1}.{0}'").out, "false");
}

TEST(Cli, MorleyRank) {
  EXPECT_EQ(run("morley -g " + sample("p3.json")).out, "w^2");
  EXPECT_EQ(run("morley -g " + sample("c5.json")).out, "w^4");
}

TEST(Cli, WordOperations) {
  std::string const g = " -g " + sample("p3.json") + " ";
  EXPECT_EQ(run("nf" + g + "-w '{2}.{0}'").out, "{0}.{2}");
  EXPECT_EQ(run("reduce" + g + "-w '{0}.{0,1}'").out, "{0,1}");
  EXPECT_EQ(run("sr" + g + "-w '{0}.{2}'").out, "{0}.{2}");
  EXPECT_EQ(run("wob" + g + "'{0}' '{2}'").out, "{}");
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(run("nf -g " + sample("p3.json") + " -w '{0,2}'").code, 2);
  EXPECT_EQ(run("nf -g " + sample("p3.json") + " -w '{0,1'").code, 2);
  EXPECT_EQ(run("nf -g /nonexistent.json -w 1").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
}

TEST(Cli, NegativeVerdictExitsOne) {
  Invocation const r = run("sc-check -g " + sample("k2.json") + " -s " + sample("four_cycle.json")
                    + " --json");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find(R"("simply_connected":false)"), std::string::npos);
  EXPECT_NE(r.out.find(R"("word":"{0}.{1}.{0}.{1}")"), std::string::npos);
}

TEST(Cli, GeneratorsAreDeterministic) {
  std::string const args = "gen-space -g " + sample("p4.json") + " --steps 6 --seed 42 --json";
  Invocation const         a    = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run(args).out);
  std::string const building = "gen-building -g " + sample("p3.json") + " --steps 8 --seed 3";
  EXPECT_EQ(run(building).out, run(building).out);
}

TEST(Cli, CanonicalBase) {
  Invocation const r = run("cb -g " + sample("p4.json") + " -w '{1,2}.{0}' --flag 10,11,12,13");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "11,13");
}

TEST(Cli, VerifySuite) {
  Invocation const r = run("verify division --seed 1 --json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(R"("failures":[])"), std::string::npos);
  EXPECT_EQ(run("verify nonsense").code, 2);
}
