#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(KGRAPH_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string cli() { return KGRAPH_CLI; }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("kgraph_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, PlacingCounts) {
  const char* expected[] = {"1\n", "3\n", "13\n", "75\n", "541\n"};
  for (int k = 0; k <= 4; ++k) {
    const auto r = run("placings --k " + std::to_string(k) + " --count");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, expected[k]);
  }
  EXPECT_EQ(run("placings --k 1").out, "{01}\n{0,1}\n{1,0}\n");
}

TEST(Cli, SimplexHomologyPipeline) {
  const auto r = run("build simplex --k 2 | " + cli() + " homology -");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "H_0 = Z\nH_1 = 0\nH_2 = 0\n");
}

TEST(Cli, SurfaceHomologyPipeline) {
  const auto r = run("build surface --spec T,T | " + cli() + " homology -");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("H_1 = Z^4\n"), std::string::npos);
  const auto j = run("build surface --spec K | " + cli() + " homology --json -");
  EXPECT_EQ(j.out, R"({
  "H": [
    {
      "betti": 1,
      "torsion": []
    },
    {
      "betti": 1,
      "torsion": [
        2
      ]
    },
    {
      "betti": 0,
      "torsion": []
    }
  ],
  "euler": 0
}
)");
}

TEST(Cli, RoundTripThroughJsonExport) {
  for (const std::string build : {"simplex --k 0", "simplex --k 3", "sphere --k 1", "sphere --k 3",
                                  "wedge --k 2 --n 3", "surface --spec T,K,P", "surface --spec S"}) {
    const auto r = run("build " + build + " | " + cli() + " export json - | " + cli() + " validate -");
    EXPECT_EQ(r.code, 0) << build;
    EXPECT_EQ(r.out, "valid\n") << build;
  }
}

TEST(Cli, Deterministic) {
  for (const std::string& cmd : std::vector<std::string>{"build sphere --k 2 | " + cli() + " export off -",
                                "build surface --spec T,P | " + cli() + " export dot -",
                                "build wedge --k 1 --n 2"}) {
    const auto a = run(cmd);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, run(cmd).out);
  }
}

TEST(Cli, ConnectedSumAndQuotient) {
  const auto t = write_temp("t.json", run("build surface --spec T").out);
  const auto k = write_temp("k.json", run("build surface --spec K").out);
  const auto sum = run("connected-sum " + t + " " + k + " | " + cli() + " homology -");
  EXPECT_EQ(sum.code, 0);
  EXPECT_EQ(sum.out, "H_0 = Z\nH_1 = Z^3 + Z/2\nH_2 = 0\n");

  const auto interval = write_temp("s1.json", run("build simplex --k 1").out);
  const auto good = write_temp("rel_ok.json", R"({"kind":"relation","mode":"explicit","classes":[]})");
  EXPECT_EQ(run("quotient " + interval + " --relation " + good).code, 0);
  const auto bad = write_temp("rel_bad.json",
                              R"j({"kind":"relation","mode":"explicit","classes":[["({0,1},{0,1})","({01},{01})"]]})j");
  const auto r = run("quotient " + interval + " --relation " + bad);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("not a congruence"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("homology /nonexistent/file.json").code, 1);
  EXPECT_EQ(run("homology " + write_temp("junk.json", "{nope")).code, 1);
  EXPECT_EQ(run("build surface --spec Q").code, 1);
  const auto broken = write_temp(
      "broken.json",
      R"({"kind":"category","rank":1,"vertices":["a","b"],"morphisms":[{"id":"e","d":[1],"r":"a","s":"b"},{"id":"x","d":[1],"r":"a","s":"b"}],"compose":[["e","e","x"]]})");
  const auto v = run("validate " + broken);
  EXPECT_EQ(v.code, 2);
  EXPECT_EQ(v.out.rfind("violated: ", 0), 0u);
  EXPECT_EQ(run("build surface --spec T | " + cli() + " export off -").code, 2);
  EXPECT_EQ(run("build wedge --k 2 --n 0").code, 2);
}
