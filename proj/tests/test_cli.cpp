#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(CHEVKIT_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string sample(const std::string& name) { return std::string(CHEVKIT_SAMPLES) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("chevkit_cli_" + name)).string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, HelpExitsZero) {
  const auto r = run("--help");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "decompose"));
}

TEST(Cli, UnknownSubcommandFails) { EXPECT_EQ(run("frobnicate").code, 1); }

TEST(Cli, DecomposeThenVerify) {
  for (const auto& [file, kind, l, field] : std::vector<std::tuple<std::string, std::string, int, std::string>>{
           {"gsp4_p7.json", "gsp", 2, "p=7"},
           {"go_even6_q9.json", "go-even", 3, "q=9"},
           {"go_odd5_p5.json", "go-odd", 2, "p=5"},
           {"o_even4_p7.json", "o-even", 2, "p=7"},
           {"gsp4_rational.json", "gsp", 2, "rational"}}) {
    const std::string rec = temp_path(file + ".rec");
    const std::string common = "--kind " + kind + " --l " + std::to_string(l) + " --field " + field;
    const auto d = run("decompose " + common + " --in " + sample(file) + " --out " + rec);
    ASSERT_EQ(d.code, 0) << d.out;
    const auto v = run("verify --field " + field + " --in " + sample(file) + " --word " + rec);
    EXPECT_EQ(v.code, 0) << file << ": " << v.out;
    std::filesystem::remove(rec);
  }
}

TEST(Cli, VerifyRejectsWrongMatrix) {
  const std::string rec = temp_path("wrong.rec");
  ASSERT_EQ(run("decompose --kind gsp --l 2 --field p=7 --in " + sample("gsp4_p7.json") + " --out " + rec).code, 0);
  std::ifstream in(rec);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  const auto pos = text.find("mu: ");
  ASSERT_NE(pos, std::string::npos);
  const char digit = text[pos + 4];
  text[pos + 4] = digit == '1' ? '2' : '1';
  std::ofstream(rec) << text;
  EXPECT_EQ(run("verify --field p=7 --in " + sample("gsp4_p7.json") + " --word " + rec).code, 2);
  std::filesystem::remove(rec);
}

TEST(Cli, NonMemberExitsTwo) {
  EXPECT_EQ(run("decompose --kind gsp --l 2 --field p=7 --in " + sample("nonmember_p7.json")).code, 2);
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run("decompose --kind gsp --field p=7 --in " + sample("gsp4_p7.json")).code, 1);
  EXPECT_EQ(run("decompose --kind gsp --l 2 --field p=5 --in " + sample("gsp4_p7.json")).code, 1);
  EXPECT_EQ(run("decompose --kind gsp --l 2 --field p=7 --in /nonexistent.json").code, 1);
  EXPECT_EQ(run("decompose --kind gsp --l 3 --field p=7 --in " + sample("gsp4_p7.json")).code, 1);
}

TEST(Cli, DecomposeJsonEmit) {
  const auto r = run("decompose --kind go-odd --l 2 --field p=5 --emit json --in " + sample("go_odd5_p5.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"left\""));
  EXPECT_TRUE(contains(r.out, "\"alpha\""));
}

TEST(Cli, SpinorMethodsAgree) {
  const auto r = run("spinor --kind o-even --l 2 --field p=7 --method all --in " + sample("o_even4_p7.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "agree"));
  const auto s = run("spinor --kind o-odd --l 2 --field p=5 --method all --seed 9");
  EXPECT_EQ(s.code, 0) << s.out;
  EXPECT_EQ(run("spinor --kind gsp --l 2 --field p=5").code, 1);
}

TEST(Cli, ZcountSeries) {
  const auto r = run("zcount --series fq --terms 10");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "10  1784"));
  const auto l = run("zcount --u-lorentz 3");
  EXPECT_TRUE(contains(l.out, "elliptic    7"));
  EXPECT_TRUE(contains(run("zcount --u-compact 4").out, "7 z-classes"));
}

TEST(Cli, ZbruteTableAndCap) {
  const auto r = run("zbrute --kind gl --n 2 --q 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "z-classes  4"));
  EXPECT_EQ(run("zbrute --kind gl --n 3 --q 5").code, 3);
  const auto j = run("zbrute --kind u --n 2 --q 2 --emit json");
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(contains(j.out, "\"z_classes\": 3") || contains(j.out, "\"z_classes\":3")) << j.out;
}

TEST(Cli, Polys) {
  const auto r = run("polys --q 2 --dmax 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "degree 1: 3"));
  EXPECT_FALSE(contains(r.out, "degree 2:"));
  const auto d = run("polys --q 3 --dmax 4 --self-dual");
  EXPECT_EQ(d.code, 0);
  EXPECT_TRUE(contains(d.out, "degree 4: 2")) << d.out;
}

TEST(Cli, BenchCsv) {
  const auto r = run("bench --kind gsp --l 2 --field p=5 --words 3 --seed 1");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "kind,l,field,sample,left_length,right_length,word_length,micros"));
  size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 4u);
}
