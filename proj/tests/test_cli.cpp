#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" SIEGEL_CLI_PATH "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SIEGEL_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, GoldenTables) {
  for (const auto& [family, file] : {std::pair{"g-by-d", "g_by_d.txt"}, std::pair{"s-by-t", "s_by_t.txt"},
                                     std::pair{"principal", "principal.txt"}}) {
    const auto r = run(std::string("table --family ") + family);
    EXPECT_EQ(r.code, 0);
    const std::string want = golden(file);
    ASSERT_FALSE(want.empty()) << file;
    EXPECT_EQ(r.out, want) << family;
  }
}

TEST(Cli, PrincipalSequence) {
  const auto r = run("table --family principal");
  EXPECT_NE(r.out.find("7 4 3 2 2 2 2 1 1"), std::string::npos);
}

TEST(Cli, TableCsvAndJson) {
  const auto csv = run("table --family s-by-t --format csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("5,4,(11),17,(27),,37,41,(47),49,\r\n"), std::string::npos);
  const auto js = run("table --family g-by-d --format json");
  EXPECT_EQ(js.code, 0);
  const auto j = parse(js);
  EXPECT_EQ(j.at("cells").size(), 7u);
  EXPECT_EQ(j.at("cells")[6][17].at("n"), 7);
}

TEST(Cli, BoundJson) {
  const auto r = run("bound --steps 2,3");
  EXPECT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j.at("final_n"), 7);
  EXPECT_TRUE(j.at("threshold").contains("decimal"));

  const auto no_gcd = parse(run("bound --steps 5,2 --no-gcd"));
  EXPECT_EQ(no_gcd.at("final_n"), 10);
  const auto with_gcd = parse(run("bound --steps 5,2 --json"));
  EXPECT_EQ(with_gcd.at("final_n"), 11);
  EXPECT_EQ(with_gcd.at("adjustments").at("gcd_incremented_by"), 1);

  const auto unmet = run("bound --steps 1,2");
  EXPECT_EQ(unmet.code, 0);
  EXPECT_FALSE(parse(unmet).at("hypotheses_met").get<bool>());

  const auto text = run("bound --steps 2,3 --text");
  EXPECT_NE(text.out.find("n 7\n"), std::string::npos);
}

TEST(Cli, Counterexample) {
  const auto r = run("counterexample");
  EXPECT_EQ(r.code, 0);
  const auto j = parse(r);
  EXPECT_EQ(j.at("min_L1").at("value"), "3");
  EXPECT_EQ(j.at("rank2_value"), "2");
  EXPECT_EQ(j.at("naive_bound_violated"), "yes");
}

TEST(Cli, VerifyBnc) {
  const auto r = run("verify-bnc --steps 3 --forms 10 --seed 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse(r).at("failures"), 0);
  const auto one = run("verify-bnc --steps 1 --form '2,1;1,2'");
  EXPECT_EQ(one.code, 0);
  EXPECT_TRUE(parse(one).at("record").at("principal_rank1_equality").get<bool>());
}

TEST(Cli, CountCommands) {
  const auto c = parse(run("count-cusps --steps 2,3 --enumerate"));
  ASSERT_EQ(c.at("rows").size(), 4u);
  EXPECT_EQ(c.at("rows")[3].at("count"), 120);
  EXPECT_EQ(c.at("rows")[3].at("enumerated_count"), 120);
  const auto csv = run("count-cusps --steps 2,3 --format csv");
  EXPECT_NE(csv.out.find("\"2,1\",15,24,2\r\n"), std::string::npos);

  const auto g = run("count-gcd --k 2 --d 2,3 --c 2,3 --b 1,1 --enumerate");
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(parse(g).at("count"), 6);
  EXPECT_EQ(parse(g).at("enumerated"), 6);
}

TEST(Cli, ArithAndSpecialT) {
  const auto a = parse(run("arith --n 12 --k 2 --alpha 1"));
  EXPECT_EQ(a.at("sigma_alpha"), 28);
  EXPECT_EQ(a.at("squarefree"), 3);
  EXPECT_EQ(a.at("scale"), 2);
  const auto t = run("special-t --v 4,6");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("det 2\n"), std::string::npos);
  const auto tj = parse(run("special-t --v 2,3,5 --steps 2,3 --json"));
  EXPECT_EQ(tj.at("det"), 1);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("table --family bogus").code, 2);
  EXPECT_EQ(run("bound --steps 2,x").code, 2);
  EXPECT_EQ(run("special-t --v 0,0").code, 2);
  EXPECT_EQ(run("arith --n 0").code, 2);
  EXPECT_EQ(run("counterexample --max-matrices 2").code, 3);
  EXPECT_EQ(run("counterexample", "SIEGEL_MAX_MATRICES=2").code, 3);
  EXPECT_EQ(run("count-cusps --steps 2,3 --enumerate --max-vectors 3").code, 3);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, NonPositiveFormRejected) {
  EXPECT_EQ(run("verify-bnc --steps 1 --form '1,2;2,1'").code, 2);
}

TEST(Cli, Deterministic) {
  for (const char* args : {"verify-bnc --steps 2 --forms 5 --seed 9", "table --family s-by-t --format json",
                           "bound --steps 7,10", "count-cusps --steps 5,3"}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}
