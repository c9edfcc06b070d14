#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <nlohmann/json.hpp>

#include "pealab/corpus.hpp"
#include "pealab/textio.hpp"

using namespace pealab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PEALAB_CLI_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("pealab-cli-test-" + std::to_string(getpid()));
    fs::remove_all(dir_);
    corpus::write(dir_.string());
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }
  static std::string put(const std::string& name, const std::string& content) {
    write_file(path(name), content);
    return path(name);
  }
  static inline fs::path dir_;
};

}  // namespace

TEST_F(Cli, Version) {
  const auto r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pealab"), std::string::npos);
}

TEST_F(Cli, ValidateOk) {
  for (const char* f : {"chain3.pea", "mo2.pea", "pmv-box12.pmv", "z2-std-u21.grp", "lex-semidirect-window.wtab"})
    EXPECT_EQ(run("validate " + path(f)).code, 0) << f;
}

TEST_F(Cli, ValidateAxiomViolation) {
  auto t = corpus::chain(3);
  t.set_sum(1, 1, 3);  // 1 + 1 = 3 breaks associativity with 1 + 2 = 3
  const auto f = put("bad.pea", write_pea(t));
  const auto r = run("--json validate " + f);
  EXPECT_EQ(r.code, 2);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["exit_code"], 2);
  EXPECT_FALSE(j["axioms"]["passed"].get<bool>());
  EXPECT_FALSE(j["axioms"]["violations"].empty());
}

TEST_F(Cli, InputErrors) {
  const auto garbage = put("garbage.pea", "this is not a table\n");
  const auto r = run("--json validate " + garbage);
  EXPECT_EQ(r.code, 1);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["error"]["line"], 1);
  EXPECT_EQ(j["error"]["column"], 1);
  EXPECT_EQ(run("validate " + path("missing.pea")).code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("validate " + put("x.txt", "1")).code, 1);
}

TEST_F(Cli, DomainError) {
  const auto r = run("hom sup --gens \"1,0;0,1\" --at 1,1 --grp " + path("z2-lex-u01.grp"));
  EXPECT_EQ(r.code, 3);
  // inapplicable analyses are reported, not fatal
  const auto j = json::parse(run("--json analyze --pmv " + path("mo2.pea")).out);
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_TRUE(j.contains("pmv"));
  EXPECT_EQ(run("--json analyze --decompose " + put("bad.state", "a=1/2 a'=1/2 b=1/2 b'=1/2 1=1") + " " +
                path("bool4.pea")).code,
            1);
}

TEST_F(Cli, Deterministic) {
  for (const char* f : {"mo3.pea", "bool8.pea", "z2-u21.pea"}) {
    const auto a = run("--json analyze " + path(f));
    const auto b = run("--json analyze " + path(f));
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << f;
  }
}

TEST_F(Cli, JsonFields) {
  const auto j = json::parse(run("--json analyze " + path("chain3.pea")).out);
  for (const char* k : {"tool", "command", "input", "exit_code", "riesz", "state_space"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["tool"]["name"], "pealab");
  EXPECT_EQ(j["input"]["file"], "chain3.pea");
  EXPECT_EQ(j["input"]["hash"].get<std::string>().rfind("fnv1a64:", 0), 0u);
}

TEST_F(Cli, AnalyzeMo2) {
  const auto j = json::parse(run("--json analyze " + path("mo2.pea")).out);
  EXPECT_EQ(j["state_space"]["class"], "non_simplex");
  EXPECT_EQ(j["state_space"]["vertices"].size(), 4u);
  EXPECT_EQ(j["state_space"]["dim"], 2);
  EXPECT_FALSE(j["riesz"]["rdp0"]["holds"].get<bool>());
}

TEST_F(Cli, ChainRieszAllTrue) {
  const auto j = json::parse(run("--json analyze --riesz " + path("chain3.pea")).out);
  for (const char* k : {"rip", "rdp0", "rdp", "rdp1", "rdp2"}) EXPECT_TRUE(j["riesz"][k]["holds"].get<bool>()) << k;
  EXPECT_FALSE(j.contains("state_space"));
}

TEST_F(Cli, DecomposeBooleanMidpoint) {
  const auto st = put("mid.state", "a=1/2 b=1/2 1=1\n");
  const auto j = json::parse(run("--json analyze --decompose " + st + " " + path("bool4.pea")).out);
  const auto& atoms = j["decomposition"]["primary"]["atoms"];
  ASSERT_EQ(atoms.size(), 2u);
  EXPECT_EQ(atoms[0]["weight"], "1/2");
  EXPECT_EQ(atoms[1]["weight"], "1/2");
  EXPECT_TRUE(j["decomposition"]["unique_certified"].get<bool>());
}

TEST_F(Cli, DecomposeMo2CenterTwoMeasures) {
  const auto st = put("center.state", "a=1/2 a'=1/2 b=1/2 b'=1/2 1=1\n");
  const auto j = json::parse(run("--json analyze --decompose " + st + " " + path("mo2.pea")).out);
  EXPECT_FALSE(j["decomposition"]["second"].is_null());
  EXPECT_FALSE(j["decomposition"]["unique_certified"].get<bool>());
}

TEST_F(Cli, GammaFinite) {
  const auto out = path("z21.pea");
  EXPECT_EQ(run("gamma " + path("z2-std-u21.grp") + " --out " + out).code, 0);
  const auto t = parse_pea(read_file(out));
  EXPECT_EQ(t.size(), 6u);
  EXPECT_TRUE(validate_axioms(t).passed());
}

TEST_F(Cli, GammaChainZ) {
  const auto r = run("gamma " + path("z1-u3.grp"));
  EXPECT_EQ(r.code, 0);
  const auto t = parse_pea(r.out);
  EXPECT_EQ(t.size(), 4u);
  EXPECT_TRUE(same_partial_table(t, corpus::chain(3)));
}

TEST_F(Cli, GammaLazyWindow) {
  const auto r = run("gamma --radius 1 " + path("lex-semidirect.grp"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lazy"), std::string::npos);
  EXPECT_NE(r.out.find("radius: 1"), std::string::npos);
}

TEST_F(Cli, Hom) {
  const auto j = json::parse(run("--json hom sup --gens \"1,0;0,1\" --at 1,1").out);
  EXPECT_EQ(j["exit_code"], 0);
  const auto k = json::parse(run("--json hom jordan --gens \"2,-1\"").out);
  EXPECT_EQ(k["exit_code"], 0);
  EXPECT_EQ(run("hom sup --gens \"1,x\"").code, 1);
}

TEST_F(Cli, CorpusCommand) {
  const auto out = (dir_ / "sub").string();
  EXPECT_EQ(run("corpus " + out).code, 0);
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(out)) n += e.path().extension() == ".pea";
  EXPECT_GE(n, 12u);
}
