#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sys/wait.h>

#include "bruhat/cache.hpp"
#include "bruhat/regions.hpp"
#include "bruhat/render.hpp"

using namespace bruhat;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + BRUHAT_FORGE_BIN + std::string(" ") + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe))
    out.append(buf, n);
  const int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("bruhat_forge_test_" + std::to_string(::getpid()) + "_" + name);
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++n;
  return n;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

} // namespace

TEST(Cache, CoefficientText) {
  EXPECT_EQ(format_coefficients(QPoly(1) + qpow(1)), "1,1");
  EXPECT_EQ(format_coefficients(QPoly()), "0");
  EXPECT_EQ(format_coefficients(QPoly(1) + QPoly::monomial(3, 2)), "1,0,0,2");
  EXPECT_EQ(parse_coefficients("1,0,0,2"), QPoly(1) + QPoly::monomial(3, 2));
  EXPECT_TRUE(parse_coefficients("0").is_zero());
}

TEST(Cache, RoundTrip) {
  const fs::path p = temp_path("cache.tsv");
  fs::remove(p);
  {
    CacheFile c(p);
    EXPECT_EQ(c.size(), 0u);
    EXPECT_TRUE(c.store(Element(), x_chain(4), QPoly(1) + qpow(1)));
    EXPECT_FALSE(c.store(Element(), x_chain(4), QPoly(1) + qpow(1)));
    EXPECT_TRUE(c.store(from_word("0"), from_word("0"), QPoly(1)));
  }
  CacheFile again(p);
  EXPECT_EQ(again.size(), 2u);
  EXPECT_EQ(again.lookup(Element(), x_chain(4)), QPoly(1) + qpow(1));
  EXPECT_FALSE(again.lookup(Element(), x_chain(5)).has_value());
  const std::string text = read_file(p);
  EXPECT_EQ(text.substr(0, text.find('\n')), cache_header);
  EXPECT_NE(text.find("\t1201\t1,1\n"), std::string::npos);
  fs::remove(p);
}

TEST(Cache, RejectsBadFiles) {
  const fs::path p = temp_path("bad.tsv");
  std::ofstream(p) << "not a cache\n";
  EXPECT_THROW(CacheFile{p}, std::runtime_error);
  std::ofstream(p) << cache_header << "\n\t1\n";
  EXPECT_THROW(CacheFile{p}, std::runtime_error);
  fs::remove(p);
}

TEST(Render, RegionsGolden) {
  const std::string svg = render_regions(6);
  EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.find("<svg") != std::string::npos, true);
  EXPECT_EQ(count(svg, "class=\"alcove\""), 64u);
  std::map<std::string, std::size_t> census;
  for (const auto& w : enumerate_up_to_length(6))
    ++census[to_string(classify(w).kind)];
  const std::regex region("data-region=\"([A-Za-z0-9]+)\"");
  std::map<std::string, std::size_t> drawn;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), region); it != std::sregex_iterator(); ++it)
    ++drawn[(*it)[1]];
  EXPECT_EQ(drawn, census);
  EXPECT_EQ(count(svg, "#ffd700"), 1u);
  EXPECT_NE(svg.find("data-word=\"01210\""), std::string::npos);
}

TEST(Render, Interval) {
  const std::string svg = render_interval(Element(), from_word("1210"));
  EXPECT_EQ(count(svg, "data-member=\"true\""), 12u);
  const std::string one = render_interval(Element(), Element());
  EXPECT_EQ(count(one, "class=\"alcove\""), 1u);
  EXPECT_EQ(count(one, "#ffd700"), 1u);
  EXPECT_THROW(render_interval(from_word("0"), from_word("121")), std::exception);
}

TEST(Cli, Kl) {
  const CliRun a = run("kl \"\" 1234");
  EXPECT_EQ(a.status, 0);
  EXPECT_NE(a.out.find("P = 1+q"), std::string::npos) << a.out;
  // digits are read mod 3: 1230 is s1 s2 s0 s0 = s1 s2
  const CliRun b = run("kl \"\" 1230");
  EXPECT_EQ(b.status, 0);
  EXPECT_NE(b.out.find("P = 1\n"), std::string::npos) << b.out;
  const CliRun c = run("kl 0 121");
  EXPECT_NE(c.out.find("P = 0"), std::string::npos) << c.out;
  EXPECT_EQ(run("kl \"\" 01210 --via both").status, 0);
  EXPECT_EQ(run("kl \"\" 12x").status, 1);
  EXPECT_EQ(run("kl").status, 1);
}

TEST(Cli, KlUsesCache) {
  const fs::path p = temp_path("cli_cache.tsv");
  fs::remove(p);
  const std::string env = "BRUHAT_FORGE_CACHE=" + p.string();
  EXPECT_EQ(run("kl \"\" 1234", env).status, 0);
  EXPECT_NE(read_file(p).find("1,1"), std::string::npos);
  EXPECT_EQ(run("kl \"\" 1234", env).out, run("kl \"\" 1234").out);
  fs::remove(p);
}

TEST(Cli, ClassifyAndInterval) {
  const CliRun c = run("classify 01210");
  EXPECT_EQ(c.status, 0);
  EXPECT_NE(c.out.find("\"kind\":\"Theta2\""), std::string::npos);
  const CliRun i = run("interval \"\" 121");
  EXPECT_NE(i.out.find("6 members"), std::string::npos) << i.out;
  const CliRun j = run("interval \"\" 121 --json");
  EXPECT_NE(j.out.find("\"covers\""), std::string::npos);
  EXPECT_EQ(run("interval 0 121").status, 1);
}

TEST(Cli, VerifyAndCensus) {
  const fs::path js = temp_path("report.json"), csv = temp_path("report.csv");
  const CliRun v = run("verify conjecture --max-length 5 --jobs 2 --json " + js.string() + " --csv " + csv.string());
  EXPECT_EQ(v.status, 0) << v.out;
  EXPECT_NE(v.out.find("PASS conjecture"), std::string::npos);
  EXPECT_NE(read_file(js).find("\"census\""), std::string::npos);
  EXPECT_EQ(read_file(csv).rfind("suite,passed", 0), 0u);
  fs::remove(js);
  fs::remove(csv);
  const CliRun l = run("verify lemmas --max-length 6");
  EXPECT_EQ(l.status, 2);
  const CliRun c = run("census --max-length 3");
  EXPECT_EQ(c.out, "length,classes\n0,1\n1,1\n2,1\n3,2\n");
  EXPECT_EQ(run("verify nonsense").status, 1);
}

TEST(Cli, Render) {
  const fs::path out = temp_path("regions.svg");
  EXPECT_EQ(run("render --regions --radius 2 -o " + out.string()).status, 0);
  EXPECT_EQ(count(read_file(out), "class=\"alcove\""), 10u);
  EXPECT_EQ(run("render --interval \"\" 1210 -o " + out.string()).status, 0);
  EXPECT_EQ(count(read_file(out), "data-member=\"true\""), 12u);
  EXPECT_EQ(run("render --regions").status, 1);
  fs::remove(out);
}
