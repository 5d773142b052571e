// bruhat_forge: command-line front end.
//
// Exit codes: 0 success, 1 usage or bad input, 2 verification failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bruhat/cache.hpp"
#include "bruhat/closedform.hpp"
#include "bruhat/hecke.hpp"
#include "bruhat/poset.hpp"
#include "bruhat/regions.hpp"
#include "bruhat/render.hpp"
#include "bruhat/serialize.hpp"
#include "bruhat/verify.hpp"

using namespace bruhat;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_failed = 2;

std::unique_ptr<CacheFile> open_cache() {
  if (auto path = cache_path_from_env())
    return std::make_unique<CacheFile>(*path);
  return nullptr;
}

int run_kl(const std::string& xw, const std::string& yw, const std::string& via) {
  const Element x = from_word(xw);
  const Element y = from_word(yw);
  auto cache = open_cache();

  std::optional<QPoly> by_formula, by_recursion;
  if (via == "formula" || via == "both") {
    if (cache)
      by_formula = cache->lookup(x, y);
    if (!by_formula)
      by_formula = kl_fast(x, y);
  }
  if (via == "recursion" || via == "both")
    by_recursion = kl_polynomial(x, y).p;

  if (by_formula && by_recursion && *by_formula != *by_recursion) {
    std::cout << "formula:   P = " << to_string(*by_formula, true) << '\n'
              << "recursion: P = " << to_string(*by_recursion, true) << '\n';
    std::cerr << "error: formula and recursion disagree\n";
    return exit_failed;
  }
  const QPoly p = by_formula ? *by_formula : *by_recursion;
  if (cache && bruhat_leq(x, y))
    cache->store(x, y, p);
  const LaurentPoly h = bruhat_leq(x, y) ? from_q(p, y.length() - x.length()) : LaurentPoly();
  std::cout << "h = " << to_string(h, true) << '\n' << "P = " << to_string(p, true) << '\n';
  return exit_ok;
}

int run_classify(const std::string& word) {
  std::cout << region_tag_to_json(classify(from_word(word))).dump() << '\n';
  return exit_ok;
}

int run_interval(const std::string& xw, const std::string& yw, bool as_json) {
  const Interval I = build_interval(from_word(xw), from_word(yw));
  if (as_json) {
    std::cout << interval_to_json(I).dump(2) << '\n';
    return exit_ok;
  }
  std::cout << "[" << I.bottom().to_string() << ", " << I.top().to_string() << "]: " << I.size() << " members, "
            << I.cover_count() << " covers\n";
  for (int r = 0; r <= I.span(); ++r) {
    std::cout << "rank " << r << ':';
    for (std::size_t i = 0; i < I.size(); ++i)
      if (I.rank(i) == r)
        std::cout << ' ' << (I.member(i).is_identity() ? "e" : I.member(i).to_string());
    std::cout << '\n';
  }
  return exit_ok;
}

int run_verify(const std::string& suite, int max_length, int jobs, const std::string& json_out,
               const std::string& csv_out) {
  VerificationReport report;
  if (suite == "conjecture")
    report = verify_conjecture(max_length > 0 ? max_length : conjecture_default_bound, jobs);
  else if (suite == "closed-forms")
    report = verify_closed_forms(max_length > 0 ? max_length : closed_form_default_bound);
  else if (suite == "lemmas")
    report = verify_lemma_suite(max_length > 0 ? max_length : lemma_default_bound);
  else
    throw CLI::ValidationError("suite", "unknown suite " + suite);

  for (const auto& s : report.suites) {
    std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.instances << " checks, " << s.violations
              << " violations)\n";
    for (const auto& w : s.witnesses)
      std::cout << "    " << w << '\n';
  }
  if (!report.census.empty()) {
    std::cout << "isomorphism classes by interval length:";
    for (const auto& [d, k] : report.census)
      std::cout << ' ' << d << ':' << k;
    std::cout << '\n';
  }
  std::cout << (report.passed() ? "verdict: pass" : "verdict: fail") << " in " << report.seconds << " s\n";
  if (!json_out.empty())
    std::ofstream(json_out) << report.to_json().dump(2) << '\n';
  if (!csv_out.empty())
    std::ofstream(csv_out) << report.to_csv();
  return report.passed() ? exit_ok : exit_failed;
}

int run_census(int max_length, int jobs) {
  std::cout << "length,classes\n";
  for (const auto& [d, k] : iso_class_census(max_length, jobs))
    std::cout << d << ',' << k << '\n';
  return exit_ok;
}

int run_render(const std::vector<std::string>& interval, bool regions, int radius, const std::string& out) {
  std::string svg;
  if (regions)
    svg = render_regions(radius >= 0 ? radius : 6);
  else if (interval.size() == 2)
    svg = render_interval(from_word(interval[0]), from_word(interval[1]), radius);
  else
    throw CLI::ValidationError("render", "pass --regions or --interval <x> <y>");
  std::ofstream file(out);
  if (!file)
    throw std::runtime_error("cannot write " + out);
  file << svg;
  return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig polynomials and Bruhat intervals of the affine Weyl group A~2"};
  app.require_subcommand(1);

  std::string xw, yw, via = "formula";
  auto* kl = app.add_subcommand("kl", "KL polynomial P_{x,y}");
  kl->add_option("x", xw, "bottom word")->required();
  kl->add_option("y", yw, "top word")->required();
  kl->add_option("--via", via, "formula, recursion or both")
      ->check(CLI::IsMember({"formula", "recursion", "both"}));

  std::string word;
  auto* cls = app.add_subcommand("classify", "region and symmetry of an element");
  cls->add_option("word", word)->required();

  bool as_json = false;
  auto* iv = app.add_subcommand("interval", "the Bruhat interval [x, y]");
  iv->add_option("x", xw)->required();
  iv->add_option("y", yw)->required();
  iv->add_flag("--json", as_json);

  std::string suite, json_out, csv_out;
  int max_length = 0, jobs = 1;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite, "conjecture, closed-forms or lemmas")
      ->required()
      ->check(CLI::IsMember({"conjecture", "closed-forms", "lemmas"}));
  ver->add_option("--max-length", max_length)->check(CLI::Range(0, enumeration_hard_cap));
  ver->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  ver->add_option("--json", json_out, "write the JSON report here");
  ver->add_option("--csv", csv_out, "write the CSV report here");

  int census_length = conjecture_default_bound;
  auto* cen = app.add_subcommand("census", "isomorphism classes per interval length");
  cen->add_option("--max-length", census_length)->check(CLI::Range(0, enumeration_hard_cap));
  cen->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  std::vector<std::string> interval_words;
  bool regions = false;
  int radius = -1;
  std::string out;
  auto* ren = app.add_subcommand("render", "SVG of the alcove picture");
  auto* iv_opt = ren->add_option("--interval", interval_words)->expected(2)->allow_extra_args(false);
  ren->add_flag("--regions", regions)->excludes(iv_opt);
  ren->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  ren->add_option("-o,--output", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*kl)
      return run_kl(xw, yw, via);
    if (*cls)
      return run_classify(word);
    if (*iv)
      return run_interval(xw, yw, as_json);
    if (*ver)
      return run_verify(suite, max_length, jobs, json_out, csv_out);
    if (*cen)
      return run_census(census_length, jobs);
    if (*ren)
      return run_render(interval_words, regions, radius, out);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
