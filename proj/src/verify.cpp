#include "bruhat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "bruhat/closedform.hpp"
#include "bruhat/hecke.hpp"
#include "bruhat/poset.hpp"
#include "bruhat/regions.hpp"

namespace bruhat {

namespace {

constexpr std::size_t max_witnesses = 5;

class Stopwatch {
public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class F>
void parallel_for(std::size_t count, int jobs, F&& body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++)
        body(i);
    });
  for (auto& th : pool)
    th.join();
}

SuiteResult& add_suite(VerificationReport& report, std::string name) {
  report.suites.push_back({});
  report.suites.back().name = std::move(name);
  return report.suites.back();
}

void check(SuiteResult& s, bool ok, const std::string& witness) {
  ++s.instances;
  if (ok)
    return;
  ++s.violations;
  if (s.witnesses.size() < max_witnesses)
    s.witnesses.push_back(witness);
}

std::string pair_string(const Element& x, const Element& y) {
  return "[" + x.to_string() + "," + y.to_string() + "]";
}

Element rotate(int k, const Element& w) { return Symmetry(k, false, false)(w); }

// ---------------------------------------------------------------------------
// Interval catalogue for the conjecture run.

struct Record {
  Element x, y;
  Interval interval;
  QPoly fast, oracle;
  std::uint64_t fingerprint = 0;
};

using BucketKey = std::tuple<int, std::size_t, std::vector<int>, std::uint64_t>;

struct Catalogue {
  std::vector<Record> records; // ordered by (top, bottom)
  std::map<BucketKey, std::vector<std::size_t>> buckets;
};

Catalogue build_catalogue(int max_length, int jobs) {
  const auto tops = enumerate_up_to_length(max_length);
  std::vector<std::vector<Record>> per_top(tops.size());
  parallel_for(tops.size(), jobs, [&](std::size_t i) {
    const Element& y = tops[i];
    std::vector<Element> below = lower_interval(y);
    std::sort(below.begin(), below.end(), LengthWordLess{});
    for (const auto& x : below) {
      Record r{x, y, build_interval(x, y), kl_fast(x, y), kl_polynomial(x, y).p, 0};
      r.fingerprint = fingerprint(r.interval);
      per_top[i].push_back(std::move(r));
    }
  });
  Catalogue c;
  for (auto& group : per_top)
    for (auto& r : group)
      c.records.push_back(std::move(r));
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    const auto& I = c.records[i].interval;
    c.buckets[{I.span(), I.size(), I.rank_sizes(), c.records[i].fingerprint}].push_back(i);
  }
  return c;
}

struct Failure {
  std::size_t rep, member;
  std::string what;
  friend bool operator<(const Failure& a, const Failure& b) {
    return std::tie(a.member, a.rep) < std::tie(b.member, b.rep);
  }
};

struct BucketOutcome {
  int span = 0;
  std::size_t classes = 0;
  std::size_t pairs = 0;
  std::vector<Failure> kl, z, cert;
};

BucketOutcome split_bucket(const Catalogue& c, const std::vector<std::size_t>& members) {
  BucketOutcome out;
  out.span = c.records[members.front()].interval.span();
  std::vector<std::size_t> reps;
  for (std::size_t idx : members) {
    const Record& r = c.records[idx];
    bool placed = false;
    for (std::size_t rep : reps) {
      const Record& q = c.records[rep];
      auto cert = is_isomorphic(q.interval, r.interval);
      if (!cert)
        continue;
      placed = true;
      ++out.pairs;
      if (!verify_certificate(q.interval, r.interval, *cert))
        out.cert.push_back({rep, idx, "invalid certificate"});
      if (q.fast != r.fast || q.oracle != r.oracle)
        out.kl.push_back({rep, idx, "P=" + to_string(q.oracle, true) + " vs P=" + to_string(r.oracle, true)});
      if (!z_preserved_check(q.interval, r.interval, *cert))
        out.z.push_back({rep, idx, "Z sets not preserved"});
      break;
    }
    if (!placed)
      reps.push_back(idx);
  }
  out.classes = reps.size();
  return out;
}

void report_failures(SuiteResult& s, const Catalogue& c, std::vector<Failure> failures) {
  std::sort(failures.begin(), failures.end());
  s.violations = failures.size();
  for (std::size_t i = 0; i < failures.size() && i < max_witnesses; ++i) {
    const auto& a = c.records[failures[i].rep];
    const auto& b = c.records[failures[i].member];
    s.witnesses.push_back(pair_string(a.x, a.y) + " ~ " + pair_string(b.x, b.y) + ": " + failures[i].what);
  }
}

} // namespace

bool VerificationReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
}

const SuiteResult* VerificationReport::find(const std::string& name) const {
  for (const auto& s : suites)
    if (s.name == name)
      return &s;
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json js = nlohmann::json::array();
  std::vector<std::string> names;
  for (const auto& s : suites) {
    names.push_back(s.name);
    js.push_back({{"name", s.name},
                  {"passed", s.passed()},
                  {"instances", s.instances},
                  {"violations", s.violations},
                  {"witnesses", s.witnesses},
                  {"details", s.details}});
  }
  nlohmann::json census_json = nlohmann::json::object();
  for (const auto& [d, k] : census)
    census_json[std::to_string(d)] = k;
  return {{"scope", {{"max_length", max_length}, {"jobs", jobs}, {"suites", names}}},
          {"passed", passed()},
          {"suites", js},
          {"seconds", seconds},
          {"census", census_json}};
}

std::string VerificationReport::to_csv() const {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"')
        out += '"';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "suite,passed,instances,violations,witness\n";
  for (const auto& s : suites)
    os << s.name << ',' << (s.passed() ? "true" : "false") << ',' << s.instances << ',' << s.violations << ','
       << quote(s.witnesses.empty() ? "" : s.witnesses.front()) << '\n';
  return os.str();
}

VerificationReport verify_conjecture(int max_length, int jobs) {
  Stopwatch clock;
  VerificationReport report;
  report.max_length = max_length;
  report.jobs = jobs;

  const Catalogue c = build_catalogue(max_length, jobs);

  std::vector<const std::vector<std::size_t>*> buckets;
  for (const auto& [key, members] : c.buckets)
    buckets.push_back(&members);
  std::vector<BucketOutcome> outcomes(buckets.size());
  parallel_for(buckets.size(), jobs, [&](std::size_t i) { outcomes[i] = split_bucket(c, *buckets[i]); });

  std::vector<Failure> kl, z, cert;
  std::size_t pairs = 0, classes = 0, colliding = 0;
  for (const auto& o : outcomes) {
    report.census[o.span] += o.classes;
    pairs += o.pairs;
    classes += o.classes;
    colliding += o.classes > 1;
    kl.insert(kl.end(), o.kl.begin(), o.kl.end());
    z.insert(z.end(), o.z.begin(), o.z.end());
    cert.insert(cert.end(), o.cert.begin(), o.cert.end());
  }

  auto& conj = add_suite(report, "conjecture");
  conj.instances = pairs;
  report_failures(conj, c, kl);
  conj.details = {{"intervals", c.records.size()},
                  {"buckets", c.buckets.size()},
                  {"classes", classes},
                  {"buckets_with_several_classes", colliding}};

  auto& zs = add_suite(report, "z_preservation");
  zs.instances = pairs;
  report_failures(zs, c, z);

  auto& cs = add_suite(report, "certificates");
  cs.instances = pairs;
  report_failures(cs, c, cert);

  auto& fast = add_suite(report, "fast_path");
  auto& graded = add_suite(report, "gradedness");
  for (const auto& r : c.records) {
    check(fast, r.fast == r.oracle, pair_string(r.x, r.y) + " fast " + to_string(r.fast, true) + " oracle " +
                                        to_string(r.oracle, true));
    const auto& I = r.interval;
    bool ok = I.rank(0) == 0 && I.rank(I.size() - 1) == I.span();
    for (std::size_t i = 0; i < I.size(); ++i) {
      if (i > 0 && I.down(i).empty())
        ok = false;
      if (i + 1 < I.size() && I.up(i).empty())
        ok = false;
      for (int j : I.up(i))
        ok = ok && I.rank(j) == I.rank(i) + 1;
    }
    check(graded, ok, pair_string(r.x, r.y));
  }

  report.seconds = clock.seconds();
  return report;
}

std::map<int, std::size_t> iso_class_census(int max_length, int jobs) {
  const Catalogue c = build_catalogue(max_length, jobs);
  std::vector<const std::vector<std::size_t>*> buckets;
  for (const auto& [key, members] : c.buckets)
    buckets.push_back(&members);
  std::vector<BucketOutcome> outcomes(buckets.size());
  parallel_for(buckets.size(), jobs, [&](std::size_t i) { outcomes[i] = split_bucket(c, *buckets[i]); });
  std::map<int, std::size_t> census;
  for (const auto& o : outcomes)
    census[o.span] += o.classes;
  return census;
}

VerificationReport verify_closed_forms(int max_length) {
  Stopwatch clock;
  VerificationReport report;
  report.max_length = max_length;

  std::vector<Element> family;

  auto& xs = add_suite(report, "x_family");
  for (int n = 1; n <= std::min(14, max_length); ++n) {
    family.push_back(x_chain(n));
    check(xs, kl_basis_x(n) == kl_basis(x_chain(n)), "x_" + std::to_string(n));
  }

  auto params = [](int max_total, int offset) {
    std::vector<ThetaIndex> out;
    for (int m = 0; 2 * m + offset <= max_total; ++m)
      for (int n = 0; 2 * m + 2 * n + offset <= max_total; ++n)
        out.push_back({m, n});
    return out;
  };
  auto label = [](const char* what, ThetaIndex idx) {
    return std::string(what) + "(" + std::to_string(idx.m) + "," + std::to_string(idx.n) + ")";
  };

  auto& th = add_suite(report, "theta_family");
  for (auto idx : params(max_length, 3)) {
    family.push_back(theta(idx));
    check(th, kl_basis_theta(idx) == kl_basis(theta(idx)), label("theta", idx));
  }
  auto& th1 = add_suite(report, "theta1_family");
  for (auto idx : params(max_length, 4)) {
    family.push_back(theta1(idx));
    check(th1, kl_basis_theta1(idx) == kl_basis(theta1(idx)), label("theta1", idx));
  }
  auto& th2 = add_suite(report, "theta2_family");
  for (auto idx : params(max_length, 5)) {
    family.push_back(theta2(idx));
    const HeckeElement oracle = kl_basis(theta2(idx));
    check(th2, kl_basis_theta2(idx, 1) == oracle, label("theta2 v1", idx));
    check(th2, kl_basis_theta2(idx, 2) == oracle, label("theta2 v2", idx));
  }

  auto& versions = add_suite(report, "theta2_versions");
  auto& products = add_suite(report, "products");
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      check(versions, kl_basis_theta2({m, n}, 1) == kl_basis_theta2({m, n}, 2), label("theta2", {m, n}));
      check(products, product_identity_check({m, n}).holds(), label("products", {m, n}));
    }

  auto& positivity = add_suite(report, "positivity");
  for (const auto& y : family) {
    bool ok = true;
    const HeckeElement h = kl_basis_closed(y);
    for (const auto& [w, p] : h.terms())
      ok = ok && (w == y ? p == LaurentPoly(1) : (is_nonneg(p) && p.min_exponent() >= 1));
    check(positivity, ok, y.to_string());
  }

  const int fast_bound = std::min(max_length, 12);
  auto& fast = add_suite(report, "kl_fast");
  auto& ginv = add_suite(report, "kl_fast_symmetry");
  for (const auto& y : enumerate_up_to_length(fast_bound))
    for (const auto& x : lower_interval(y)) {
      const QPoly p = kl_fast(x, y);
      check(fast, p == kl_polynomial(x, y).p, pair_string(x, y));
      if (y.length() <= 8)
        for (const auto& t : symmetry_group())
          check(ginv, kl_fast(t(x), t(y)) == p, pair_string(x, y) + " under " + t.name());
    }
  fast.details = {{"bound", fast_bound}, {"fallbacks", kl_fast_fallbacks()}};

  auto& inversion = add_suite(report, "theta_inversion");
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int j = 0; j <= 2; ++j)
        check(inversion, inverse(rotate(j, theta({m, n}))) == rotate(j + n - m, theta({n, m})),
              label("theta", {m, n}) + " j=" + std::to_string(j));

  report.seconds = clock.seconds();
  return report;
}

VerificationReport verify_lemma_suite(int bound) {
  Stopwatch clock;
  VerificationReport report;
  report.max_length = bound;
  const Symmetry rho = Symmetry::rho();
  const Symmetry rho2 = compose(rho, rho);
  auto label = [](const char* what, int m, int n) {
    return std::string(what) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
  };

  auto& card = add_suite(report, "cardinalities");
  nlohmann::json m_literal = nlohmann::json::array();
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const int base = 3 * m * m + 3 * n * n + 12 * m * n;
      auto size = [](const Element& w) { return static_cast<int>(lower_interval(w).size()); };
      check(card, size(theta({m, n})) == base + 9 * m + 9 * n + 6, label("theta", m, n));
      check(card, size(theta1({m, n})) == base + 15 * m + 15 * n + 12, label("theta1", m, n));
      check(card, size(theta2({m, n})) == base + 21 * m + 21 * n + 22, label("theta2", m, n));
      if (m >= 1 && n >= 1) {
        // The M term of the second theta2 formula. Written with the indices
        // the other way round, s is a descent of both elements.
        const Generator s = s_mn({m, n});
        auto union_size = [](const Element& a, const Element& b) {
          std::set<Element> uni(lower_interval(a).begin(), lower_interval(a).end());
          uni.insert(lower_interval(b).begin(), lower_interval(b).end());
          return static_cast<int>(uni.size());
        };
        const Element a = rho(theta({m, n - 1})) * s;
        const Element b = rho2(theta({m - 1, n})) * s;
        const int expected = base + 9 * m + 9 * n + 2;
        const int got = union_size(a, b);
        check(card, got == expected && content(M_element(a, b)) == expected,
              label("M content", m, n) + " union " + std::to_string(got));
        m_literal.push_back({{"m", m},
                             {"n", n},
                             {"expected", expected},
                             {"formula_pair", got},
                             {"swapped_pair", union_size(rho(theta({m - 1, n})) * s, rho2(theta({m, n - 1})) * s)}});
      }
    }

  card.details = {{"m_content", m_literal}};

  auto& inter = add_suite(report, "intersection");
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      check(inter, intersection_check(m, n), label("intersection", m, n));

  auto& hex = add_suite(report, "hexagon");
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const Element t = theta({m, n});
      bool ok = true;
      for (const auto& w : enumerate_up_to_length(t.length() + 1))
        ok = ok && in_theta_lower(w, {m, n}) == bruhat_leq(w, t);
      check(hex, ok, label("hexagon", m, n));
    }

  auto& appendix = add_suite(report, "appendix_identity");
  appendix.details = nlohmann::json::array();
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const auto r = appendix_identity_check(m, n);
      nlohmann::json j = r;
      appendix.details.push_back(j);
      std::string why;
      if (!r.sides_equal)
        why += " sides differ;";
      if (!r.contents_match())
        why += " content " + r.content_left.str() + "/" + r.content_right.str() + " expected " +
               r.content_expected.str() + ";";
      if (!r.left_monotonic)
        why += " left side not monotonic;";
      for (const auto& a : r.anchors)
        if (a.left != a.expected || a.right != a.expected)
          why += " G_" + a.label + " = " + to_string(a.left) + " / " + to_string(a.right) + ", stated " +
                 to_string(a.expected) + ";";
      check(appendix, r.holds(), label("appendix", m, n) + ":" + why);
    }

  auto& par = add_suite(report, "parents");
  auto& coatoms = add_suite(report, "coatoms");
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const Generator s = s_mn({m, n});
      const Element y = theta2({m, n});
      std::vector<std::pair<int, Element>> z;
      if (n > 0)
        z.push_back({1, s0 * theta({m, n - 1})});
      if (m > 0)
        z.push_back({2, s0 * theta({m - 1, n})});
      if (m > 0)
        z.push_back({3, rho2(theta({m - 1, n})) * s});
      if (n > 0)
        z.push_back({4, rho(theta({m, n - 1})) * s});
      std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      const Interval I = build_interval(Element(), y);
      for (std::size_t a = 0; a < z.size(); ++a)
        for (std::size_t b = a + 1; b < z.size(); ++b) {
          const int i = z[a].first, j = z[b].first;
          const std::size_t expected = ((i == 1 && j == 2) || (i == 3 && j == 4)) ? 3 : 2;
          const std::size_t got = parents(z[a].second, z[b].second, I, 2).size();
          check(par, got == expected,
                label("y=theta2", m, n) + " z" + std::to_string(i) + ",z" + std::to_string(j) + " got " +
                    std::to_string(got));
        }
      if (m > 0 && n > 0) {
        const Element z1 = s0 * theta({m, n - 1});
        const Element z2 = s0 * theta({m - 1, n});
        std::set<Element> listed{z1 * rho2(s) * s, z2 * rho(s) * s, y * s, s0 * (s1 * (s0 * y)),
                                 s0 * (s2 * (s0 * y)), s0 * y};
        std::set<Element> actual;
        for (const auto& w : lower_interval(y))
          if (w.length() == y.length() - 1)
            actual.insert(w);
        check(coatoms, listed == actual && actual.size() == 6, label("C_y for theta2", m, n));
      }
    }
  auto& four = add_suite(report, "four_parents");
  for (int k = 6; k <= 12; k += 2) {
    const Element y = x_chain(k);
    const Interval I = build_interval(Element(), y);
    const auto got = parents(x_chain(k - 3), s1 * (s0 * x_chain(k - 5)), I, 2);
    const std::set<Element> expected{x_chain(k - 1), rho(x_chain(k - 1)), theta({k / 2 - 2, 0}),
                                     rho2(theta({k / 2 - 2, 0}))};
    check(four, std::set<Element>(got.begin(), got.end()) == expected && got.size() == 4,
          "k=" + std::to_string(k) + " got " + std::to_string(got.size()));
  }

  const StructuralReport sr = structural_lemma_checks(bound);
  for (const LemmaTally* t : {&sr.single_z3, &sr.empty_z3, &sr.chain_dichotomy, &sr.six_cases}) {
    auto& s = add_suite(report, "structural." + t->name);
    s.instances = t->instances;
    s.violations = t->violations;
    s.witnesses = t->witnesses;
  }
  report.suites.back().details = {
      {"case_hits", std::vector<std::size_t>(std::begin(sr.six_case_hits), std::end(sr.six_case_hits))}};

  auto& mono_h = add_suite(report, "monotonicity_h");
  auto& mono_p = add_suite(report, "monotonicity_p");
  for (const auto& y : enumerate_up_to_length(bound)) {
    const HeckeElement h = kl_basis(y);
    const auto& below = lower_interval(y);
    for (const auto& x : below)
      for (const auto& z : below) {
        if (z.length() <= x.length() || !bruhat_leq(x, z))
          continue;
        const LaurentPoly dh = h.coefficient(x) - vpow(z.length() - x.length()) * h.coefficient(z);
        const QPoly dp = kl_polynomial(x, y).p - kl_polynomial(z, y).p;
        const std::string w = "x=" + x.to_string() + " z=" + z.to_string() + " y=" + y.to_string();
        check(mono_h, is_nonneg(dh), w);
        check(mono_p, is_nonneg(dp), w);
      }
  }

  constexpr int partition_bound = 14;
  auto& partition = add_suite(report, "partition");
  auto& growth = add_suite(report, "growth");
  std::map<int, int> per_length;
  // observed (#left descents, #right descents) per region, reported only
  std::map<std::string, std::map<std::string, std::size_t>> descent_pattern;
  for (const auto& w : enumerate_up_to_length(partition_bound)) {
    ++per_length[w.length()];
    if (w.is_identity())
      continue;
    const auto tags = region_memberships(w);
    bool ok = !tags.empty();
    for (const auto& t : tags)
      ok = ok && t.kind == tags.front().kind;
    check(partition, ok, w.to_string() + " in " + std::to_string(tags.size()) + " regions");
    if (ok)
      ++descent_pattern[to_string(tags.front().kind)][std::to_string(w.descents(Side::left).size()) + "," +
                                                      std::to_string(w.descents(Side::right).size())];
  }
  partition.details = {{"descent_pattern", descent_pattern}};
  for (int n = 1; n <= partition_bound; ++n)
    check(growth, per_length[n] == 3 * n, "length " + std::to_string(n) + ": " + std::to_string(per_length[n]));

  auto& g_len = add_suite(report, "symmetry_length");
  auto& g_order = add_suite(report, "symmetry_order");
  auto& g_kl = add_suite(report, "symmetry_kl");
  const auto all = enumerate_up_to_length(bound);
  for (const auto& t : symmetry_group()) {
    for (const auto& w : all)
      check(g_len, t(w).length() == w.length(), w.to_string() + " under " + t.name());
    for (const auto& y : all)
      for (const auto& x : all) {
        if (x.length() > y.length())
          continue;
        const bool le = bruhat_leq(x, y);
        check(g_order, le == bruhat_leq(t(x), t(y)), pair_string(x, y) + " under " + t.name());
        if (le)
          check(g_kl, kl_polynomial(x, y).p == kl_polynomial(t(x), t(y)).p, pair_string(x, y) + " under " + t.name());
      }
  }

  report.seconds = clock.seconds();
  return report;
}

} // namespace bruhat
