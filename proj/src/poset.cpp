#include "bruhat/poset.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "bruhat/closedform.hpp"
#include "bruhat/memo.hpp"

namespace bruhat {

namespace {

constexpr std::size_t max_witnesses = 5;

const QPoly& one_plus_q() {
  static const QPoly p = QPoly(1) + qpow(1);
  return p;
}

// Colour refinement by hashed signatures. Colours are labelling-independent,
// so they are comparable across intervals.
std::vector<std::uint64_t> refine_colours(const Interval& a) {
  const std::size_t n = a.size();
  std::vector<std::uint64_t> colour(n);
  for (std::size_t i = 0; i < n; ++i)
    colour[i] = hash_mix(0x5eed, static_cast<std::uint64_t>(a.rank(i)));

  auto distinct = [](std::vector<std::uint64_t> c) {
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  };

  std::size_t classes = distinct(colour);
  std::vector<std::uint64_t> next(n), scratch;
  for (std::size_t round = 0; round < n; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t h = hash_mix(colour[i], a.down(i).size());
      h = hash_mix(h, a.up(i).size());
      scratch.clear();
      for (int j : a.down(i))
        scratch.push_back(colour[j]);
      std::sort(scratch.begin(), scratch.end());
      for (auto c : scratch)
        h = hash_mix(h, c);
      h = hash_mix(h, 0xd0);
      scratch.clear();
      for (int j : a.up(i))
        scratch.push_back(colour[j]);
      std::sort(scratch.begin(), scratch.end());
      for (auto c : scratch)
        h = hash_mix(h, c);
      next[i] = h;
    }
    colour.swap(next);
    const std::size_t now = distinct(colour);
    if (now == classes)
      break;
    classes = now;
  }
  return colour;
}

std::vector<int> indices_of(const Interval& interval, const std::vector<Element>& elements) {
  std::vector<int> out;
  for (const auto& e : elements)
    out.push_back(static_cast<int>(*interval.index_of(e)));
  std::sort(out.begin(), out.end());
  return out;
}

void record(LemmaTally& t, bool ok, const Element& x, const Element& y) {
  ++t.instances;
  if (ok)
    return;
  ++t.violations;
  if (t.witnesses.size() < max_witnesses)
    t.witnesses.push_back("x=" + x.to_string() + " y=" + y.to_string());
}

// Index of the matching case among the six for canonical y = s0 theta(m,n) s,
// or -1.
int six_case_index(const Element& x, ThetaIndex idx) {
  const Symmetry rho = Symmetry::rho();
  const Symmetry rho2 = compose(rho, rho);
  const auto [m, n] = idx;
  if (m == 0 && n == 0) {
    if (x == Element() * s0)
      return 0;
    if (x.is_identity())
      return 1;
  } else if (m > 0 && n == 0) {
    if (x == rho(theta({m - 1, 0})))
      return 2;
    if (x == rho(x_chain(2 * m)))
      return 3;
  } else if (m == 0 && n > 0) {
    if (x == rho2(theta({0, n - 1})))
      return 4;
    if (x == rho2(Symmetry::sigma()(x_chain(2 * n))))
      return 5;
  }
  return -1;
}

} // namespace

std::vector<int> Interval::rank_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(span()) + 1, 0);
  for (int r : rank_)
    ++sizes[static_cast<std::size_t>(r)];
  return sizes;
}

std::size_t Interval::cover_count() const {
  std::size_t total = 0;
  for (const auto& d : down_)
    total += d.size();
  return total;
}

std::optional<std::size_t> Interval::index_of(const Element& w) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), w, LengthWordLess{});
  if (it == members_.end() || *it != w)
    return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

Interval build_interval(const Element& x, const Element& y) {
  if (!bruhat_leq(x, y))
    throw NotComparableError("not comparable: " + x.to_string() + " is not below " + y.to_string());
  Interval out;
  for (const auto& z : lower_interval(y))
    if (bruhat_leq(x, z))
      out.members_.push_back(z);
  std::sort(out.members_.begin(), out.members_.end(), LengthWordLess{});

  const std::size_t n = out.members_.size();
  out.rank_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.rank_[i] = out.members_[i].length() - x.length();
  out.down_.assign(n, {});
  out.up_.assign(n, {});
  out.cover_matrix_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (out.rank_[j] > out.rank_[i] + 1)
        break;
      if (out.rank_[j] == out.rank_[i] + 1 && bruhat_leq(out.members_[i], out.members_[j])) {
        out.cover_matrix_[i * n + j] = 1;
        out.up_[i].push_back(static_cast<int>(j));
        out.down_[j].push_back(static_cast<int>(i));
      }
    }
  return out;
}

std::optional<IsoCertificate> is_isomorphic(const Interval& a, const Interval& b) {
  if (a.size() != b.size() || a.span() != b.span() || a.cover_count() != b.cover_count() ||
      a.rank_sizes() != b.rank_sizes())
    return std::nullopt;
  const auto ca = refine_colours(a);
  const auto cb = refine_colours(b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return std::nullopt;
  }

  const std::size_t n = a.size();
  std::unordered_map<std::uint64_t, std::vector<int>> candidates;
  for (std::size_t j = 0; j < n; ++j)
    candidates[cb[j]].push_back(static_cast<int>(j));

  IsoCertificate cert(n, -1);
  std::vector<char> used(n, 0);

  auto consistent = [&](std::size_t i, int j) {
    // every assigned member one rank below: cover in A iff cover in B
    for (std::size_t k = 0; k < i; ++k) {
      if (a.rank(k) != a.rank(i) - 1)
        continue;
      if (a.covers(k, i) != b.covers(static_cast<std::size_t>(cert[k]), static_cast<std::size_t>(j)))
        return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == n)
      return true;
    for (int j : candidates[ca[i]]) {
      if (used[j] || !consistent(i, j))
        continue;
      used[j] = 1;
      cert[i] = j;
      if (self(self, i + 1))
        return true;
      used[j] = 0;
    }
    cert[i] = -1;
    return false;
  };

  if (!search(search, 0))
    return std::nullopt;
  return cert;
}

bool verify_certificate(const Interval& a, const Interval& b, const IsoCertificate& cert) {
  const std::size_t n = a.size();
  if (b.size() != n || cert.size() != n)
    return false;
  std::vector<char> hit(n, 0);
  for (int j : cert) {
    if (j < 0 || static_cast<std::size_t>(j) >= n || hit[j])
      return false;
    hit[j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a.rank(i) != b.rank(cert[i]))
      return false;
    for (std::size_t k = 0; k < n; ++k)
      if (a.covers(i, k) != b.covers(cert[i], cert[k]))
        return false;
  }
  return true;
}

std::uint64_t fingerprint(const Interval& a) {
  auto colours = refine_colours(a);
  std::sort(colours.begin(), colours.end());
  std::uint64_t h = hash_mix(0xf1f1, a.size());
  h = hash_mix(h, static_cast<std::uint64_t>(a.span()));
  for (auto c : colours)
    h = hash_mix(h, c);
  return h;
}

std::vector<Element> parents(const Element& a, const Element& b, const Interval& interval, int m) {
  if (!interval.contains(a) || !interval.contains(b))
    throw std::invalid_argument("parents: elements must lie in the interval");
  if (a.length() != b.length())
    throw std::invalid_argument("parents: rank mismatch between " + a.to_string() + " and " + b.to_string());
  if (m < 1)
    throw std::invalid_argument("parents: m must be positive");
  std::vector<Element> out;
  for (const auto& z : interval.members())
    if (z.length() == a.length() + m && bruhat_leq(a, z) && bruhat_leq(b, z))
      out.push_back(z);
  return out;
}

std::vector<Element> z_invariant(const Interval& interval, int m) {
  std::vector<Element> out;
  const Element& y = interval.top();
  for (const auto& z : interval.members())
    if (y.length() - z.length() == m && kl_fast(z, y) == one_plus_q())
      out.push_back(z);
  return out;
}

bool z_preserved_check(const Interval& a, const Interval& b, const IsoCertificate& cert) {
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> image;
    for (int i : indices_of(a, z_invariant(a, m)))
      image.push_back(cert[i]);
    std::sort(image.begin(), image.end());
    if (image != indices_of(b, z_invariant(b, m)))
      return false;
  }
  return true;
}

StructuralReport structural_lemma_checks(int bound) {
  StructuralReport r;
  r.bound = bound;
  r.single_z3.name = "single_z3_gives_one_plus_q";
  r.empty_z3.name = "empty_z3_gives_one";
  r.chain_dichotomy.name = "chain_dichotomy";
  r.six_cases.name = "six_cases";

  for (const auto& y : enumerate_up_to_length(bound)) {
    const RegionTag tag = classify(y);
    if (tag.kind == RegionKind::Identity || tag.kind == RegionKind::Theta)
      continue;
    const auto& below = lower_interval(y);
    std::map<Element, QPoly> P;
    for (const auto& z : below)
      P.emplace(z, kl_fast(z, y));

    for (const auto& x : below) {
      std::size_t z3 = 0, z4 = 0;
      for (const auto& z : below) {
        const int corank = y.length() - z.length();
        if ((corank != 3 && corank != 4) || P.at(z) != one_plus_q() || !bruhat_leq(x, z))
          continue;
        (corank == 3 ? z3 : z4)++;
      }
      const QPoly& p = P.at(x);
      const bool is_one = p == QPoly(1);

      if (z3 == 1)
        record(r.single_z3, p == one_plus_q(), x, y);
      if (z3 == 0 && (tag.kind == RegionKind::Theta1 || tag.kind == RegionKind::X))
        record(r.empty_z3, is_one, x, y);
      if (tag.kind == RegionKind::X)
        record(r.chain_dichotomy, p == (z3 == 0 ? QPoly(1) : one_plus_q()), x, y);
      if (tag.kind == RegionKind::Theta2 && z3 == 0 && !is_one) {
        const int which = six_case_index(inverse(tag.tau)(x), tag.params);
        const int gap = y.length() - x.length();
        const bool ok = which >= 0 && p == one_plus_q() && z4 == 1 && (gap == 4 || gap == 5);
        if (which >= 0)
          ++r.six_case_hits[which];
        record(r.six_cases, ok, x, y);
      }
    }
  }
  return r;
}

nlohmann::json interval_to_json(const Interval& interval) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& z : interval.members())
    members.push_back(z.to_string());
  nlohmann::json covers = nlohmann::json::array();
  for (std::size_t j = 0; j < interval.size(); ++j)
    for (int i : interval.down(j))
      covers.push_back({i, static_cast<int>(j)});
  return {{"bottom", interval.bottom().to_string()},
          {"top", interval.top().to_string()},
          {"members", members},
          {"covers", covers}};
}

void to_json(nlohmann::json& j, const LemmaTally& t) {
  j = {{"name", t.name},
       {"holds", t.holds()},
       {"instances", t.instances},
       {"violations", t.violations},
       {"witnesses", t.witnesses}};
}

void to_json(nlohmann::json& j, const StructuralReport& r) {
  j = {{"bound", r.bound},
       {"holds", r.holds()},
       {"lemmas", {r.single_z3, r.empty_z3, r.chain_dichotomy, r.six_cases}},
       {"six_case_hits", std::vector<std::size_t>(std::begin(r.six_case_hits), std::end(r.six_case_hits))}};
}

} // namespace bruhat
