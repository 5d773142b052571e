#include "bruhat/regions.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "bruhat/memo.hpp"

namespace bruhat {

namespace {

struct FamilyEntry {
  RegionKind kind;
  ThetaIndex params;
  int chain_len = 0;
};

using FamilyTable = std::unordered_map<Element, FamilyEntry, ElementHash>;

// Canonical family members of a given length.
std::shared_ptr<const FamilyTable> family_table(int len) {
  static ConcurrentMemo<int, std::shared_ptr<const FamilyTable>> memo;
  return memo.get_or_compute(len, [len] {
    auto table = std::make_shared<FamilyTable>();
    if (len >= 1)
      table->emplace(x_chain(len), FamilyEntry{RegionKind::X, {}, len});
    auto add_thetas = [&](int offset, RegionKind kind, Element (*make)(ThetaIndex)) {
      int rest = len - offset;
      if (rest < 0 || rest % 2 != 0)
        return;
      for (int m = 0; m <= rest / 2; ++m) {
        ThetaIndex idx{m, rest / 2 - m};
        table->emplace(make(idx), FamilyEntry{kind, idx, 0});
      }
    };
    add_thetas(3, RegionKind::Theta, &theta);
    add_thetas(4, RegionKind::Theta1, &theta1);
    add_thetas(5, RegionKind::Theta2, &theta2);
    return std::shared_ptr<const FamilyTable>(std::move(table));
  });
}

using Point2 = std::array<std::int64_t, 2>;

// The plane x1 + x2 + x3 = 0 is affinely identified with (x1, x2).
Point2 project(const LatticePoint& p) { return {p[0], p[1]}; }

std::int64_t cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counter-clockwise hull, collinear points dropped.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3)
    return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0)
      --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    const auto& p = pts[i];
    while (k >= t && cross(hull[k - 2], hull[k - 1], p) <= 0)
      --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

struct IndexHash {
  std::size_t operator()(const ThetaIndex& idx) const {
    return hash_mix(static_cast<std::size_t>(idx.m), static_cast<std::size_t>(idx.n));
  }
};

std::shared_ptr<const std::vector<Point2>> theta_hull(ThetaIndex idx) {
  static ConcurrentMemo<ThetaIndex, std::shared_ptr<const std::vector<Point2>>, IndexHash> memo;
  return memo.get_or_compute(idx, [idx] {
    std::vector<Point2> pts;
    for (const auto& c : theta_hexagon_vertices(idx))
      pts.push_back(project(c));
    return std::make_shared<const std::vector<Point2>>(convex_hull(std::move(pts)));
  });
}

} // namespace

Element x_chain(int n) {
  if (n < 1)
    throw std::invalid_argument("x_n requires n >= 1");
  Word word;
  for (int k = 1; k <= n; ++k)
    word.emplace_back(k);
  return from_word(word);
}

Element theta(ThetaIndex idx) {
  if (idx.m < 0 || idx.n < 0)
    throw std::invalid_argument("theta(m,n) requires m, n >= 0");
  Word word;
  for (int k = 1; k <= 2 * idx.m + 2; ++k)
    word.emplace_back(k);
  for (int k = 2 * idx.m + 1; k >= 2 * idx.m - 2 * idx.n + 1; --k)
    word.emplace_back(k);
  return from_word(word);
}

Generator s_mn(ThetaIndex idx) {
  Element t = theta(idx);
  auto ascents = GeneratorSet(static_cast<std::uint8_t>(~t.descents(Side::right).bits() & 7u)).members();
  if (ascents.size() != 1)
    throw std::logic_error("theta(m,n) must have exactly one right ascent");
  return ascents.front();
}

Element theta1(ThetaIndex idx) { return theta(idx) * s_mn(idx); }

Element theta2(ThetaIndex idx) { return s0 * theta1(idx); }

std::string to_string(RegionKind kind) {
  switch (kind) {
  case RegionKind::Identity:
    return "Identity";
  case RegionKind::X:
    return "X";
  case RegionKind::Theta:
    return "Theta";
  case RegionKind::Theta1:
    return "Theta1";
  case RegionKind::Theta2:
    return "Theta2";
  }
  return "?";
}

RegionKind region_kind_from_string(const std::string& name) {
  for (auto kind : {RegionKind::Identity, RegionKind::X, RegionKind::Theta, RegionKind::Theta1, RegionKind::Theta2})
    if (to_string(kind) == name)
      return kind;
  throw std::invalid_argument("unknown region kind \"" + name + "\"");
}

Element family_member(const RegionTag& tag) {
  switch (tag.kind) {
  case RegionKind::Identity:
    return Element();
  case RegionKind::X:
    return x_chain(tag.chain_len);
  case RegionKind::Theta:
    return theta(tag.params);
  case RegionKind::Theta1:
    return theta1(tag.params);
  case RegionKind::Theta2:
    return theta2(tag.params);
  }
  throw std::logic_error("bad region kind");
}

Element RegionTag::reconstruct() const { return tau(family_member(*this)); }

std::vector<RegionTag> region_memberships(const Element& w) {
  std::vector<RegionTag> out;
  if (w.is_identity()) {
    out.push_back(RegionTag{});
    return out;
  }
  auto table = family_table(w.length());
  for (Symmetry t : symmetry_group()) {
    auto it = table->find(inverse(t)(w));
    if (it != table->end())
      out.push_back(RegionTag{it->second.kind, t, it->second.params, it->second.chain_len});
  }
  return out;
}

RegionTag classify(const Element& w) {
  if (w.is_identity())
    return RegionTag{};
  auto table = family_table(w.length());
  for (Symmetry t : symmetry_group()) {
    auto it = table->find(inverse(t)(w));
    if (it != table->end())
      return RegionTag{it->second.kind, t, it->second.params, it->second.chain_len};
  }
  throw std::logic_error("element " + w.to_string() + " lies in no region");
}

std::vector<LatticePoint> theta_hexagon_vertices(ThetaIndex idx) {
  const Element t = theta(idx);
  std::vector<LatticePoint> out;
  for (const char* u : {"", "1", "2", "12", "21", "121"})
    out.push_back(alcove_coordinates(from_word(u) * t).centroid);
  return out;
}

bool in_theta_lower(const Element& w, ThetaIndex idx) {
  const auto hull_ptr = theta_hull(idx);
  const auto& hull = *hull_ptr;
  const Point2 p = project(alcove_coordinates(w).centroid);
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) < 0)
      return false;
  return true;
}

std::vector<Element> boundary_set(ThetaIndex idx) {
  std::vector<Element> out;
  for (const auto& w : enumerate_up_to_length(theta(idx).length())) {
    if (!in_theta_lower(w, idx))
      continue;
    for (Generator s : all_generators) {
      if (!in_theta_lower(w * s, idx)) {
        out.push_back(w);
        break;
      }
    }
  }
  return out;
}

bool intersection_check(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("intersection_check requires m, n >= 1");
  const auto& a = lower_interval(theta({m - 1, n}));
  const auto& b = lower_interval(theta({m, n - 1}));
  std::vector<Element> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  const auto& expected = lower_interval(theta1({m - 1, n - 1}));
  return s_mn({m - 1, n - 1}) == s_mn({m, n}) && common == expected;
}

} // namespace bruhat
