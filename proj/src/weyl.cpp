#include "bruhat/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <unordered_set>

#include "bruhat/memo.hpp"

namespace bruhat {

namespace {

using Window = std::array<std::int64_t, 3>;

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

// Residue in {1,2,3} and quotient: i = 3q + r.
std::pair<std::int64_t, int> split_index(std::int64_t i) {
  std::int64_t q = floor_div(i - 1, 3);
  return {q, static_cast<int>(i - 3 * q)};
}

std::int64_t evaluate(const Window& w, std::int64_t i) {
  auto [q, r] = split_index(i);
  return w[r - 1] + 3 * q;
}

Window invert_window(const Window& w) {
  Window inv{};
  for (int r = 1; r <= 3; ++r) {
    auto [q, rr] = split_index(w[r - 1]);
    inv[rr - 1] = r - 3 * q;
  }
  return inv;
}

int shi_length(const Window& w) {
  std::int64_t total = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      total += std::abs(floor_div(w[j] - w[i], 3));
  return static_cast<int>(total);
}

GeneratorSet right_descent_set(const Window& w) {
  std::uint8_t bits = 0;
  if (w[2] - 3 > w[0])
    bits |= 1u;
  if (w[0] > w[1])
    bits |= 2u;
  if (w[1] > w[2])
    bits |= 4u;
  return GeneratorSet(bits);
}

Window right_act(Window w, Generator s) {
  switch (s.index()) {
  case 1:
    std::swap(w[0], w[1]);
    break;
  case 2:
    std::swap(w[1], w[2]);
    break;
  default: {
    std::int64_t first = w[2] - 3;
    std::int64_t last = w[0] + 3;
    w[0] = first;
    w[2] = last;
  }
  }
  return w;
}

std::int64_t reflect_value(std::int64_t v, Generator s) {
  auto [q, r] = split_index(v);
  int residue = r % 3; // residue mod 3 in {0,1,2}
  if (residue == s.index())
    return v + 1;
  if (residue == (s.index() + 1) % 3)
    return v - 1;
  return v;
}

struct PairHash {
  std::size_t operator()(const std::pair<Element, Element>& p) const {
    return hash_mix(ElementHash{}(p.first), ElementHash{}(p.second));
  }
};

ConcurrentMemo<std::pair<Element, Element>, bool, PairHash>& bruhat_memo() {
  static ConcurrentMemo<std::pair<Element, Element>, bool, PairHash> memo;
  return memo;
}

using LowerSet = std::shared_ptr<const std::vector<Element>>;

ConcurrentMemo<Element, LowerSet, ElementHash>& lower_memo() {
  static ConcurrentMemo<Element, LowerSet, ElementHash> memo;
  return memo;
}

Generator first_of(GeneratorSet set) {
  for (Generator s : all_generators)
    if (set.contains(s))
      return s;
  throw std::logic_error("empty generator set");
}

} // namespace

Word parse_word(std::string_view text) {
  Word word;
  word.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("invalid letter '" + std::string(1, c) + "' in word \"" + std::string(text) + "\"");
    word.emplace_back(c - '0');
  }
  return word;
}

std::string format_word(std::span<const Generator> word) {
  std::string out;
  out.reserve(word.size());
  for (Generator s : word)
    out.push_back(s.symbol());
  return out;
}

std::vector<Generator> GeneratorSet::members() const {
  std::vector<Generator> out;
  for (Generator s : all_generators)
    if (contains(s))
      out.push_back(s);
  return out;
}

Element::Element() : Element(Window{1, 2, 3}) {}

Element::Element(Window window)
    : window_(window), length_(shi_length(window)), left_descents_(right_descent_set(invert_window(window))),
      right_descents_(right_descent_set(window)) {}

Element Element::from_window(Window window) {
  if (window[0] + window[1] + window[2] != 6)
    throw std::invalid_argument("window entries must sum to 6");
  std::array<int, 3> residues{};
  for (auto v : window)
    residues[static_cast<std::size_t>(((v % 3) + 3) % 3)]++;
  if (residues != std::array<int, 3>{1, 1, 1})
    throw std::invalid_argument("window entries must be distinct mod 3");
  return Element(window);
}

std::int64_t Element::operator()(std::int64_t i) const { return evaluate(window_, i); }

Word Element::canonical_word() const {
  Word word;
  word.reserve(static_cast<std::size_t>(length_));
  Element rest = *this;
  while (!rest.is_identity()) {
    Generator s = first_of(rest.descents(Side::left));
    word.push_back(s);
    rest = multiply(rest, s, Side::left);
  }
  return word;
}

std::size_t ElementHash::operator()(const Element& w) const {
  std::size_t h = 0;
  for (auto v : w.window())
    h = hash_mix(h, static_cast<std::size_t>(v));
  return h;
}

bool LengthWordLess::operator()(const Element& a, const Element& b) const {
  if (a.length() != b.length())
    return a.length() < b.length();
  if (a == b)
    return false;
  auto wa = a.canonical_word();
  auto wb = b.canonical_word();
  return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
}

Element from_word(std::span<const Generator> word) {
  Element w;
  for (Generator s : word)
    w = multiply(w, s, Side::right);
  return w;
}

Element multiply(const Element& a, const Element& b) {
  Window out{};
  for (int i = 0; i < 3; ++i)
    out[i] = a(b.window()[i]);
  return Element::from_window(out);
}

Element inverse(const Element& w) { return Element::from_window(invert_window(w.window())); }

Element multiply(const Element& w, Generator s, Side side) {
  if (side == Side::right)
    return Element::from_window(right_act(w.window(), s));
  Window out = w.window();
  for (auto& v : out)
    v = reflect_value(v, s);
  return Element::from_window(out);
}

bool bruhat_leq(const Element& x, const Element& y) {
  if (x.length() > y.length())
    return false;
  if (x.length() == y.length())
    return x == y;
  if (x.is_identity())
    return true;
  auto key = std::make_pair(x, y);
  if (auto hit = bruhat_memo().find(key))
    return *hit;
  Generator s = first_of(y.descents(Side::left));
  Element sy = multiply(y, s, Side::left);
  bool result = x.descents(Side::left).contains(s) ? bruhat_leq(multiply(x, s, Side::left), sy) : bruhat_leq(x, sy);
  return bruhat_memo().insert(key, result);
}

const std::vector<Element>& lower_interval(const Element& w) {
  if (auto hit = lower_memo().find(w))
    return **hit;
  std::vector<Element> members;
  if (w.is_identity()) {
    members.push_back(w);
  } else {
    // z <= w iff z <= ws or zs <= ws, for any right descent s of w.
    Generator s = first_of(w.descents(Side::right));
    const auto& below = lower_interval(multiply(w, s, Side::right));
    members.reserve(2 * below.size());
    for (const auto& z : below) {
      members.push_back(z);
      members.push_back(multiply(z, s, Side::right));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  auto stored = lower_memo().insert(w, std::make_shared<const std::vector<Element>>(std::move(members)));
  return *stored;
}

std::vector<Element> enumerate_up_to_length(int max_length) {
  if (max_length < 0)
    throw std::invalid_argument("enumeration bound must be non-negative");
  if (max_length > enumeration_hard_cap)
    throw std::length_error("enumeration bound " + std::to_string(max_length) + " exceeds hard cap " +
                            std::to_string(enumeration_hard_cap));
  std::vector<Element> all{Element()};
  std::vector<Element> layer{Element()};
  for (int len = 1; len <= max_length; ++len) {
    std::unordered_set<Element, ElementHash> next;
    for (const auto& w : layer)
      for (Generator s : all_generators)
        if (!w.descents(Side::right).contains(s))
          next.insert(multiply(w, s, Side::right));
    layer.assign(next.begin(), next.end());
    std::sort(layer.begin(), layer.end(), LengthWordLess{});
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

// ---------------------------------------------------------------------------

Generator Symmetry::operator()(Generator s) const {
  int k = s.index() + rotation_;
  return Generator(flip_ ? -k : k);
}

Element Symmetry::operator()(const Element& w) const {
  Element image;
  if (rotation_ == 0 && !flip_) {
    image = w;
  } else {
    Word word = w.canonical_word();
    for (auto& s : word)
      s = (*this)(s);
    image = from_word(word);
  }
  return inverted_ ? inverse(image) : image;
}

std::string Symmetry::name() const {
  std::string base;
  if (flip_)
    base = "sigma";
  if (rotation_ > 0) {
    if (!base.empty())
      base += ".";
    base += rotation_ == 1 ? "rho" : "rho2";
  }
  if (inverted_) {
    if (!base.empty())
      base += ".";
    base += "iota";
  }
  return base.empty() ? "id" : base;
}

Symmetry Symmetry::from_name(std::string_view name) {
  for (Symmetry t : symmetry_group())
    if (t.name() == name)
      return t;
  throw std::invalid_argument("unknown symmetry \"" + std::string(name) + "\"");
}

Symmetry compose(Symmetry a, Symmetry b) {
  // d_a(d_b(k)) = e_a e_b (k + r_b + e_b r_a) with e = -1 when flipped.
  int rotation = b.rotation() + (b.flip() ? -a.rotation() : a.rotation());
  return Symmetry(rotation, a.flip() != b.flip(), a.inverted() != b.inverted());
}

Symmetry inverse(Symmetry t) { return Symmetry(t.flip() ? t.rotation() : -t.rotation(), t.flip(), t.inverted()); }

const std::array<Symmetry, 12>& symmetry_group() {
  static const std::array<Symmetry, 12> group = [] {
    std::array<Symmetry, 12> g{};
    std::size_t i = 0;
    for (bool inv : {false, true})
      for (bool flip : {false, true})
        for (int rot = 0; rot < 3; ++rot)
          g[i++] = Symmetry(rot, flip, inv);
    return g;
  }();
  return group;
}

// ---------------------------------------------------------------------------

namespace {

LatticePoint reflect_point(LatticePoint p, Generator s) {
  switch (s.index()) {
  case 1:
    std::swap(p[0], p[1]);
    break;
  case 2:
    std::swap(p[1], p[2]);
    break;
  default: {
    // reflection in x1 - x3 = 1, in coordinates scaled by 3
    std::int64_t a = p[2] + 3;
    std::int64_t c = p[0] - 3;
    p[0] = a;
    p[2] = c;
  }
  }
  return p;
}

} // namespace

Alcove alcove(const Element& w) {
  Alcove a{{LatticePoint{0, 0, 0}, LatticePoint{2, -1, -1}, LatticePoint{1, 1, -2}}, LatticePoint{1, 0, -1}, true};
  Word word = w.canonical_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    for (auto& v : a.vertices)
      v = reflect_point(v, *it);
    a.centroid = reflect_point(a.centroid, *it);
    a.up = !a.up;
  }
  return a;
}

AlcoveCoordinates alcove_coordinates(const Element& w) {
  Alcove a = alcove(w);
  return {a.centroid, a.up};
}

std::array<double, 2> to_plane(const LatticePoint& p) {
  const double x = static_cast<double>(p[0] - p[1]) / (3.0 * std::sqrt(2.0));
  const double y = static_cast<double>(p[0] + p[1] - 2 * p[2]) / (3.0 * std::sqrt(6.0));
  return {x, y};
}

} // namespace bruhat
