#pragma once

// The affine Weyl group of type A~2.
//
// Elements are stored as affine permutations: bijections w of Z with
// w(i+3) = w(i)+3 and w(1)+w(2)+w(3) = 6, kept as the window
// [w(1), w(2), w(3)]. The generators act on the right by permuting window
// positions (s1, s2 swap adjacent entries, s0 swaps positions 0 and 1 of
// the periodic extension) and on the left by permuting values.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bruhat {

/// One of the simple reflections s0, s1, s2.
class Generator {
public:
  constexpr Generator() = default;
  constexpr explicit Generator(int index) : index_(static_cast<std::uint8_t>(((index % 3) + 3) % 3)) {}

  constexpr int index() const { return index_; }
  char symbol() const { return static_cast<char>('0' + index_); }

  friend constexpr auto operator<=>(Generator, Generator) = default;

private:
  std::uint8_t index_ = 0;
};

inline constexpr Generator s0{0};
inline constexpr Generator s1{1};
inline constexpr Generator s2{2};
inline constexpr std::array<Generator, 3> all_generators{s0, s1, s2};

/// A possibly non-reduced word in the generators. The empty word is the
/// identity.
using Word = std::vector<Generator>;

/// Parses a digit string such as "01210". Digits other than 0, 1, 2 are
/// reduced mod 3 so that the label notation "135678" is accepted too.
Word parse_word(std::string_view text);
std::string format_word(std::span<const Generator> word);

enum class Side { left, right };

/// Bit set over {0,1,2}: bit i is set when s_i belongs to the set.
class GeneratorSet {
public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint8_t bits) : bits_(bits & 7u) {}

  constexpr bool contains(Generator s) const { return (bits_ >> s.index()) & 1u; }
  constexpr int size() const { return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }
  std::vector<Generator> members() const;

  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;

private:
  std::uint8_t bits_ = 0;
};

class Element {
public:
  /// The identity.
  Element();

  /// Builds an element from its window. Throws std::invalid_argument unless
  /// the window describes an affine permutation.
  static Element from_window(std::array<std::int64_t, 3> window);

  const std::array<std::int64_t, 3>& window() const { return window_; }
  int length() const { return length_; }
  GeneratorSet descents(Side side) const { return side == Side::left ? left_descents_ : right_descents_; }
  bool is_identity() const { return length_ == 0; }

  /// Value of the affine permutation at an arbitrary integer.
  std::int64_t operator()(std::int64_t i) const;

  /// ShortLex-minimal reduced word with generator order 0 < 1 < 2.
  Word canonical_word() const;
  std::string to_string() const { return format_word(canonical_word()); }

  friend bool operator==(const Element& a, const Element& b) { return a.window_ == b.window_; }
  friend auto operator<=>(const Element& a, const Element& b) { return a.window_ <=> b.window_; }

private:
  explicit Element(std::array<std::int64_t, 3> window);

  std::array<std::int64_t, 3> window_;
  int length_ = 0;
  GeneratorSet left_descents_;
  GeneratorSet right_descents_;
};

struct ElementHash {
  std::size_t operator()(const Element& w) const;
};

/// Orders elements by length, then by canonical word. This is the order used
/// for every serialized listing.
struct LengthWordLess {
  bool operator()(const Element& a, const Element& b) const;
};

Element from_word(std::span<const Generator> word);
inline Element from_word(std::string_view text) { return from_word(parse_word(text)); }

Element multiply(const Element& a, const Element& b);
Element inverse(const Element& w);
Element multiply(const Element& w, Generator s, Side side);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }
inline Element operator*(const Element& w, Generator s) { return multiply(w, s, Side::right); }
inline Element operator*(Generator s, const Element& w) { return multiply(w, s, Side::left); }
inline int length(const Element& w) { return w.length(); }
inline GeneratorSet descents(const Element& w, Side side) { return w.descents(side); }

/// Bruhat order via the lifting property, memoized process-wide.
bool bruhat_leq(const Element& x, const Element& y);

/// The lower interval [id, w], sorted by the natural element order.
const std::vector<Element>& lower_interval(const Element& w);

/// Every element of length at most max_length, ordered by (length, word).
/// Throws std::length_error beyond enumeration_hard_cap.
inline constexpr int enumeration_default_cap = 16;
inline constexpr int enumeration_hard_cap = 64;
std::vector<Element> enumerate_up_to_length(int max_length);

// ---------------------------------------------------------------------------
// The symmetry group G generated by the diagram automorphisms rho, sigma and
// the inversion iota.

class Symmetry {
public:
  /// Identity symmetry.
  constexpr Symmetry() = default;
  /// sigma^flip o rho^rotation, followed by iota when inverted is set.
  constexpr Symmetry(int rotation, bool flip, bool inverted)
      : rotation_(static_cast<std::uint8_t>(((rotation % 3) + 3) % 3)), flip_(flip), inverted_(inverted) {}

  static constexpr Symmetry rho() { return {1, false, false}; }
  static constexpr Symmetry sigma() { return {0, true, false}; }
  static constexpr Symmetry iota() { return {0, false, true}; }

  int rotation() const { return rotation_; }
  bool flip() const { return flip_; }
  bool inverted() const { return inverted_; }

  /// Image of a generator under the diagram part.
  Generator operator()(Generator s) const;
  Element operator()(const Element& w) const;

  std::string name() const;
  static Symmetry from_name(std::string_view name);

  friend constexpr bool operator==(Symmetry, Symmetry) = default;

private:
  std::uint8_t rotation_ = 0;
  bool flip_ = false;
  bool inverted_ = false;
};

/// a o b as maps on W.
Symmetry compose(Symmetry a, Symmetry b);
Symmetry inverse(Symmetry t);

/// The twelve symmetries in the fixed enumeration order: id, rho, rho2,
/// sigma, sigma.rho, sigma.rho2, then the same six followed by iota.
const std::array<Symmetry, 12>& symmetry_group();

inline Element apply_symmetry(Symmetry t, const Element& w) { return t(w); }

// ---------------------------------------------------------------------------
// Alcove model. Points of the plane x1+x2+x3 = 0 are stored with all
// coordinates multiplied by 3, which keeps every alcove vertex and centroid
// integral. The fundamental alcove has vertices 0, 3*omega1 = (2,-1,-1) and
// 3*omega2 = (1,1,-2); vertex k is opposite the wall fixed by s_k.

using LatticePoint = std::array<std::int64_t, 3>;

struct Alcove {
  std::array<LatticePoint, 3> vertices; // vertices[k] is opposite the s_k wall
  LatticePoint centroid;
  bool up = true; // orientation; flips with every reflection
};

/// Image of the fundamental alcove under w (w acting on the left).
Alcove alcove(const Element& w);

/// Centroid and orientation only.
struct AlcoveCoordinates {
  LatticePoint centroid;
  bool up = true;
  friend bool operator==(const AlcoveCoordinates&, const AlcoveCoordinates&) = default;
};
AlcoveCoordinates alcove_coordinates(const Element& w);

/// Euclidean coordinates of a lattice point, for drawing.
std::array<double, 2> to_plane(const LatticePoint& p);

} // namespace bruhat

template <>
struct std::hash<bruhat::Element> : bruhat::ElementHash {};
