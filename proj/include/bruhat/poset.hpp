#pragma once

// Bruhat intervals as graded posets.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "bruhat/laurent.hpp"
#include "bruhat/regions.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

class NotComparableError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// [x, y] with members ordered by (rank, canonical word). Member 0 is the
/// bottom and the last member is the top.
class Interval {
public:
  const Element& bottom() const { return members_.front(); }
  const Element& top() const { return members_.back(); }
  std::size_t size() const { return members_.size(); }
  int span() const { return top().length() - bottom().length(); }

  const std::vector<Element>& members() const { return members_; }
  const Element& member(std::size_t i) const { return members_[i]; }
  int rank(std::size_t i) const { return rank_[i]; }
  /// Number of members at each rank 0..span.
  std::vector<int> rank_sizes() const;

  /// Members covered by / covering member i.
  const std::vector<int>& down(std::size_t i) const { return down_[i]; }
  const std::vector<int>& up(std::size_t i) const { return up_[i]; }
  /// Whether member j covers member i.
  bool covers(std::size_t i, std::size_t j) const { return cover_matrix_[i * size() + j] != 0; }
  std::size_t cover_count() const;

  std::optional<std::size_t> index_of(const Element& w) const;
  bool contains(const Element& w) const { return index_of(w).has_value(); }

  /// Order relation between members, via Bruhat order.
  bool leq(std::size_t i, std::size_t j) const { return bruhat_leq(members_[i], members_[j]); }

private:
  friend Interval build_interval(const Element& x, const Element& y);

  std::vector<Element> members_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> down_, up_;
  std::vector<std::uint8_t> cover_matrix_;
};

/// Throws NotComparableError unless x <= y.
Interval build_interval(const Element& x, const Element& y);

/// cert[i] is the index in B of the image of member i of A.
using IsoCertificate = std::vector<int>;

/// Order isomorphism search: rank partition refined by neighbourhood
/// signatures, then backtracking over class-respecting bijections in member
/// order. Deterministic; returns the first certificate found.
std::optional<IsoCertificate> is_isomorphic(const Interval& a, const Interval& b);

/// Independent check that cert is a bijection preserving rank and covers in
/// both directions.
bool verify_certificate(const Interval& a, const Interval& b, const IsoCertificate& cert);

/// Isomorphism-invariant digest from iterated rank/degree refinement.
std::uint64_t fingerprint(const Interval& a);

/// {z in I : a <= z, b <= z, l(z) = l(a) + m}. Throws std::invalid_argument
/// if a and b differ in length or are not members.
std::vector<Element> parents(const Element& a, const Element& b, const Interval& interval, int m);

/// Z^m: members z at corank m with P_{z,top} = 1 + q.
std::vector<Element> z_invariant(const Interval& interval, int m);

/// cert(Z^m(A)) == Z^m(B) for m = 1..4.
bool z_preserved_check(const Interval& a, const Interval& b, const IsoCertificate& cert);

struct LemmaTally {
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<std::string> witnesses; // first few violations, "x y"
  bool holds() const { return violations == 0; }
};

struct StructuralReport {
  int bound = 0;
  LemmaTally single_z3;       // y in Theta1 u Theta2 u X, |Z3| = 1  =>  P = 1 + q
  LemmaTally empty_z3;        // y in Theta1 u X, Z3 empty          =>  P = 1
  LemmaTally chain_dichotomy; // y in X: P = 1 iff Z3 empty, else 1 + q
  LemmaTally six_cases;       // y in Theta2, Z3 empty, P != 1      =>  one of six listed cases
  std::size_t six_case_hits[6] = {0, 0, 0, 0, 0, 0};
  bool holds() const { return single_z3.holds() && empty_z3.holds() && chain_dichotomy.holds() && six_cases.holds(); }
};

/// Checks the structural lemmas over every interval [x, y] with l(y) <= bound.
StructuralReport structural_lemma_checks(int bound);

nlohmann::json interval_to_json(const Interval& interval);
void to_json(nlohmann::json& j, const LemmaTally& t);
void to_json(nlohmann::json& j, const StructuralReport& r);

} // namespace bruhat
