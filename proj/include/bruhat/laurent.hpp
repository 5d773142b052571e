#pragma once

// Sparse integer polynomials: Laurent polynomials in v and ordinary
// polynomials in q, both with arbitrary-precision coefficients.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace bruhat {

using Integer = boost::multiprecision::cpp_int;

struct VariableV {
  static constexpr char symbol = 'v';
  static constexpr bool allows_negative = true;
};
struct VariableQ {
  static constexpr char symbol = 'q';
  static constexpr bool allows_negative = false;
};

/// Exponent -> coefficient, ascending, never storing zeros.
template <class Variable>
class SparsePolynomial {
public:
  using Terms = std::map<int, Integer>;

  SparsePolynomial() = default;
  SparsePolynomial(Integer constant) { add_term(0, std::move(constant)); }
  SparsePolynomial(int constant) : SparsePolynomial(Integer(constant)) {}

  static SparsePolynomial monomial(int exponent, Integer coefficient = 1) {
    SparsePolynomial p;
    p.add_term(exponent, std::move(coefficient));
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
  }
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  void add_term(int exponent, const Integer& coefficient) {
    if constexpr (!Variable::allows_negative) {
      if (exponent < 0)
        throw std::domain_error("negative exponent in a polynomial in q");
    }
    if (coefficient == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& other) {
    for (const auto& [e, c] : other.terms_)
      add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& other) {
    for (const auto& [e, c] : other.terms_)
      add_term(e, -c);
    return *this;
  }
  SparsePolynomial operator-() const {
    SparsePolynomial out;
    for (const auto& [e, c] : terms_)
      out.terms_.emplace(e, -c);
    return out;
  }
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        out.add_term(ea + eb, ca * cb);
    return out;
  }
  SparsePolynomial& operator*=(const SparsePolynomial& other) { return *this = *this * other; }

  /// Multiplication by the monomial x^k.
  SparsePolynomial shifted(int k) const {
    SparsePolynomial out;
    for (const auto& [e, c] : terms_)
      out.add_term(e + k, c);
    return out;
  }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
  Terms terms_;
};

using LaurentPoly = SparsePolynomial<VariableV>;
using QPoly = SparsePolynomial<VariableQ>;

/// The monomial v^k.
inline LaurentPoly vpow(int k) { return LaurentPoly::monomial(k); }
inline QPoly qpow(int k) { return QPoly::monomial(k); }

/// v -> v^-1.
LaurentPoly bar(const LaurentPoly& p);

/// Recovers P from h = v^ldiff * P(v^-2). Throws std::domain_error when h
/// does not have that shape.
QPoly to_q(const LaurentPoly& h, int ldiff);
/// The inverse substitution, P -> v^ldiff * P(v^-2).
LaurentPoly from_q(const QPoly& p, int ldiff);

/// Membership in N[v, v^-1].
template <class V>
bool is_nonneg(const SparsePolynomial<V>& p) {
  for (const auto& [e, c] : p.terms())
    if (c < 0)
      return false;
  return true;
}

template <class V>
Integer evaluate_at_one(const SparsePolynomial<V>& p) {
  Integer sum = 0;
  for (const auto& [e, c] : p.terms())
    sum += c;
  return sum;
}

/// Text forms. Laurent polynomials print in descending powers ("v^4 + v^2"),
/// q-polynomials in ascending powers ("1 + q"). Compact mode drops the spaces
/// around the signs.
std::string to_string(const LaurentPoly& p, bool compact = false);
std::string to_string(const QPoly& p, bool compact = false);

/// Parses the text forms above, e.g. "1 + 2q - q^3" or "v^-1 + v".
LaurentPoly parse_laurent(const std::string& text);
QPoly parse_q(const std::string& text);

} // namespace bruhat
