#pragma once

// The Hecke algebra of W in Soergel's normalisation:
//   H_s^2 = (v^-1 - v) H_s + H_id,   Hs_kl := H_s + v H_id.
// Elements are expanded in the standard basis {H_w}.

#include <map>
#include <utility>
#include <vector>

#include "bruhat/laurent.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

class HeckeElement {
public:
  using Terms = std::map<Element, LaurentPoly>;

  HeckeElement() = default;

  static HeckeElement standard(const Element& w, LaurentPoly coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  /// G_x(H): the coefficient of H_x, zero when x is outside the support.
  LaurentPoly coefficient(const Element& x) const;

  void add_term(const Element& w, const LaurentPoly& coefficient);

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& p, const HeckeElement& h);

  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

private:
  Terms terms_;
};

inline HeckeElement standard_basis(const Element& w) { return HeckeElement::standard(w); }
inline LaurentPoly G_coefficient(const Element& x, const HeckeElement& h) { return h.coefficient(x); }

/// H * H_s (right) or H_s * H (left).
HeckeElement mult_std(const HeckeElement& h, Generator s, Side side);
/// H * (H_s + v) (right) or (H_s + v) * H (left).
HeckeElement mult_kl_s(const HeckeElement& h, Generator s, Side side);
/// Full product in the standard basis.
HeckeElement multiply(const HeckeElement& a, const HeckeElement& b);

/// The bar involution: v -> v^-1, H_w -> (H_{w^-1})^-1.
HeckeElement bar(const HeckeElement& h);

/// The canonical basis element computed by the generic recursion
///   Hkl_w = Hkl_{ws} Hkl_s - sum_{z < ws, zs < z} mu(z, ws) Hkl_z,
/// memoized process-wide. Throws std::length_error above kl_length_cap.
inline constexpr int kl_length_cap = 40;
HeckeElement kl_basis(const Element& w);

struct KLPolynomial {
  LaurentPoly h; // v-version
  QPoly p;       // q-version
};

/// (h_{x,w}, P_{x,w}) from the recursion; both zero when x is not below w.
KLPolynomial kl_polynomial(const Element& x, const Element& w);

/// mu(x, w): the coefficient of v in h_{x,w}.
Integer mu(const Element& x, const Element& w);

/// N_x = sum_{z <= x} v^{l(x)-l(z)} H_z.
HeckeElement N_element(const Element& x);
/// M_{x,y} = sum_{w <= x or w <= y} v^{l(x)-l(w)} H_w.
HeckeElement M_element(const Element& x, const Element& y);

/// c(H): the sum of all coefficients evaluated at v = 1.
Integer content(const HeckeElement& h);

/// G_y(H) >= v^{l(x)-l(y)} G_x(H) coefficientwise for all y <= x, and every
/// coefficient non-negative.
bool is_monotonic(const HeckeElement& h);

/// H1 >=_H H2: every coefficient of H1 - H2 lies in N[v, v^-1].
bool hecke_geq(const HeckeElement& h1, const HeckeElement& h2);

/// Image under a symmetry of W, termwise. KL-basis elements map to KL-basis
/// elements because every tau in G preserves lengths and Bruhat order.
HeckeElement apply_symmetry(Symmetry t, const HeckeElement& h);

/// Terms sorted by (length, canonical word), for serialization.
std::vector<std::pair<Element, LaurentPoly>> sorted_terms(const HeckeElement& h);

} // namespace bruhat
