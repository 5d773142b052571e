#include "bruhat/hecke.hpp"

#include <algorithm>
#include <string>

#include "bruhat/memo.hpp"

namespace bruhat {

namespace {

const LaurentPoly& v_minus_inverse() {
  static const LaurentPoly p = vpow(1) - vpow(-1);
  return p;
}

const LaurentPoly& v_inverse_minus_v() {
  static const LaurentPoly p = vpow(-1) - vpow(1);
  return p;
}

ConcurrentMemo<Element, HeckeElement, ElementHash>& kl_memo() {
  static ConcurrentMemo<Element, HeckeElement, ElementHash> memo;
  return memo;
}

ConcurrentMemo<Element, HeckeElement, ElementHash>& bar_memo() {
  static ConcurrentMemo<Element, HeckeElement, ElementHash> memo;
  return memo;
}

Generator first_right_descent(const Element& w) {
  for (Generator s : all_generators)
    if (w.descents(Side::right).contains(s))
      return s;
  throw std::logic_error("identity has no descents");
}

// bar(H_w) = bar(H_{ws}) * (H_s + v - v^-1) for ws < w.
HeckeElement bar_standard(const Element& w) {
  if (auto hit = bar_memo().find(w))
    return *hit;
  HeckeElement result;
  if (w.is_identity()) {
    result = HeckeElement::standard(w);
  } else {
    Generator s = first_right_descent(w);
    HeckeElement prev = bar_standard(w * s);
    result = mult_std(prev, s, Side::right) + v_minus_inverse() * prev;
  }
  return bar_memo().insert(w, std::move(result));
}

} // namespace

HeckeElement HeckeElement::standard(const Element& w, LaurentPoly coefficient) {
  HeckeElement h;
  h.add_term(w, coefficient);
  return h;
}

LaurentPoly HeckeElement::coefficient(const Element& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add_term(const Element& w, const LaurentPoly& coefficient) {
  if (coefficient.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  for (const auto& [w, p] : other.terms_)
    add_term(w, p);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  for (const auto& [w, p] : other.terms_)
    add_term(w, -p);
  return *this;
}

HeckeElement operator*(const LaurentPoly& p, const HeckeElement& h) {
  HeckeElement out;
  if (p.is_zero())
    return out;
  for (const auto& [w, c] : h.terms_)
    out.add_term(w, p * c);
  return out;
}

HeckeElement mult_std(const HeckeElement& h, Generator s, Side side) {
  HeckeElement out;
  for (const auto& [x, c] : h.terms()) {
    Element xs = multiply(x, s, side);
    out.add_term(xs, c);
    if (xs.length() < x.length())
      out.add_term(x, v_inverse_minus_v() * c);
  }
  return out;
}

HeckeElement mult_kl_s(const HeckeElement& h, Generator s, Side side) {
  HeckeElement out;
  for (const auto& [x, c] : h.terms()) {
    Element xs = multiply(x, s, side);
    out.add_term(xs, c);
    out.add_term(x, c.shifted(xs.length() < x.length() ? -1 : 1));
  }
  return out;
}

HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement out;
  for (const auto& [y, cb] : b.terms()) {
    // a * H_y = a * H_{s1} * ... * H_{sk} along a reduced word of y
    HeckeElement partial = a;
    for (Generator s : y.canonical_word())
      partial = mult_std(partial, s, Side::right);
    out += cb * partial;
  }
  return out;
}

HeckeElement bar(const HeckeElement& h) {
  HeckeElement out;
  for (const auto& [w, c] : h.terms()) {
    HeckeElement image = bar_standard(w);
    out += bar(c) * image;
  }
  return out;
}

HeckeElement kl_basis(const Element& w) {
  if (w.length() > kl_length_cap)
    throw std::length_error("KL recursion capped at length " + std::to_string(kl_length_cap));
  if (auto hit = kl_memo().find(w))
    return *hit;
  HeckeElement result;
  if (w.is_identity()) {
    result = HeckeElement::standard(w);
  } else {
    Generator s = first_right_descent(w);
    Element ws = w * s;
    HeckeElement prev = kl_basis(ws);
    result = mult_kl_s(prev, s, Side::right);
    for (const auto& [z, h] : prev.terms()) {
      if (z == ws || !z.descents(Side::right).contains(s))
        continue;
      Integer m = h.coefficient(1);
      if (m != 0)
        result -= LaurentPoly(m) * kl_basis(z);
    }
  }
  return kl_memo().insert(w, std::move(result));
}

KLPolynomial kl_polynomial(const Element& x, const Element& w) {
  if (!bruhat_leq(x, w))
    return {};
  LaurentPoly h = kl_basis(w).coefficient(x);
  return {h, to_q(h, w.length() - x.length())};
}

Integer mu(const Element& x, const Element& w) { return kl_basis(w).coefficient(x).coefficient(1); }

HeckeElement N_element(const Element& x) {
  HeckeElement out;
  for (const auto& z : lower_interval(x))
    out.add_term(z, vpow(x.length() - z.length()));
  return out;
}

HeckeElement M_element(const Element& x, const Element& y) {
  HeckeElement out;
  for (const auto& z : lower_interval(x))
    out.add_term(z, vpow(x.length() - z.length()));
  for (const auto& z : lower_interval(y))
    if (!bruhat_leq(z, x))
      out.add_term(z, vpow(x.length() - z.length()));
  return out;
}

Integer content(const HeckeElement& h) {
  Integer total = 0;
  for (const auto& [w, c] : h.terms())
    total += evaluate_at_one(c);
  return total;
}

bool is_monotonic(const HeckeElement& h) {
  for (const auto& [x, gx] : h.terms()) {
    if (!is_nonneg(gx))
      return false;
    for (const auto& y : lower_interval(x)) {
      if (y == x)
        continue;
      if (!is_nonneg(h.coefficient(y) - gx.shifted(x.length() - y.length())))
        return false;
    }
  }
  return true;
}

bool hecke_geq(const HeckeElement& h1, const HeckeElement& h2) {
  HeckeElement diff = h1 - h2;
  return std::all_of(diff.terms().begin(), diff.terms().end(), [](const auto& t) { return is_nonneg(t.second); });
}

HeckeElement apply_symmetry(Symmetry t, const HeckeElement& h) {
  HeckeElement out;
  for (const auto& [w, c] : h.terms())
    out.add_term(t(w), c);
  return out;
}

std::vector<std::pair<Element, LaurentPoly>> sorted_terms(const HeckeElement& h) {
  std::vector<std::pair<Element, LaurentPoly>> out(h.terms().begin(), h.terms().end());
  LengthWordLess less;
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return less(a.first, b.first); });
  return out;
}

} // namespace bruhat
