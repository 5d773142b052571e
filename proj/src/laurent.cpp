#include "bruhat/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace bruhat {

LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms())
    out.add_term(-e, c);
  return out;
}

QPoly to_q(const LaurentPoly& h, int ldiff) {
  if (ldiff < 0)
    throw std::domain_error("negative length difference");
  QPoly p;
  for (const auto& [e, c] : h.terms()) {
    int gap = ldiff - e;
    if (gap < 0 || gap % 2 != 0)
      throw std::domain_error("v^" + std::to_string(e) + " is not of the form v^" + std::to_string(ldiff) +
                              " q^k with q = v^-2");
    p.add_term(gap / 2, c);
  }
  return p;
}

LaurentPoly from_q(const QPoly& p, int ldiff) {
  LaurentPoly h;
  for (const auto& [e, c] : p.terms())
    h.add_term(ldiff - 2 * e, c);
  return h;
}

namespace {

template <class V, class It>
std::string render(It begin, It end, bool compact) {
  if (begin == end)
    return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = begin; it != end; ++it) {
    const auto& [e, c] = *it;
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0)
        out << '-';
    } else {
      out << (compact ? (c < 0 ? "-" : "+") : (c < 0 ? " - " : " + "));
    }
    first = false;
    if (e == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1)
      out << magnitude;
    out << V::symbol;
    if (e != 1)
      out << '^' << e;
  }
  return out.str();
}

template <class V>
SparsePolynomial<V> parse_poly(const std::string& text) {
  SparsePolynomial<V> p;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s == "0")
    return p;
  std::size_t i = 0;
  auto fail = [&] { throw std::invalid_argument("cannot parse polynomial \"" + text + "\""); };
  if (s.empty())
    fail();
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      ++i;
    Integer coefficient = 1;
    bool has_digits = i > digits_start;
    if (has_digits)
      coefficient = Integer(s.substr(digits_start, i - digits_start));
    int exponent = 0;
    if (i < s.size() && s[i] == V::symbol) {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t exp_start = i;
        if (i < s.size() && s[i] == '-')
          ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          ++i;
        if (i == exp_start)
          fail();
        exponent = std::stoi(s.substr(exp_start, i - exp_start));
      }
    } else if (!has_digits) {
      fail();
    }
    p.add_term(exponent, sign * coefficient);
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      fail();
  }
  return p;
}

} // namespace

std::string to_string(const LaurentPoly& p, bool compact) {
  return render<VariableV>(p.terms().rbegin(), p.terms().rend(), compact);
}

std::string to_string(const QPoly& p, bool compact) {
  return render<VariableQ>(p.terms().begin(), p.terms().end(), compact);
}

LaurentPoly parse_laurent(const std::string& text) { return parse_poly<VariableV>(text); }
QPoly parse_q(const std::string& text) { return parse_poly<VariableQ>(text); }

} // namespace bruhat
