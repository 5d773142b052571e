#pragma once

// JSON forms.
//   element:        canonical word string, "" for the identity
//   polynomial:     [[exponent, coefficient], ...] ascending; coefficients
//                   outside the int64 range are written as decimal strings
//   Hecke element:  [{"element": word, "poly": [...]}, ...] sorted by
//                   (length, word)
//   region tag:     {"kind", "tau", "m", "n"} or {"kind", "tau", "chain_len"}

#include "json.hpp"

#include "bruhat/hecke.hpp"
#include "bruhat/laurent.hpp"
#include "bruhat/regions.hpp"
#include "bruhat/weyl.hpp"

namespace bruhat {

nlohmann::json integer_to_json(const Integer& c);
Integer integer_from_json(const nlohmann::json& j);

template <class V>
nlohmann::json poly_to_json(const SparsePolynomial<V>& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back({e, integer_to_json(c)});
  return out;
}

template <class V>
SparsePolynomial<V> poly_from_json(const nlohmann::json& j) {
  SparsePolynomial<V> p;
  for (const auto& term : j)
    p.add_term(term.at(0).get<int>(), integer_from_json(term.at(1)));
  return p;
}

nlohmann::json hecke_to_json(const HeckeElement& h);
HeckeElement hecke_from_json(const nlohmann::json& j);

nlohmann::json region_tag_to_json(const RegionTag& tag);
RegionTag region_tag_from_json(const nlohmann::json& j);

} // namespace bruhat
