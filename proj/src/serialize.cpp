#include "bruhat/serialize.hpp"

#include <limits>

namespace bruhat {

nlohmann::json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string())
    return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

nlohmann::json hecke_to_json(const HeckeElement& h) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, p] : sorted_terms(h))
    out.push_back({{"element", w.to_string()}, {"poly", poly_to_json(p)}});
  return out;
}

HeckeElement hecke_from_json(const nlohmann::json& j) {
  HeckeElement h;
  for (const auto& term : j)
    h.add_term(from_word(term.at("element").get<std::string>()), poly_from_json<VariableV>(term.at("poly")));
  return h;
}

nlohmann::json region_tag_to_json(const RegionTag& tag) {
  nlohmann::json j = {{"kind", to_string(tag.kind)}, {"tau", tag.tau.name()}};
  if (tag.kind == RegionKind::X) {
    j["chain_len"] = tag.chain_len;
  } else if (tag.kind != RegionKind::Identity) {
    j["m"] = tag.params.m;
    j["n"] = tag.params.n;
  }
  return j;
}

RegionTag region_tag_from_json(const nlohmann::json& j) {
  RegionTag tag;
  tag.kind = region_kind_from_string(j.at("kind").get<std::string>());
  tag.tau = Symmetry::from_name(j.at("tau").get<std::string>());
  if (tag.kind == RegionKind::X)
    tag.chain_len = j.at("chain_len").get<int>();
  else if (tag.kind != RegionKind::Identity)
    tag.params = {j.at("m").get<int>(), j.at("n").get<int>()};
  return tag;
}

} // namespace bruhat
