#include "bruhat/closedform.hpp"

#include "json.hpp"

#include "bruhat/memo.hpp"
#include "bruhat/serialize.hpp"

namespace bruhat {

namespace {

const Symmetry rho = Symmetry::rho();
const Symmetry rho2 = compose(Symmetry::rho(), Symmetry::rho());

std::atomic<std::size_t> fallback_count{0};

ConcurrentMemo<Element, HeckeElement, ElementHash>& closed_memo() {
  static ConcurrentMemo<Element, HeckeElement, ElementHash> memo;
  return memo;
}

HeckeElement family_formula(const RegionTag& tag) {
  switch (tag.kind) {
  case RegionKind::Identity:
    return standard_basis(Element());
  case RegionKind::X:
    return kl_basis_x(tag.chain_len);
  case RegionKind::Theta:
    return kl_basis_theta(tag.params);
  case RegionKind::Theta1:
    return kl_basis_theta1(tag.params);
  case RegionKind::Theta2:
    return kl_basis_theta2(tag.params);
  }
  throw std::logic_error("bad region kind");
}

} // namespace

HeckeElement kl_basis_x(int n) {
  if (n < 1)
    throw std::invalid_argument("x_n requires n >= 1");
  HeckeElement h = N_element(x_chain(n));
  if (n <= 3)
    return h;
  if (n == 4)
    return h + vpow(1) * N_element(x_chain(1));
  h += vpow(1) * N_element(x_chain(n - 3));
  if (n % 2 == 0) {
    const Element tail = x_chain(n - 5);
    h.add_term(s1 * (s0 * tail), vpow(1));
    h.add_term(s0 * tail, vpow(2));
  }
  return h;
}

HeckeElement kl_basis_theta(ThetaIndex idx) {
  HeckeElement h;
  for (int i = 0; i <= std::min(idx.m, idx.n); ++i)
    h += vpow(2 * i) * N_element(theta({idx.m - i, idx.n - i}));
  return h;
}

HeckeElement kl_basis_theta1(ThetaIndex idx) {
  const auto [m, n] = idx;
  HeckeElement h = N_element(theta1(idx));
  if (m > 0 && n == 0)
    h += vpow(1) * N_element(theta({m - 1, 0}));
  else if (m == 0 && n > 0)
    h += vpow(1) * N_element(theta({0, n - 1}));
  else if (m > 0 && n > 0)
    h += vpow(1) * (kl_basis_theta({m - 1, n}) + kl_basis_theta({m, n - 1}));
  return h;
}

HeckeElement kl_basis_theta2(ThetaIndex idx, int version) {
  if (version != 1 && version != 2)
    throw std::invalid_argument("theta2 formula version must be 1 or 2");
  const auto [m, n] = idx;
  const Generator s = s_mn(idx);
  const LaurentPoly v = vpow(1);
  HeckeElement h = N_element(theta2(idx));
  if (m == 0 && n == 0)
    return h + vpow(2) * N_element(Element() * s0);
  if (n == 0) {
    const Element t = theta({m - 1, 0});
    if (version == 1)
      return h + v * M_element(s0 * t, rho(t)) + v * kl_basis_closed(rho2(t) * s);
    return h + v * M_element(rho2(t) * s, rho(t)) + v * kl_basis_closed(s0 * t);
  }
  if (m == 0) {
    const Element t = theta({0, n - 1});
    if (version == 1)
      return h + v * M_element(s0 * t, rho2(t)) + v * kl_basis_closed(rho(t) * s);
    return h + v * M_element(rho(t) * s, rho2(t)) + v * kl_basis_closed(s0 * t);
  }
  const Element a = theta({m, n - 1});
  const Element b = theta({m - 1, n});
  if (version == 1)
    return h + v * M_element(s0 * a, s0 * b) + v * kl_basis_closed(rho(a) * s) + v * kl_basis_closed(rho2(b) * s);
  return h + v * M_element(rho(a) * s, rho2(b) * s) + v * kl_basis_closed(s0 * a) + v * kl_basis_closed(s0 * b);
}

HeckeElement kl_basis_closed(const Element& w) {
  if (auto hit = closed_memo().find(w))
    return *hit;
  const RegionTag tag = classify(w);
  return closed_memo().insert(w, apply_symmetry(tag.tau, family_formula(tag)));
}

QPoly kl_fast(const Element& x, const Element& y) {
  if (x == y)
    return QPoly(1);
  if (!bruhat_leq(x, y))
    return QPoly();
  try {
    const RegionTag tag = classify(y);
    const Element canonical = family_member(tag);
    HeckeElement formula;
    if (auto hit = closed_memo().find(canonical))
      formula = std::move(*hit);
    else
      formula = closed_memo().insert(canonical, family_formula(tag));
    return to_q(formula.coefficient(inverse(tag.tau)(x)), y.length() - x.length());
  } catch (const std::exception&) {
    ++fallback_count;
    return kl_polynomial(x, y).p;
  }
}

std::size_t kl_fast_fallbacks() { return fallback_count.load(); }

bool AppendixIdentityReport::anchors_agree() const {
  for (const auto& a : anchors)
    if (a.left != a.right)
      return false;
  return true;
}

bool AppendixIdentityReport::anchors_match_stated() const {
  for (const auto& a : anchors)
    if (a.left != a.expected || a.right != a.expected)
      return false;
  return true;
}

AppendixIdentityReport appendix_identity_check(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("appendix identity requires m, n >= 1");
  const Generator s = s_mn({m, n});
  const HeckeElement left =
      mult_kl_s(N_element(theta({m, n})), s, Side::right) + vpow(2) * N_element(theta({m - 1, n - 1}) * s);
  const HeckeElement right = N_element(theta({m, n}) * s) + vpow(1) * N_element(theta({m - 1, n})) +
                             vpow(1) * N_element(theta({m, n - 1}));

  AppendixIdentityReport r;
  r.m = m;
  r.n = n;
  r.sides_equal = left == right;
  r.content_left = content(left);
  r.content_right = content(right);
  r.content_expected = 3 * (3 * m * m + 3 * n * n + 12 * m * n + 5 * m + 5 * n + 4);
  r.left_monotonic = is_monotonic(left);
  r.left_geq_right = hecke_geq(left, right);
  auto anchor = [&](std::string label, const Element& at, LaurentPoly expected) {
    r.anchors.push_back({std::move(label), at, left.coefficient(at), right.coefficient(at), std::move(expected)});
  };
  anchor("theta(m,n)s", theta({m, n}) * s, LaurentPoly(1));
  anchor("theta(m-1,n)", theta({m - 1, n}), vpow(3) + vpow(1));
  anchor("theta(m,n-1)", theta({m, n - 1}), vpow(3) + vpow(1));
  anchor("theta(m-1,n-1)s", theta({m - 1, n - 1}) * s, vpow(4) + LaurentPoly(2) * vpow(1));
  return r;
}

ProductIdentityReport product_identity_check(ThetaIndex idx) {
  const Generator s = s_mn(idx);
  const Element t = theta(idx);
  const HeckeElement kl_theta = kl_basis_theta(idx);
  const HeckeElement left = mult_kl_s(kl_theta, s0, Side::left);
  const HeckeElement right = mult_kl_s(kl_theta, s, Side::right);
  const HeckeElement both = mult_kl_s(left, s, Side::right);
  ProductIdentityReport r;
  r.idx = idx;
  r.left_product = left == kl_basis(s0 * t);
  r.right_product = right == kl_basis(t * s);
  r.two_sided_product = both == kl_basis(s0 * t * s);
  return r;
}

void to_json(nlohmann::json& j, const AppendixIdentityReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& a : r.anchors)
    witnesses.push_back({{"anchor", a.label},
                         {"element", a.at.to_string()},
                         {"left", to_string(a.left)},
                         {"right", to_string(a.right)},
                         {"stated", to_string(a.expected)}});
  witnesses.push_back({{"content_left", r.content_left.str()},
                       {"content_right", r.content_right.str()},
                       {"content_expected", r.content_expected.str()},
                       {"sides_equal", r.sides_equal},
                       {"left_monotonic", r.left_monotonic},
                       {"left_geq_right", r.left_geq_right}});
  j = {{"identity", "appendix"}, {"params", {{"m", r.m}, {"n", r.n}}}, {"holds", r.holds()}, {"witnesses", witnesses}};
}

void to_json(nlohmann::json& j, const ProductIdentityReport& r) {
  j = {{"identity", "products"},
       {"params", {{"m", r.idx.m}, {"n", r.idx.n}}},
       {"holds", r.holds()},
       {"witnesses",
        {{{"left", r.left_product}}, {{"right", r.right_product}}, {{"two_sided", r.two_sided_product}}}}};
}

} // namespace bruhat
