#pragma once

// Exhaustive verification harness: combinatorial invariance at desk scale,
// the closed-form suite and the lemma suite, with JSON and CSV reports.

#include <cstddef>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "bruhat/weyl.hpp"

namespace bruhat {

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<std::string> witnesses;
  nlohmann::json details = nlohmann::json::object();
  bool passed() const { return violations == 0; }
};

struct VerificationReport {
  int max_length = 0;
  int jobs = 1;
  std::deque<SuiteResult> suites;
  double seconds = 0.0;
  /// interval length -> number of isomorphism classes observed
  std::map<int, std::size_t> census;

  bool passed() const;
  const SuiteResult* find(const std::string& name) const;
  nlohmann::json to_json() const;
  /// suite,passed,instances,violations,witness
  std::string to_csv() const;
};

inline constexpr int conjecture_default_bound = 8;
inline constexpr int closed_form_default_bound = 15;
inline constexpr int lemma_default_bound = 10;

/// Every interval [x, y] with l(y) <= max_length is built, bucketed by
/// (span, size, rank sizes, fingerprint) and split into isomorphism classes.
/// Suites: conjecture (equal P across each class), z_preservation,
/// certificates, fast_path (kl_fast against the recursion on every pair),
/// gradedness.
VerificationReport verify_conjecture(int max_length = conjecture_default_bound, int jobs = 1);

/// Closed forms against the recursion for every family member of length at
/// most max_length (x_n up to n = 14), both theta2 versions, the product
/// identities, positivity, kl_fast against the recursion, and the inversion
/// identity for rotated thetas.
VerificationReport verify_closed_forms(int max_length = closed_form_default_bound);

/// Cardinalities, intersection lemma, hexagon description, appendix
/// identity, parents counts, coatoms, structural lemmas, monotonicity,
/// region partition, growth and G-invariance.
VerificationReport verify_lemma_suite(int bound = lemma_default_bound);

/// Isomorphism classes per interval length among intervals with
/// l(y) <= max_length.
std::map<int, std::size_t> iso_class_census(int max_length, int jobs = 1);

} // namespace bruhat
