#pragma once

// Parent -> child recursion child(x) = parent(x) + sign x^{k-1} parent(x^k).

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "integrand.hpp"

namespace roughpi {

using rational = boost::multiprecision::cpp_rational;

struct FamilyStep {
  std::string parent_id;
  Integrand parent;
  u64 k = 0;  // the prime being excised; the child is an S_{next_prime(k)} integrand
  int sign = 1;
  Integrand child;
  rational scale{1};  // 1 + sign / k

  u64 child_k() const { return next_prime(k); }
};

namespace detail {

inline bool has_rough_support(const Integrand& g, u64 k) {
  try {
    (void)sign_pattern(g, k);
    return true;
  } catch (const NotRoughSupported&) {
    return false;
  } catch (const DomainError&) {
    return false;
  }
}

/// parent(x) + sign x^{k-1} parent(x^k) over the single denominator 1 +- x^{kP}.
inline Integrand recursion_candidate(const Integrand& parent, u64 k, int sign) {
  const u64 P = parent.period();
  const IntPolynomial& num = parent.numerator();
  const IntPolynomial d1 = parent.denominator();
  // parent(x^k) has denominator 1 + s x^{kP}; the common denominator must be a multiple of 1 + s x^P.
  for (int child_sign : {parent.denom_sign(), -1}) {
    const IntPolynomial dc = IntPolynomial::binomial(child_sign, k * P);
    const IntPolynomial d2 = IntPolynomial::binomial(parent.denom_sign(), k * P);
    if (!d1.divides(dc) || !d2.divides(dc)) continue;
    IntPolynomial first = num * dc.exact_div(d1);
    IntPolynomial second = (num.compose_power(k) * dc.exact_div(d2)).shifted(k - 1);
    if (sign < 0) second = -second;
    return Integrand::from_numerator(first + second, child_sign, k * P);
  }
  throw FamilyBreak("no common denominator of the form 1 +- x^{kP}");
}

}  // namespace detail

/// Tries both signs and keeps the one whose child has exact S_{k'} support.
inline FamilyStep derive_child(const Integrand& parent, u64 k, std::string parent_id = {}) {
  if (k < 2) throw DomainError("derive_child: k = " + std::to_string(k) + " is not a prime");
  require_prime(k);
  (void)sign_pattern(parent, k);
  const u64 child_k = next_prime(k);

  std::optional<FamilyStep> accepted;
  for (int sign : {+1, -1}) {
    Integrand cand = detail::recursion_candidate(parent, k, sign);
    if (!detail::has_rough_support(cand, child_k)) continue;
    if (accepted)
      throw AmbiguousSign("derive_child: both signs give S_" + std::to_string(child_k) + " support");
    accepted = FamilyStep{parent_id, parent, k, sign, std::move(cand), rational(1) + rational(sign, k)};
  }
  if (!accepted)
    throw FamilyBreak("derive_child: neither sign gives S_" + std::to_string(child_k) + " support from k = " +
                      std::to_string(k));
  return *accepted;
}

struct IdentityCheck {
  bool holds = false;
  std::optional<u64> first_mismatch;  // lowest series exponent where the two sides differ

  explicit operator bool() const { return holds; }
};

/// Exact check of N_c D1 D2 == (N D2 + sign x^{k-1} N(x^k) D1) D_c, with
/// D1 = 1 + s x^P, D2 = 1 + s x^{kP}, D_c the child denominator.
inline IdentityCheck verify_identity(const FamilyStep& step) {
  if (step.k < 2 || !is_prime(step.k)) throw DomainError("verify_identity: k must be a prime");
  const Integrand& p = step.parent;
  const Integrand& c = step.child;
  const IntPolynomial d1 = p.denominator();
  const IntPolynomial d2 = IntPolynomial::binomial(p.denom_sign(), step.k * p.period());
  const IntPolynomial dc = c.denominator();
  IntPolynomial second = (p.numerator().compose_power(step.k) * d1).shifted(step.k - 1);
  if (step.sign < 0) second = -second;
  const IntPolynomial lhs = c.numerator() * d1 * d2;
  const IntPolynomial rhs = (p.numerator() * d2 + second) * dc;
  if (lhs == rhs) return {true, std::nullopt};

  // Locate the disagreement in series form, which is how the sides are read.
  const std::size_t n = 2 * std::max<u64>(c.period(), step.k * p.period()) + c.numerator().degree();
  const auto lhs_series = expand_series(c, n);
  const auto parent_series = expand_series(p, n);
  for (std::size_t e = 0; e < n; ++e) {
    bigint r = parent_series[e];
    if (e >= step.k - 1 && (e - (step.k - 1)) % step.k == 0) {
      const std::size_t src = (e - (step.k - 1)) / step.k;
      r += step.sign * parent_series[src];
    }
    if (r != lhs_series[e]) return {false, e};
  }
  return {false, std::nullopt};
}

/// Child coefficient at x^{n-1} equals the parent's when k does not divide n, and is 0 when it does.
inline bool excision_check(const Integrand& parent, u64 k, const Integrand& child, std::size_t n_max) {
  const auto ps = expand_series(parent, n_max);
  const auto cs = expand_series(child, n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const bigint expect = (n % k == 0) ? bigint(0) : ps[n - 1];
    if (cs[n - 1] != expect) return false;
  }
  return true;
}

struct NumeratorStats {
  u64 degree = 0;
  std::size_t term_count = 0;
  bigint max_abs_coeff = 0;

  bool operator==(const NumeratorStats&) const = default;
};

inline NumeratorStats child_numerator_stats(const FamilyStep& step) {
  const auto& n = step.child.numerator();
  return {n.degree(), n.term_count(), n.max_abs_coefficient()};
}

inline nlohmann::json to_json(const FamilyStep& step) {
  nlohmann::json j;
  j["parent_id"] = step.parent_id;
  j["k"] = step.k;
  j["sign"] = step.sign;
  nlohmann::json num, den;
  to_json(num, boost::multiprecision::numerator(step.scale));
  to_json(den, boost::multiprecision::denominator(step.scale));
  j["scale"] = nlohmann::json::array({num, den});
  nlohmann::json cn;
  to_json(cn, step.child.numerator());
  j["child_numerator"] = cn;
  j["denom_sign"] = step.child.denom_sign();
  j["P"] = step.child.period();
  return j;
}

}  // namespace roughpi
