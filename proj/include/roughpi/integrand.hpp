#pragma once

// Rational integrands N(x) / (1 + s x^P) and their power-series expansion.

#include <optional>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rough_core.hpp"

namespace roughpi {

/// The binomial factor 1 + sign * x^exponent.
struct Factor {
  int sign = 1;
  u64 exponent = 0;

  bool operator==(const Factor&) const = default;
};

class Integrand {
public:
  Integrand() = default;

  /// prod(1 + s_i x^{a_i}) / (1 + denom_sign x^period)
  static Integrand from_factors(std::vector<Factor> factors, int denom_sign, u64 period) {
    IntPolynomial num = IntPolynomial::constant(1);
    for (const auto& f : factors) {
      check_sign(f.sign);
      if (f.exponent == 0) throw DomainError("factor exponent must be positive");
      num *= IntPolynomial::binomial(f.sign, f.exponent);
    }
    Integrand g(std::move(num), denom_sign, period);
    g.factors_ = std::move(factors);
    return g;
  }

  static Integrand from_numerator(IntPolynomial numerator, int denom_sign, u64 period) {
    return Integrand(std::move(numerator), denom_sign, period);
  }

  const IntPolynomial& numerator() const noexcept { return numerator_; }
  const std::optional<std::vector<Factor>>& factors() const noexcept { return factors_; }
  int denom_sign() const noexcept { return denom_sign_; }
  u64 period() const noexcept { return period_; }

  /// 1 + denom_sign x^P
  IntPolynomial denominator() const { return IntPolynomial::binomial(denom_sign_, period_); }

  /// Count of factors 1 - x^a; absent when only the combined numerator is known.
  std::optional<std::size_t> minus_factor_count() const {
    if (!factors_) return std::nullopt;
    std::size_t n = 0;
    for (const auto& f : *factors_) n += f.sign < 0;
    return n;
  }

  /// "(1-x^6)(1-x^10)(1+x^12)/(1+x^30)"; combined numerators print in canonical polynomial form.
  std::string to_string() const {
    std::string num;
    if (factors_ && !factors_->empty()) {
      for (const auto& f : *factors_)
        num += "(1" + std::string(f.sign > 0 ? "+" : "-") + "x^" + std::to_string(f.exponent) + ")";
    } else {
      num = "(" + numerator_.to_string() + ")";
    }
    return num + "/(1" + (denom_sign_ > 0 ? "+" : "-") + "x^" + std::to_string(period_) + ")";
  }

  bool operator==(const Integrand& o) const {
    return numerator_ == o.numerator_ && denom_sign_ == o.denom_sign_ && period_ == o.period_ &&
           factors_ == o.factors_;
  }

private:
  Integrand(IntPolynomial num, int denom_sign, u64 period)
      : numerator_(std::move(num)), denom_sign_(denom_sign), period_(period) {
    check_sign(denom_sign);
    if (period == 0) throw DomainError("denominator exponent must be positive");
  }

  static void check_sign(int s) {
    if (s != 1 && s != -1) throw DomainError("sign must be +1 or -1");
  }

  IntPolynomial numerator_ = IntPolynomial::constant(1);
  std::optional<std::vector<Factor>> factors_;
  int denom_sign_ = 1;
  u64 period_ = 2;
};

/// Coefficients c_0 .. c_{N-1} of the Maclaurin series.
struct SeriesPrefix {
  std::vector<bigint> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
  const bigint& operator[](std::size_t n) const { return coeffs[n]; }
  bool operator==(const SeriesPrefix&) const = default;
};

/// Numerator times the geometric series sum_j (-s)^j x^{jP}; exact.
inline SeriesPrefix expand_series(const Integrand& g, std::size_t n_terms) {
  if (n_terms < 1) throw DomainError("expand_series: N must be >= 1");
  SeriesPrefix s{std::vector<bigint>(n_terms, 0)};
  const u64 P = g.period();
  const bool alternate = g.denom_sign() > 0;
  for (const auto& [e, c] : g.numerator().terms()) {
    bool negate = false;
    for (u64 at = e; at < n_terms; at += P) {
      s.coeffs[at] += negate ? bigint(-c) : c;
      if (alternate) negate = !negate;
    }
  }
  return s;
}

struct SignPattern {
  std::string pattern;  // signs of the first block of nonzero coefficients
  char block_sign = '+';  // '+' repeat with period P, '-' alternate

  /// "(+--+ +--+)-" with a space every four signs.
  std::string notation() const {
    std::string s = "(";
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (i && i % 4 == 0) s += ' ';
      s += pattern[i];
    }
    return s + ")" + block_sign;
  }

  bool operator==(const SignPattern&) const = default;
};

/// Number of S_k elements in one period block of length P; P must be a multiple of P_k.
inline u64 block_length(u64 k, u64 period) {
  const u64 pk = primorial(k);
  if (period % pk != 0)
    throw DomainError("period " + std::to_string(period) + " is not a multiple of P_" + std::to_string(k));
  return period / pk * totient(pk);
}

/// Throws NotRoughSupported unless c_{n-1} is +-1 for n in S_k and 0 otherwise.
inline void check_rough_support(const SeriesPrefix& s, u64 k) {
  const auto small = primes_below(k);
  for (std::size_t e = 0; e < s.size(); ++e) {
    const bool rough = is_rough(e + 1, small);
    const bigint& c = s[e];
    if (rough && c != 1 && c != -1)
      throw NotRoughSupported(e, "coefficient " + c.str() + " at a k-rough position");
    if (!rough && c != 0) throw NotRoughSupported(e, "nonzero coefficient off the k-rough support");
  }
}

/// Span of coefficients that covers the numerator plus two full periods.
inline std::size_t support_window(const Integrand& g) {
  return g.numerator().degree() + 2 * g.period();
}

inline SignPattern sign_pattern(const Integrand& g, u64 k) {
  require_prime(k);
  const u64 P = g.period();
  const u64 len = block_length(k, P);
  const auto s = expand_series(g, support_window(g));
  check_rough_support(s, k);

  SignPattern sp;
  for (u64 e = 0; e < P; ++e)
    if (s[e] != 0) sp.pattern += s[e] > 0 ? '+' : '-';
  if (sp.pattern.size() != len)
    throw NotRoughSupported(P, "first block has " + std::to_string(sp.pattern.size()) + " terms, expected " +
                                   std::to_string(len));

  bool repeats = true, alternates = true;
  for (std::size_t e = 0; e + P < s.size(); ++e) {
    repeats = repeats && s[e + P] == s[e];
    alternates = alternates && s[e + P] == -s[e];
  }
  if (repeats == alternates) throw NotRoughSupported(P, "coefficients neither repeat nor alternate with period P");
  sp.block_sign = repeats ? '+' : '-';
  return sp;
}

}  // namespace roughpi
