#pragma once

// Sparse polynomials with arbitrary-precision integer coefficients.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace roughpi {

using bigint = boost::multiprecision::cpp_int;

class IntPolynomial {
public:
  using exponent_type = std::uint64_t;
  using term_map = std::map<exponent_type, bigint>;

  IntPolynomial() = default;

  /// From (exponent, coefficient) pairs; repeated exponents accumulate.
  IntPolynomial(std::initializer_list<std::pair<exponent_type, long long>> terms) {
    for (const auto& [e, c] : terms) add_term(e, bigint(c));
  }

  static IntPolynomial constant(const bigint& c) { return monomial(c, 0); }

  static IntPolynomial monomial(const bigint& c, exponent_type e) {
    IntPolynomial p;
    p.add_term(e, c);
    return p;
  }

  /// 1 + sign * x^e
  static IntPolynomial binomial(int sign, exponent_type e) {
    IntPolynomial p;
    p.add_term(0, 1);
    p.add_term(e, bigint(sign));
    return p;
  }

  void add_term(exponent_type e, const bigint& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Degree of the zero polynomial is reported as 0; check is_zero() first.
  exponent_type degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  bigint coefficient(exponent_type e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? bigint(0) : it->second;
  }

  bigint leading_coefficient() const { return terms_.empty() ? bigint(0) : terms_.rbegin()->second; }

  bigint max_abs_coefficient() const {
    bigint m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, bigint(abs(c)));
    return m;
  }

  /// Sum of coefficients, i.e. the value at x = 1.
  bigint value_at_one() const {
    bigint s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  IntPolynomial operator-() const {
    IntPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  /// p(x^m)
  IntPolynomial compose_power(exponent_type m) const {
    if (m == 0) throw DomainError("compose_power: m must be >= 1");
    IntPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e * m, c);
    return r;
  }

  /// x^s * p(x)
  IntPolynomial shifted(exponent_type s) const {
    IntPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + s, c);
    return r;
  }

  /// Quotient of an exact division over the integers; throws RemainderError otherwise.
  IntPolynomial exact_div(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("exact_div: division by the zero polynomial");
    const exponent_type db = divisor.degree();
    const bigint lead = divisor.leading_coefficient();
    IntPolynomial rem = *this;
    IntPolynomial quot;
    while (!rem.is_zero() && rem.degree() >= db) {
      const exponent_type shift = rem.degree() - db;
      const bigint top = rem.leading_coefficient();
      if (top % lead != 0) throw RemainderError("exact_div: leading coefficient not divisible");
      const bigint q = top / lead;
      quot.add_term(shift, q);
      for (const auto& [e, c] : divisor.terms_) rem.add_term(e + shift, -q * c);
    }
    if (!rem.is_zero()) throw RemainderError("exact_div: nonzero remainder of degree " + std::to_string(rem.degree()));
    return quot;
  }

  bool divides(const IntPolynomial& a) const {
    try {
      (void)a.exact_div(*this);
      return true;
    } catch (const RemainderError&) {
      return false;
    }
  }

  /// x^d p(1/x) == p(x); requires degree <= d.
  bool is_palindromic(exponent_type d) const {
    if (!is_zero() && degree() > d) return false;
    for (const auto& [e, c] : terms_)
      if (coefficient(d - e) != c) return false;
    return true;
  }

  /// Dense coefficient vector of length degree + 1.
  std::vector<bigint> dense() const {
    std::vector<bigint> v(is_zero() ? 0 : degree() + 1);
    for (const auto& [e, c] : terms_) v[e] = c;
    return v;
  }

  template <class Real>
  Real evaluate(const Real& x) const {
    Real sum{0};
    Real power{1};
    exponent_type at = 0;
    for (const auto& [e, c] : terms_) {
      Real step{1}, base = x;
      for (exponent_type n = e - at; n; n >>= 1u) {
        if (n & 1u) step *= base;
        base *= base;
      }
      power *= step;
      at = e;
      sum += Real(c) * power;
    }
    return sum;
  }

  /// Canonical text "c0 + c1*x^e1 + ..." in ascending exponent order.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool neg = c < 0;
      const bigint mag = neg ? bigint(-c) : c;
      if (first)
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      first = false;
      if (e == 0) {
        s += mag.str();
        continue;
      }
      if (mag != 1) s += mag.str() + "*";
      s += e == 1 ? std::string("x") : "x^" + std::to_string(e);
    }
    return s;
  }

  bool operator==(const IntPolynomial&) const = default;

private:
  term_map terms_;
};

inline void to_json(nlohmann::json& j, const bigint& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    j = c.convert_to<long long>();
  else
    j = c.str();
}

inline bigint bigint_from_json(const nlohmann::json& j) {
  if (j.is_string()) return bigint(j.get<std::string>());
  return bigint(j.get<long long>());
}

/// [[exponent, coefficient], ...] in ascending exponent order.
inline void to_json(nlohmann::json& j, const IntPolynomial& p) {
  j = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json coeff;
    to_json(coeff, c);
    j.push_back(nlohmann::json::array({e, coeff}));
  }
}

inline void from_json(const nlohmann::json& j, IntPolynomial& p) {
  p = IntPolynomial{};
  for (const auto& pair : j) p.add_term(pair.at(0).get<std::uint64_t>(), bigint_from_json(pair.at(1)));
}

}  // namespace roughpi
