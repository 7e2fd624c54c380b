#pragma once

// Three independent evaluations of int_0^1 N(x) / (1 + s x^P) dx.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "integrand.hpp"
#include "numeric.hpp"

namespace roughpi {

// ---------------------------------------------------------------------------
// Residue sum over the upper-half-plane roots of 1 + z^P.

template <class Real>
struct PoleSet {
  u64 period = 0;
  std::vector<Real> angles;  // (2r - 1) pi / P, r = 1 .. P/2
};

template <class Real>
PoleSet<Real> pole_set(u64 period) {
  if (period == 0 || period % 2 != 0) throw NotResidueEligible("pole set needs an even denominator exponent");
  const Real pi = constants::pi<Real>();
  PoleSet<Real> ps{period, {}};
  for (u64 r = 1; r <= period / 2; ++r) ps.angles.push_back(pi * (2 * r - 1) / period);
  return ps;
}

template <class Real>
struct ResidueResult {
  Real value;
  Real imag_leak;  // |imaginary part| of the quarter-line integral, zero in exact arithmetic
};

/// Throws unless int_0^1 = 1/4 int_R holds: denominator 1 + x^P with P even,
/// even numerator palindromic of degree P - 2.
inline void check_residue_eligible(const Integrand& g) {
  if (g.denom_sign() < 0) throw NotResidueEligible("denominator 1 - x^P has poles on the real axis");
  const u64 P = g.period();
  if (P % 2 != 0) throw NotResidueEligible("odd denominator exponent");
  if (auto minus = g.minus_factor_count(); minus && *minus % 2 != 0)
    throw SymmetryError("odd number of minus-sign factors: " + g.to_string());
  const auto& num = g.numerator();
  for (const auto& [e, c] : num.terms())
    if (e % 2 != 0) throw SymmetryError("numerator has odd powers: " + g.to_string());
  if (num.is_zero() || num.degree() != P - 2 || !num.is_palindromic(P - 2))
    throw SymmetryError("numerator is not palindromic of degree P-2: " + g.to_string());
}

/// Re[-(pi i / 2P) sum_r z_r Q(z_r)], z_r = exp(i (2r-1) pi / P).
template <class Real>
ResidueResult<Real> residue_eval(const Integrand& g, bool reverse_order = false) {
  check_residue_eligible(g);
  using std::cos;
  using std::sin;
  const u64 P = g.period();
  const Real pi = constants::pi<Real>();
  const u64 two_p = 2 * P;

  std::vector<std::pair<u64, Real>> terms;
  for (const auto& [e, c] : g.numerator().terms()) terms.emplace_back(e + 1, Real(c));

  std::vector<Real> re_terms, im_terms;
  for (u64 r = 1; r <= P / 2; ++r) {
    CompensatedSum<Real> re, im;
    for (const auto& [m, c] : terms) {
      // (e+1) theta_r reduced exactly modulo 2 pi.
      const u64 turns = static_cast<u64>((static_cast<unsigned __int128>(m) * (2 * r - 1)) % two_p);
      const Real angle = pi * turns / P;
      re += c * sin(angle);
      im += c * cos(angle);
    }
    re_terms.push_back(re.value());
    im_terms.push_back(im.value());
  }
  if (reverse_order) {
    std::reverse(re_terms.begin(), re_terms.end());
    std::reverse(im_terms.begin(), im_terms.end());
  }
  CompensatedSum<Real> re, im;
  for (const auto& t : re_terms) re += t;
  for (const auto& t : im_terms) im += t;
  const Real scale = pi / (2 * P);
  return {re.value() * scale, abs_of(Real(im.value() * scale))};
}

// ---------------------------------------------------------------------------
// Removable-singularity reduction and composite Gauss-Legendre quadrature.

struct ReducedIntegrand {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

/// Cancels the largest 1 - x^d (d | P) dividing the numerator when the
/// denominator is 1 - x^P; the result has a denominator positive on [0, 1].
inline ReducedIntegrand reduce_for_quadrature(const Integrand& g) {
  if (g.denom_sign() > 0) return {g.numerator(), g.denominator()};
  const u64 P = g.period();
  for (u64 d = P; d >= 1; --d) {
    if (P % d) continue;
    const IntPolynomial common = IntPolynomial::binomial(-1, d);
    if (!common.divides(g.numerator())) continue;
    ReducedIntegrand r{g.numerator().exact_div(common), g.denominator().exact_div(common)};
    // (1 - x^P)/(1 - x^d) = 1 + x^d + ... + x^{P-d}: all coefficients positive.
    for (const auto& [e, c] : r.denominator.terms())
      if (c < 0) throw PoleOnPath("reduced denominator has a negative coefficient");
    return r;
  }
  throw PoleOnPath("x = 1 is a genuine pole of " + g.to_string());
}

namespace detail {

/// Sparse polynomial with coefficients converted once to Real.
template <class Real>
class RealPolynomial {
public:
  explicit RealPolynomial(const IntPolynomial& p) {
    for (const auto& [e, c] : p.terms()) terms_.emplace_back(e, Real(c));
  }

  Real operator()(const Real& x) const {
    CompensatedSum<Real> sum;
    Real power{1};
    u64 at = 0;
    for (const auto& [e, c] : terms_) {
      power *= ipow(x, e - at);
      at = e;
      sum += c * power;
    }
    return sum.value();
  }

private:
  std::vector<std::pair<u64, Real>> terms_;
};

template <class Real>
Real legendre(std::uint32_t n, const Real& x, Real& derivative) {
  Real p0{1}, p1 = x;
  for (std::uint32_t k = 2; k <= n; ++k) {
    Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  derivative = n * (x * p1 - p0) / (x * x - 1);
  return p1;
}

template <class Real>
struct GaussRule {
  std::vector<Real> nodes;    // on [-1, 1]
  std::vector<Real> weights;
};

/// Gauss-Legendre nodes by Newton iteration on P_n at the precision of Real.
template <class Real>
GaussRule<Real> gauss_legendre(std::uint32_t n) {
  GaussRule<Real> rule;
  const double pi_d = 3.14159265358979323846;
  const Real tol = epsilon<Real>() * 8;
  for (std::uint32_t i = 1; i <= n; ++i) {
    Real x = Real(std::cos(pi_d * (i - 0.25) / (n + 0.5)));
    Real dp;
    for (int it = 0; it < 100; ++it) {
      Real p = legendre(n, x, dp);
      Real dx = p / dp;
      x -= dx;
      if (abs_of(dx) < tol) break;
    }
    legendre(n, x, dp);
    rule.nodes.push_back(x);
    rule.weights.push_back(2 / ((1 - x * x) * dp * dp));
  }
  return rule;
}

template <class Real>
const GaussRule<Real>& gauss_legendre_20() {
  static const GaussRule<Real> rule = gauss_legendre<Real>(20);
  return rule;
}

}  // namespace detail

template <class Real>
struct QuadratureResult {
  Real value;
  Real error_estimate;  // |Q_{2n} - Q_n|
  u64 panels = 0;
};

struct QuadratureOptions {
  u64 max_panels = 1u << 16;
};

/// Composite 20-point Gauss-Legendre on [0, 1], doubling panels until two
/// successive results differ by less than target_abs_err.
template <class Real>
QuadratureResult<Real> quadrature(const Integrand& g, const Real& target_abs_err, QuadratureOptions opt = {}) {
  if (target_abs_err < epsilon<Real>() * 1000)
    throw ToleranceError("quadrature tolerance " + to_decimal(target_abs_err, 6) + " below working precision", "",
                         "");
  const auto reduced = reduce_for_quadrature(g);
  const detail::RealPolynomial<Real> num(reduced.numerator), den(reduced.denominator);
  const auto& rule = detail::gauss_legendre_20<Real>();

  auto integrate = [&](u64 panels) {
    CompensatedSum<Real> total;
    const Real h = Real(1) / panels;
    for (u64 i = 0; i < panels; ++i) {
      const Real mid = h * i + h / 2;
      CompensatedSum<Real> panel;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const Real x = mid + rule.nodes[q] * h / 2;
        const Real d = den(x);
        if (d <= 0) throw PoleOnPath("denominator vanishes on [0, 1]");
        panel += rule.weights[q] * num(x) / d;
      }
      total += panel.value() * h / 2;
    }
    return total.value();
  };

  Real previous = integrate(1);
  for (u64 panels = 2; panels <= opt.max_panels; panels *= 2) {
    Real current = integrate(panels);
    Real est = abs_of(Real(current - previous));
    if (est < target_abs_err) return {current, est, panels};
    previous = current;
  }
  throw ToleranceError("quadrature did not converge within " + std::to_string(opt.max_panels) + " panels",
                       to_decimal(previous), "");
}

// ---------------------------------------------------------------------------
// Block series with Euler acceleration.

template <class Real>
struct SeriesResult {
  Real value;
  Real error_estimate;
  u64 blocks = 0;  // block sums evaluated
};

struct SeriesOptions {
  u64 depth = 20;
  u64 max_blocks = 10000;
};

namespace detail {

/// Euler transform of sum (-1)^j t_j by `depth`-fold averaging of the last
/// partial sums.
template <class Real>
Real euler_average(const std::vector<Real>& terms, u64 depth) {
  std::vector<Real> partial;
  partial.reserve(terms.size());
  CompensatedSum<Real> s;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (j & 1u)
      s += -terms[j];
    else
      s += terms[j];
    partial.push_back(s.value());
  }
  const std::size_t keep = std::min<std::size_t>(depth + 1, partial.size());
  std::vector<Real> level(partial.end() - keep, partial.end());
  while (level.size() > 1) {
    for (std::size_t i = 0; i + 1 < level.size(); ++i) level[i] = (level[i] + level[i + 1]) / 2;
    level.pop_back();
  }
  return level.front();
}

}  // namespace detail

/// Sum of c_{n-1}/n over n in S_k, grouped into blocks of one period.
/// Alternating blocks (1 + x^P) are Euler-averaged directly; repeating blocks
/// (1 - x^P) are first rearranged into an alternating series by van
/// Wijngaarden's transform.
template <class Real>
SeriesResult<Real> series_sum(const Integrand& g, u64 k, const Real& target_abs_err, SeriesOptions opt = {}) {
  (void)sign_pattern(g, k);
  const u64 P = g.period();
  if (g.numerator().degree() >= P) throw DomainError("series_sum: numerator degree must be below P");
  if (target_abs_err < epsilon<Real>() * 1000)
    throw ToleranceError("series tolerance below working precision", "", "");

  std::vector<std::pair<Real, Real>> block;  // (n, c_{n-1}) for n in the first period
  const auto first = expand_series(g, P);
  bigint coeff_sum = 0;
  for (u64 e = 0; e < P; ++e)
    if (first[e] != 0) {
      block.emplace_back(Real(e + 1), Real(first[e]));
      coeff_sum += first[e];
    }
  const bool alternating = g.denom_sign() > 0;
  if (!alternating && coeff_sum != 0) throw PoleOnPath("repeating block with nonzero sum: series diverges");

  u64 evaluated = 0;
  const Real period{P};
  auto block_value = [&](const Real& j) {
    ++evaluated;
    CompensatedSum<Real> s;
    const Real offset = j * period;
    for (const auto& [n, c] : block) s += c / (n + offset);
    return s.value();
  };

  std::vector<Real> terms;
  auto extend = [&](std::size_t count) {
    while (terms.size() < count) {
      const std::size_t r = terms.size();
      if (alternating) {
        terms.push_back(block_value(Real(r)));
        continue;
      }
      // w_r = sum_i 2^i b_{2^i (r+1) - 1}
      CompensatedSum<Real> w;
      Real scale{1};
      for (int i = 0; i < 400; ++i) {
        const Real t = scale * block_value(scale * (r + 1) - 1);
        w += t;
        if (abs_of(t) < target_abs_err / 1024 && i > 4) break;
        scale *= 2;
      }
      terms.push_back(w.value());
    }
  };

  std::size_t n = 2 * (opt.depth + 1);
  extend(n);
  Real previous = detail::euler_average(terms, opt.depth);
  Real est{0};
  while (true) {
    const double per_term = static_cast<double>(evaluated) / static_cast<double>(terms.size());
    if (evaluated + per_term * static_cast<double>(n) > opt.max_blocks)
      throw ToleranceError("series acceleration stagnated after " + std::to_string(evaluated) + " blocks",
                           to_decimal(previous), to_decimal(est, 6));
    n *= 2;
    extend(n);
    Real current = detail::euler_average(terms, opt.depth);
    est = abs_of(Real(current - previous));
    if (est < target_abs_err) return {current, est, evaluated};
    previous = current;
  }
}

}  // namespace roughpi
