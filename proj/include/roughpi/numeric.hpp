#pragma once

#include <cmath>
#include <cstdint>
#include <ios>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace roughpi {

using real50 = boost::multiprecision::cpp_bin_float_50;
using real100 = boost::multiprecision::cpp_bin_float_100;

/// Default working type: 50 significant decimal digits.
using real = real50;

template <class Real>
constexpr int working_digits() {
  return std::numeric_limits<Real>::digits10;
}

template <class Real>
Real epsilon() {
  return std::numeric_limits<Real>::epsilon();
}

/// Neumaier's variant of Kahan summation: the running compensation also
/// captures the case where the incoming term is larger than the sum.
template <class Real>
class CompensatedSum {
public:
  void add(const Real& x) {
    Real t = sum_ + x;
    if (abs(sum_) >= abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }

  CompensatedSum& operator+=(const Real& x) {
    add(x);
    return *this;
  }

  Real value() const { return sum_ + comp_; }

private:
  static Real abs(const Real& x) { return x < 0 ? Real(-x) : x; }
  Real sum_{0};
  Real comp_{0};
};

template <class Real>
Real abs_of(const Real& x) {
  return x < 0 ? Real(-x) : x;
}

/// x^n by binary exponentiation.
template <class Real>
Real ipow(Real x, std::uint64_t n) {
  Real r{1};
  while (n) {
    if (n & 1u) r *= x;
    x *= x;
    n >>= 1u;
  }
  return r;
}

namespace constants {

// Everything in this namespace is computed from series or Newton iteration
// at the precision of Real, independently of the std/boost elementary
// functions used elsewhere.

/// atan(1/n) by its Taylor series, for integer n >= 2.
template <class Real>
Real atan_inverse(std::uint64_t n) {
  const Real x = Real(1) / n;
  const Real x2 = x * x;
  const Real eps = epsilon<Real>() / 16;
  Real power = x;
  Real sum = x;
  for (std::uint64_t k = 1;; ++k) {
    power *= x2;
    Real term = power / (2 * k + 1);
    if (k & 1u)
      sum -= term;
    else
      sum += term;
    if (term < eps) break;
  }
  return sum;
}

/// Machin: pi = 16 atan(1/5) - 4 atan(1/239).
template <class Real>
Real pi() {
  return 16 * atan_inverse<Real>(5) - 4 * atan_inverse<Real>(239);
}

template <class Real>
Real sqrt(const Real& a) {
  if (a == 0) return Real(0);
  // Seed from double then Newton; each step doubles the correct digits.
  Real x = Real(std::sqrt(static_cast<double>(a)));
  for (int i = 0; i < 12; ++i) x = (x + a / x) / 2;
  return x;
}

/// atanh(t) for |t| < 1 by its Taylor series.
template <class Real>
Real atanh(const Real& t) {
  const Real t2 = t * t;
  const Real eps = epsilon<Real>() / 16;
  Real power = t;
  Real sum = t;
  for (std::uint64_t k = 1;; ++k) {
    power *= t2;
    Real term = power / (2 * k + 1);
    sum += term;
    if (abs_of(term) < eps) break;
  }
  return sum;
}

/// Natural log via log y = 2 atanh((y-1)/(y+1)), with halving reduction for large y.
template <class Real>
Real log(Real y) {
  if (y <= 0) throw std::domain_error("log of non-positive value");
  int twos = 0;
  while (y > 2) {
    y /= 2;
    ++twos;
  }
  while (y < Real(0.5)) {
    y *= 2;
    --twos;
  }
  Real r = 2 * atanh<Real>((y - 1) / (y + 1));
  if (twos != 0) r += twos * 2 * atanh<Real>(Real(1) / 3);
  return r;
}

/// sin and cos by Taylor series, intended for |x| <= pi.
template <class Real>
Real sin(const Real& x) {
  const Real x2 = x * x;
  const Real eps = epsilon<Real>() / 16;
  Real term = x;
  Real sum = x;
  for (std::uint64_t k = 1; abs_of(term) > eps; ++k) {
    term *= -x2 / ((2 * k) * (2 * k + 1));
    sum += term;
  }
  return sum;
}

template <class Real>
Real cos(const Real& x) {
  const Real x2 = x * x;
  const Real eps = epsilon<Real>() / 16;
  Real term{1};
  Real sum{1};
  for (std::uint64_t k = 1; abs_of(term) > eps; ++k) {
    term *= -x2 / ((2 * k - 1) * (2 * k));
    sum += term;
  }
  return sum;
}

}  // namespace constants

/// Decimal string with `digits` significant digits, scientific notation.
template <class Real>
std::string to_decimal(const Real& x, int digits = working_digits<Real>()) {
  return x.str(digits, std::ios_base::scientific);
}

}  // namespace roughpi
