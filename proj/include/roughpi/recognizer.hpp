#pragma once

// Closed forms q*pi*sqrt(d), q*pi*sqrt(d)*trig(p pi/m), q*sqrt(3)*log(2+sqrt(3)),
// and recognition of numeric values against that finite basis.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"

namespace roughpi {

using rational = boost::multiprecision::cpp_rational;

enum class FormKind { pi_sqrt, pi_trig, log_form };
enum class Trig { sin, cos };

/// a + b sqrt(s); plain integers have b = 0.
struct Radicand {
  long long a = 1;
  long long b = 0;
  long long s = 0;

  bool operator==(const Radicand&) const = default;

  std::string to_string() const {
    if (b == 0) return std::to_string(a);
    std::string mag = (b < 0 ? -b : b) == 1 ? "" : std::to_string(b < 0 ? -b : b) + "*";
    return std::to_string(a) + (b < 0 ? "-" : "+") + mag + "sqrt(" + std::to_string(s) + ")";
  }
};

struct ClosedForm {
  FormKind kind = FormKind::pi_sqrt;
  rational q{1};
  Radicand radicand;  // pi_sqrt, pi_trig
  Trig trig = Trig::cos;  // pi_trig
  long long angle_num = 0, angle_den = 1;  // pi_trig: angle = angle_num * pi / angle_den

  bool operator==(const ClosedForm&) const = default;

  static ClosedForm pi_sqrt(rational q, Radicand d = {}) { return {FormKind::pi_sqrt, q, d, Trig::cos, 0, 1}; }

  static ClosedForm pi_trig(rational q, long long d, Trig t, long long p, long long m) {
    return {FormKind::pi_trig, q, Radicand{d, 0, 0}, t, p, m};
  }

  static ClosedForm log_form(rational q) { return {FormKind::log_form, q, Radicand{3, 0, 0}, Trig::cos, 0, 1}; }

  /// Canonical expression, e.g. "4*pi/15", "pi/15*sqrt(25-2*sqrt(5))".
  std::string to_string() const {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    const bigint num = numerator(q), den = denominator(q);
    const bool neg = num < 0;
    const bigint mag = neg ? bigint(-num) : num;
    const std::string sign = neg ? "-" : "";
    const std::string over = den == 1 ? "" : "/" + den.str();

    if (kind == FormKind::log_form) {
      std::string lead = mag == 1 ? "" : mag.str() + "*";
      return sign + "(" + lead + "sqrt(3)" + over + ")*log(2+sqrt(3))";
    }
    std::string s = sign + (mag == 1 ? "" : mag.str() + "*") + "pi" + over;
    if (!(radicand.b == 0 && radicand.a == 1)) s += "*sqrt(" + radicand.to_string() + ")";
    if (kind == FormKind::pi_trig) {
      s += trig == Trig::sin ? "*sin(" : "*cos(";
      s += (angle_num == 1 ? "" : std::to_string(angle_num) + "*") + std::string("pi/") + std::to_string(angle_den) +
           ")";
    }
    return s;
  }
};

/// Value of a ClosedForm from series and Newton constants at the precision of Real.
template <class Real>
Real evaluate(const ClosedForm& cf) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const Real q = Real(numerator(cf.q)) / Real(denominator(cf.q));
  const Real pi = constants::pi<Real>();
  auto radicand = [](const Radicand& r) {
    Real v{r.a};
    if (r.b != 0) v += Real(r.b) * constants::sqrt(Real(r.s));
    return constants::sqrt(v);
  };
  switch (cf.kind) {
    case FormKind::pi_sqrt:
      return q * pi * radicand(cf.radicand);
    case FormKind::pi_trig: {
      const Real angle = pi * cf.angle_num / cf.angle_den;
      const Real t = cf.trig == Trig::sin ? constants::sin(angle) : constants::cos(angle);
      return q * pi * radicand(cf.radicand) * t;
    }
    case FormKind::log_form: {
      const Real r3 = constants::sqrt(Real(3));
      return q * r3 * constants::log(Real(2) + r3);
    }
  }
  throw DomainError("unknown closed form kind");
}

namespace detail {

template <class Real>
struct BasisElement {
  ClosedForm form;  // with q = 1
  Real value;
};

inline constexpr long long kSquarefree[] = {1, 2, 3, 5, 6, 10, 15, 30};

/// pi*sqrt(d) for squarefree d and the three algebraic radicands, then
/// pi*sqrt(d)*trig(p pi/m) for angles in (0, pi/2) with m in {5, 10, 12},
/// then the log constant. Equal-valued elements are dropped, keeping the
/// one listed first, so sin and cos twins resolve to the smaller angle.
template <class Real>
std::vector<BasisElement<Real>> recognition_basis() {
  std::vector<ClosedForm> forms;
  for (long long d : kSquarefree) forms.push_back(ClosedForm::pi_sqrt(1, {d, 0, 0}));
  forms.push_back(ClosedForm::pi_sqrt(1, {25, -2, 5}));
  forms.push_back(ClosedForm::pi_sqrt(1, {25, 2, 5}));
  forms.push_back(ClosedForm::pi_sqrt(1, {1, 1, 2}));

  struct Angle {
    long long p, m;
  };
  std::vector<Angle> angles;
  for (long long m : {5, 10, 12})
    for (long long p = 1; 2 * p < m; ++p)
      if (std::gcd(p, m) == 1) angles.push_back({p, m});
  std::stable_sort(angles.begin(), angles.end(),
                   [](const Angle& x, const Angle& y) { return x.p * y.m < y.p * x.m; });
  for (long long d : kSquarefree)
    for (const auto& a : angles)
      for (Trig t : {Trig::cos, Trig::sin}) forms.push_back(ClosedForm::pi_trig(1, d, t, a.p, a.m));
  forms.push_back(ClosedForm::log_form(1));

  std::vector<BasisElement<Real>> basis;
  const Real same = epsilon<Real>() * 1e6;
  for (const auto& f : forms) {
    Real v = evaluate<Real>(f);
    bool duplicate = false;
    for (const auto& b : basis) duplicate = duplicate || abs_of(Real(b.value - v)) < same * abs_of(v);
    if (!duplicate) basis.push_back({f, v});
  }
  return basis;
}

/// Last continued-fraction convergent of x with denominator <= max_den.
template <class Real>
std::optional<rational> rationalize(const Real& x, long long max_den) {
  if (abs_of(x) > Real(1e12)) return std::nullopt;
  bigint h_prev = 0, h = 1, k_prev = 1, k = 0;
  Real rest = x;
  std::optional<rational> best;
  for (int i = 0; i < 64; ++i) {
    Real a_r = floor(rest);
    bigint a = a_r.template convert_to<bigint>();
    bigint h_next = a * h + h_prev;
    bigint k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    best = rational(h, k);
    Real frac = rest - a_r;
    if (frac < epsilon<Real>() * 1e4) break;
    rest = 1 / frac;
  }
  return best;
}

}  // namespace detail

inline constexpr long long kRecognizeMaxDenominator = 10000;

/// Closed form within tol of v, confirmed by re-evaluation within tol/10.
/// Throws AmbiguousMatch when distinct forms qualify.
template <class Real>
std::optional<ClosedForm> recognize(const Real& v, const Real& tol) {
  if (tol < Real(1e-20)) throw DomainError("recognize: tolerance below 1e-20");
  if (v == 0) return std::nullopt;
  static const auto basis = detail::recognition_basis<Real>();
  std::vector<ClosedForm> matches;
  for (const auto& b : basis) {
    auto q = detail::rationalize(Real(v / b.value), kRecognizeMaxDenominator);
    if (!q || *q == 0) continue;
    const Real approx = Real(boost::multiprecision::numerator(*q)) / Real(boost::multiprecision::denominator(*q)) *
                        b.value;
    if (abs_of(Real(approx - v)) > tol) continue;
    ClosedForm cf = b.form;
    cf.q = *q;
    if (abs_of(Real(evaluate<Real>(cf) - v)) > tol / 10) continue;
    matches.push_back(cf);
  }
  if (matches.empty()) return std::nullopt;
  if (matches.size() > 1) {
    std::vector<std::string> names;
    for (const auto& m : matches) names.push_back(m.to_string());
    throw AmbiguousMatch(names);
  }
  return matches.front();
}

inline nlohmann::json to_json(const ClosedForm& cf) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  nlohmann::json j, num, den;
  to_json(num, bigint(numerator(cf.q)));
  to_json(den, bigint(denominator(cf.q)));
  j["q"] = nlohmann::json::array({num, den});
  j["expr"] = cf.to_string();
  switch (cf.kind) {
    case FormKind::pi_sqrt:
      j["kind"] = "pi_sqrt";
      break;
    case FormKind::pi_trig:
      j["kind"] = "pi_trig";
      j["trig"] = cf.trig == Trig::sin ? "sin" : "cos";
      j["angle"] = nlohmann::json::array({cf.angle_num, cf.angle_den});
      break;
    case FormKind::log_form:
      j["kind"] = "log_form";
      return j;
  }
  j["radicand"] = nlohmann::json::array({cf.radicand.a, cf.radicand.b, cf.radicand.s});
  return j;
}

inline ClosedForm closed_form_from_json(const nlohmann::json& j) {
  const rational q(bigint_from_json(j.at("q").at(0)), bigint_from_json(j.at("q").at(1)));
  const std::string kind = j.at("kind");
  ClosedForm cf;
  if (kind == "log_form") {
    cf = ClosedForm::log_form(q);
  } else {
    const auto& r = j.at("radicand");
    Radicand rad{r.at(0).get<long long>(), r.at(1).get<long long>(), r.at(2).get<long long>()};
    if (kind == "pi_sqrt") {
      cf = ClosedForm::pi_sqrt(q, rad);
    } else if (kind == "pi_trig") {
      const std::string t = j.at("trig");
      cf = ClosedForm::pi_trig(q, rad.a, t == "sin" ? Trig::sin : Trig::cos, j.at("angle").at(0).get<long long>(),
                               j.at("angle").at(1).get<long long>());
    } else {
      throw DomainError("unknown closed form kind '" + kind + "'");
    }
  }
  if (j.contains("expr") && j.at("expr").get<std::string>() != cf.to_string())
    throw DomainError("closed form expr '" + j.at("expr").get<std::string>() + "' does not match its fields");
  return cf;
}

}  // namespace roughpi
