#pragma once

// The built-in formula catalog and its canonical JSON form.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "family.hpp"
#include "integrand.hpp"
#include "recognizer.hpp"

namespace roughpi {

struct Formula {
  std::string id;
  std::string family;  // f, g, h, ss, jj
  u64 k = 3;
  Integrand integrand;
  SignPattern sign_pattern;
  std::optional<ClosedForm> expected;
  std::string provenance;

  bool operator==(const Formula&) const = default;
};

struct Catalog {
  std::string version;
  std::map<std::string, Formula> formulas;

  const Formula& at(const std::string& id) const {
    auto it = formulas.find(id);
    if (it == formulas.end()) throw DomainError("unknown formula id '" + id + "'");
    return it->second;
  }

  bool contains(const std::string& id) const { return formulas.count(id) != 0; }

  void add(Formula f) {
    if (contains(f.id)) throw DomainError("duplicate formula id '" + f.id + "'");
    const std::string id = f.id;
    formulas.emplace(id, std::move(f));
  }

  bool operator==(const Catalog&) const = default;
};

inline constexpr const char* kCatalogVersion = "roughpi-catalog-1";

/// Builds a formula, recomputing its sign pattern from the integrand.
inline Formula make_formula(std::string id, std::string family, u64 k, Integrand g,
                            std::optional<ClosedForm> expected, std::string provenance) {
  SignPattern sp = sign_pattern(g, k);
  return {std::move(id), std::move(family), k, std::move(g), std::move(sp), std::move(expected),
          std::move(provenance)};
}

namespace detail {

inline Integrand s7(int s6, int s10, int s12, int denom) {
  return Integrand::from_factors({{s6, 6}, {s10, 10}, {s12, 12}}, denom, 30);
}

inline ClosedForm pi_q(long long n, long long d) { return ClosedForm::pi_sqrt(rational(n, d)); }

inline ClosedForm pi_q_sqrt(long long n, long long d, Radicand r) { return ClosedForm::pi_sqrt(rational(n, d), r); }

}  // namespace detail

inline Catalog builtin_catalog() {
  using detail::pi_q;
  using detail::pi_q_sqrt;
  using detail::s7;
  Catalog c{kCatalogVersion, {}};

  const auto f3 = Integrand::from_factors({}, +1, 2);
  const auto f7 = s7(-1, -1, +1, +1);
  c.add(make_formula("S3-f", "f", 3, f3, pi_q(1, 4), "Gregory-Leibniz series; ancestor of the f family"));
  c.add(make_formula("S5-f", "f", 5, Integrand::from_factors({{+1, 4}}, +1, 6), pi_q(1, 3),
                     "f family S_5 member: S3-f with multiples of 3 excised"));
  c.add(make_formula("S7-f", "f", 7, f7, pi_q(4, 15),
                     "f family S_7 member: S5-f with multiples of 5 excised; evaluated by residues"));
  c.add(make_formula("S11-f", "f", 11, derive_child(f7, 7, "S7-f").child, pi_q(32, 105),
                     "f family S_11 member: psi_11 numerator of degree 208 with 48 terms, built by the recursion "
                     "from S7-f with scale 1 + 1/7"));
  c.add(make_formula("S5-g", "g", 5, Integrand::from_factors({{-1, 4}}, -1, 6), pi_q_sqrt(1, 6, {3, 0, 0}),
                     "g family ancestor"));
  c.add(make_formula("S7-g", "g", 7, s7(+1, -1, +1, -1), pi_q_sqrt(1, 5, {3, 0, 0}),
                     "g family S_7 member from S5-g with scale 1 + 1/5; the printed recursion names its first "
                     "term g_g, read as g_5"));
  c.add(make_formula("S5-h", "h", 5, Integrand::from_factors({{-1, 4}}, +1, 6), ClosedForm::log_form(rational(1, 3)),
                     "h family ancestor; not a Pi Formula and not evaluable by residues"));
  c.add(make_formula("S7-h", "h", 7, s7(-1, +1, +1, +1), ClosedForm::log_form(rational(2, 5)),
                     "h family S_7 member from S5-h with scale 1 + 1/5"));

  // S_7 sign table. Integrands are the ones whose value matches the printed
  // sum; rows whose printed integrand disagrees say so.
  c.add(make_formula("ss0", "ss", 7, s7(+1, +1, +1, +1), ClosedForm::pi_trig(rational(4, 15), 3, Trig::cos, 1, 10),
                     "S_7 sign table row 0"));
  c.add(make_formula("ss1", "ss", 7, f7, pi_q(4, 15),
                     "S_7 sign table row 1, same series as S7-f; printed integrand "
                     "(1+x^6)(1-x^10)(1-x^12)/(1+x^30) is that of row 3"));
  c.add(make_formula("ss2", "ss", 7, s7(-1, +1, -1, +1), ClosedForm::pi_trig(rational(4, 15), 3, Trig::sin, 1, 5),
                     "S_7 sign table row 2"));
  c.add(make_formula("ss3", "ss", 7, s7(+1, -1, -1, +1), pi_q_sqrt(2, 15, {5, 0, 0}), "S_7 sign table row 3"));
  c.add(make_formula("ss4", "ss", 7, s7(-1, -1, -1, -1), pi_q_sqrt(1, 15, {15, 0, 0}),
                     "S_7 sign table row 4; printed integrand (1+x^6)(1-x^10)(1+x^12)/(1-x^30) is that of row 5"));
  c.add(make_formula("ss5", "ss", 7, s7(+1, -1, +1, -1), pi_q_sqrt(1, 5, {3, 0, 0}),
                     "S_7 sign table row 5, same series as S7-g"));
  c.add(make_formula("ss6", "ss", 7, s7(-1, +1, +1, -1), pi_q_sqrt(1, 15, {25, -2, 5}),
                     "S_7 sign table row 6; printed pattern (+-++ -+--)+ and printed integrand "
                     "(1-x^6)(1-x^10)(1+x^12)/(1-x^30) both disagree with the printed value"));
  c.add(make_formula("ss7", "ss", 7, s7(+1, +1, -1, -1), pi_q_sqrt(1, 15, {25, 2, 5}), "S_7 sign table row 7"));

  c.add(make_formula("jj1", "jj", 3, Integrand::from_factors({{+1, 2}}, +1, 4), pi_q_sqrt(1, 4, {2, 0, 0}),
                     "S_3 series with denominator 1+x^4"));
  c.add(make_formula("jj2", "jj", 5, Integrand::from_factors({{+1, 4}, {+1, 6}, {+1, 12}}, +1, 24),
                     pi_q_sqrt(1, 3, {1, 1, 2}),
                     "S_5 series with blocks (++++ ++++)-; the printed integrand "
                     "(1+x^4)(1+x^6)(1+x^10)/(1+x^24) has a coefficient 2 at x^10, so the factor x^10 is "
                     "replaced by x^12 to match the printed series; the printed value is kept unchanged"));
  c.add(make_formula("jj3", "jj", 5, Integrand::from_factors({{-1, 4}, {-1, 6}}, +1, 12), pi_q_sqrt(1, 6, {2, 0, 0}),
                     "S_5 child of jj1 under the recursion with scale 1 - 1/3"));
  return c;
}

// --- JSON -------------------------------------------------------------------

inline nlohmann::json to_json(const Integrand& g) {
  nlohmann::json j;
  if (g.factors()) {
    j["factors"] = nlohmann::json::array();
    for (const auto& f : *g.factors()) j["factors"].push_back(nlohmann::json::array({f.sign, f.exponent}));
  } else {
    j["factors"] = nullptr;
  }
  nlohmann::json num;
  to_json(num, g.numerator());
  j["numerator"] = num;
  j["denom_sign"] = g.denom_sign();
  j["P"] = g.period();
  return j;
}

inline Integrand integrand_from_json(const nlohmann::json& j) {
  const int ds = j.at("denom_sign").get<int>();
  const u64 P = j.at("P").get<u64>();
  IntPolynomial num;
  from_json(j.at("numerator"), num);
  if (j.contains("factors") && !j.at("factors").is_null()) {
    std::vector<Factor> fs;
    for (const auto& f : j.at("factors")) fs.push_back({f.at(0).get<int>(), f.at(1).get<u64>()});
    Integrand g = Integrand::from_factors(std::move(fs), ds, P);
    if (g.numerator() != num) throw DomainError("integrand numerator does not equal the product of its factors");
    return g;
  }
  return Integrand::from_numerator(std::move(num), ds, P);
}

inline nlohmann::json to_json(const Formula& f) {
  nlohmann::json j;
  j["id"] = f.id;
  j["family"] = f.family;
  j["k"] = f.k;
  j["integrand"] = to_json(f.integrand);
  j["sign_pattern"] = {{"pattern", f.sign_pattern.pattern}, {"block_sign", std::string(1, f.sign_pattern.block_sign)}};
  j["expected"] = f.expected ? to_json(*f.expected) : nlohmann::json(nullptr);
  j["provenance"] = f.provenance;
  return j;
}

inline Formula formula_from_json(const nlohmann::json& j) {
  Formula f;
  f.id = j.at("id").get<std::string>();
  f.family = j.at("family").get<std::string>();
  f.k = j.at("k").get<u64>();
  f.integrand = integrand_from_json(j.at("integrand"));
  const auto& sp = j.at("sign_pattern");
  f.sign_pattern.pattern = sp.at("pattern").get<std::string>();
  const std::string bs = sp.at("block_sign").get<std::string>();
  if (bs != "+" && bs != "-") throw DomainError("block_sign must be '+' or '-'");
  f.sign_pattern.block_sign = bs[0];
  if (!j.at("expected").is_null()) f.expected = closed_form_from_json(j.at("expected"));
  f.provenance = j.value("provenance", "");
  if (sign_pattern(f.integrand, f.k) != f.sign_pattern)
    throw DomainError("formula '" + f.id + "': stored sign pattern differs from the integrand's");
  return f;
}

/// Canonical document: sorted keys, formulas ordered by id.
inline nlohmann::json to_json(const Catalog& c) {
  nlohmann::json j;
  j["version"] = c.version;
  j["formulas"] = nlohmann::json::array();
  for (const auto& [id, f] : c.formulas) j["formulas"].push_back(to_json(f));
  return j;
}

inline std::string serialize(const Catalog& c) { return to_json(c).dump(2) + "\n"; }

inline Catalog parse_catalog(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Catalog c{j.at("version").get<std::string>(), {}};
  for (const auto& f : j.at("formulas")) c.add(formula_from_json(f));
  return c;
}

}  // namespace roughpi
