#pragma once

// Triple evaluation of catalog formulas and the resulting reports.

#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "catalog.hpp"
#include "evaluator.hpp"
#include "recognizer.hpp"

namespace roughpi {

struct EvalConfig {
  double quadrature_tol = 1e-25;
  double series_tol = 1e-16;
  double closed_form_tol = 1e-10;   // quadrature vs expected
  double residue_tol = 1e-10;       // residue vs quadrature
  double imag_leak_tol = 1e-12;
  double series_agree_tol = 1e-6;   // series vs quadrature
  double recognize_tol = 1e-10;
  SeriesOptions series{};
};

template <class Real>
struct Estimate {
  Real value;
  Real error;
};

template <class Real>
struct EvalReport {
  std::string formula_id;
  std::optional<Real> residue;
  std::optional<Real> residue_imag_leak;
  std::string residue_status = "ok";
  std::optional<Estimate<Real>> quadrature;
  std::string quadrature_status = "ok";
  std::optional<Estimate<Real>> series;
  std::string series_status = "ok";
  std::optional<Real> expected;
  std::string expected_expr;
  std::optional<ClosedForm> recognized;
  std::string recognized_status = "ok";
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }

  /// Absolute pairwise differences of whichever values are present.
  std::map<std::string, Real> deltas() const {
    std::map<std::string, Real> d;
    auto put = [&](const char* name, const std::optional<Real>& a, const std::optional<Real>& b) {
      if (a && b) d.emplace(name, abs_of(Real(*a - *b)));
    };
    const std::optional<Real> q = quadrature ? std::optional<Real>(quadrature->value) : std::nullopt;
    const std::optional<Real> s = series ? std::optional<Real>(series->value) : std::nullopt;
    put("residue-quadrature", residue, q);
    put("residue-expected", residue, expected);
    put("quadrature-expected", q, expected);
    put("series-quadrature", s, q);
    put("series-expected", s, expected);
    return d;
  }
};

/// Never throws for evaluation failures; they become absent values with a status.
template <class Real>
EvalReport<Real> evaluate_all(const Formula& f, const EvalConfig& cfg = {}) {
  EvalReport<Real> r;
  r.formula_id = f.id;

  bool residue_expected_absent = false;
  try {
    auto res = residue_eval<Real>(f.integrand);
    r.residue = res.value;
    r.residue_imag_leak = res.imag_leak;
  } catch (const SymmetryError& e) {
    r.residue_status = std::string("SymmetryError: ") + e.what();
    residue_expected_absent = true;
  } catch (const NotResidueEligible& e) {
    r.residue_status = std::string("NotResidueEligible: ") + e.what();
    residue_expected_absent = true;
  } catch (const std::exception& e) {
    r.residue_status = std::string("error: ") + e.what();
  }

  try {
    auto q = quadrature<Real>(f.integrand, Real(cfg.quadrature_tol));
    r.quadrature = Estimate<Real>{q.value, q.error_estimate};
  } catch (const std::exception& e) {
    r.quadrature_status = std::string("error: ") + e.what();
  }

  try {
    auto s = series_sum<Real>(f.integrand, f.k, Real(cfg.series_tol), cfg.series);
    r.series = Estimate<Real>{s.value, s.error_estimate};
  } catch (const std::exception& e) {
    r.series_status = std::string("error: ") + e.what();
  }

  if (f.expected) {
    r.expected = evaluate<Real>(*f.expected);
    r.expected_expr = f.expected->to_string();
  }

  if (r.quadrature) {
    try {
      r.recognized = recognize<Real>(r.quadrature->value, Real(cfg.recognize_tol));
      if (!r.recognized) r.recognized_status = "none";
    } catch (const std::exception& e) {
      r.recognized_status = e.what();
    }
  }

  const auto d = r.deltas();
  auto exceeds = [&](const char* key, double tol) { return d.count(key) && d.at(key) >= Real(tol); };
  if (!r.quadrature) r.failures.push_back("quadrature: " + r.quadrature_status);
  if (!r.series) r.failures.push_back("series: " + r.series_status);
  if (!r.residue && !residue_expected_absent) r.failures.push_back("residue: " + r.residue_status);
  if (exceeds("quadrature-expected", cfg.closed_form_tol))
    r.failures.push_back("quadrature differs from " + r.expected_expr + " by " +
                         to_decimal(d.at("quadrature-expected"), 6));
  if (exceeds("residue-quadrature", cfg.residue_tol))
    r.failures.push_back("residue differs from quadrature by " + to_decimal(d.at("residue-quadrature"), 6));
  if (r.residue_imag_leak && *r.residue_imag_leak >= Real(cfg.imag_leak_tol))
    r.failures.push_back("residue imaginary leak " + to_decimal(*r.residue_imag_leak, 6));
  if (exceeds("series-quadrature", cfg.series_agree_tol))
    r.failures.push_back("series differs from quadrature by " + to_decimal(d.at("series-quadrature"), 6));
  return r;
}

/// Reports in catalog (id) order; formulas run concurrently.
template <class Real>
std::vector<EvalReport<Real>> evaluate_catalog(const Catalog& c, const std::vector<std::string>& ids,
                                               const EvalConfig& cfg = {}) {
  std::vector<std::future<EvalReport<Real>>> jobs;
  for (const auto& id : ids) {
    const Formula& f = c.at(id);
    jobs.push_back(std::async(std::launch::async, [&f, &cfg] { return evaluate_all<Real>(f, cfg); }));
  }
  std::vector<EvalReport<Real>> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

template <class Real>
nlohmann::json to_json(const EvalReport<Real>& r, int digits) {
  auto num = [digits](const std::optional<Real>& x) {
    return x ? nlohmann::json(to_decimal(*x, digits)) : nlohmann::json(nullptr);
  };
  nlohmann::json j;
  j["formula_id"] = r.formula_id;
  j["residue_value"] = num(r.residue);
  j["residue_imag_leak"] = num(r.residue_imag_leak);
  j["residue_status"] = r.residue_status;
  j["quadrature_value"] = r.quadrature ? nlohmann::json(to_decimal(r.quadrature->value, digits)) : nlohmann::json(nullptr);
  j["quadrature_error_estimate"] = r.quadrature ? nlohmann::json(to_decimal(r.quadrature->error, 6)) : nlohmann::json(nullptr);
  j["quadrature_status"] = r.quadrature_status;
  j["series_value"] = r.series ? nlohmann::json(to_decimal(r.series->value, digits)) : nlohmann::json(nullptr);
  j["series_error_estimate"] = r.series ? nlohmann::json(to_decimal(r.series->error, 6)) : nlohmann::json(nullptr);
  j["series_status"] = r.series_status;
  j["expected_value"] = num(r.expected);
  j["expected_expr"] = r.expected ? nlohmann::json(r.expected_expr) : nlohmann::json(nullptr);
  j["recognized"] = r.recognized ? nlohmann::json(r.recognized->to_string()) : nlohmann::json(nullptr);
  j["recognized_status"] = r.recognized_status;
  nlohmann::json deltas = nlohmann::json::object();
  for (const auto& [k, v] : r.deltas()) deltas[k] = to_decimal(v, 6);
  j["deltas"] = deltas;
  j["pass"] = r.passed();
  j["failures"] = r.failures;
  return j;
}

}  // namespace roughpi
