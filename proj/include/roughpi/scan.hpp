#pragma once

// Brute-force enumeration of (1+-x^6)(1+-x^10)(1+-x^12)/(1+-x^30) and
// reconciliation with the printed S_7 sign table.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "evaluator.hpp"
#include "recognizer.hpp"

namespace roughpi {

/// One row of the S_7 table as printed: pattern, integrand and sum.
struct PrintedS7Row {
  std::string label;
  std::string pattern;
  char block_sign;
  std::array<int, 3> factor_signs;  // signs of x^6, x^10, x^12
  int denom_sign;
  ClosedForm value;
};

inline const std::vector<PrintedS7Row>& printed_s7_table() {
  static const std::vector<PrintedS7Row> rows = {
      {"ss0", "++++++++", '-', {+1, +1, +1}, +1, ClosedForm::pi_trig(rational(4, 15), 3, Trig::cos, 1, 10)},
      {"ss1", "+--++--+", '-', {+1, -1, -1}, +1, ClosedForm::pi_sqrt(rational(4, 15))},
      {"ss2", "+-+--+-+", '-', {-1, +1, -1}, +1, ClosedForm::pi_trig(rational(4, 15), 3, Trig::sin, 1, 5)},
      {"ss3", "++----++", '-', {+1, -1, -1}, +1, ClosedForm::pi_sqrt(rational(2, 15), {5, 0, 0})},
      {"ss4", "+---+++-", '+', {+1, -1, +1}, -1, ClosedForm::pi_sqrt(rational(1, 15), {15, 0, 0})},
      {"ss5", "++-+-+--", '+', {+1, -1, +1}, -1, ClosedForm::pi_sqrt(rational(1, 5), {3, 0, 0})},
      {"ss6", "+-++-+--", '+', {-1, -1, +1}, -1, ClosedForm::pi_sqrt(rational(1, 15), {25, -2, 5})},
      {"ss7", "+++-+---", '+', {+1, +1, -1}, -1, ClosedForm::pi_sqrt(rational(1, 15), {25, 2, 5})},
  };
  return rows;
}

/// The h-family S_7 pattern printed alongside the table.
inline const SignPattern& printed_h7_pattern() {
  static const SignPattern p{"+-++--+-", '-'};
  return p;
}

inline std::string factor_signs_text(const std::array<int, 3>& s, int denom) {
  std::string t;
  for (int x : s) t += x > 0 ? '+' : '-';
  return t + "/" + (denom > 0 ? '+' : '-');
}

template <class Real>
struct S7Row {
  std::array<int, 3> factor_signs;
  int denom_sign;
  Integrand integrand;
  SignPattern pattern;
  std::optional<Real> value;  // absent when x = 1 is a genuine pole
  std::optional<ClosedForm> form;
  bool residue_eligible = false;
  std::string note;
};

struct S7Resolution {
  std::string label;
  std::optional<std::size_t> row_by_value;
  std::vector<std::size_t> rows_by_pattern;
  std::optional<std::size_t> row_by_printed_integrand;
  std::vector<std::string> conflicts;

  bool value_found() const { return row_by_value.has_value(); }
  bool pattern_unique() const { return rows_by_pattern.size() == 1; }
  bool consistent() const { return conflicts.empty(); }
};

/// A pair of printed rows that share one printed integrand.
struct S7Duplicate {
  std::string first, second;
  std::string printed_integrand;
  std::string first_resolved, second_resolved;  // integrands that give each printed value
};

template <class Real>
struct S7Scan {
  std::vector<S7Row<Real>> rows;
  std::vector<S7Resolution> resolutions;
  std::vector<S7Duplicate> duplicates;
  std::optional<std::size_t> h7_row;  // row carrying the printed h-family pattern
};

inline Integrand s7_integrand(const std::array<int, 3>& s, int denom) {
  return Integrand::from_factors({{s[0], 6}, {s[1], 10}, {s[2], 12}}, denom, 30);
}

template <class Real>
S7Scan<Real> scan_s7_patterns(const Real& quad_tol = Real(1e-25), const Real& match_tol = Real(1e-10)) {
  S7Scan<Real> scan;
  for (int denom : {+1, -1})
    for (int a : {+1, -1})
      for (int b : {+1, -1})
        for (int c : {+1, -1}) {
          S7Row<Real> row{{a, b, c}, denom, s7_integrand({a, b, c}, denom), {}, std::nullopt, std::nullopt, false, {}};
          row.pattern = sign_pattern(row.integrand, 7);
          try {
            check_residue_eligible(row.integrand);
            row.residue_eligible = true;
          } catch (const Error&) {
          }
          try {
            row.value = quadrature<Real>(row.integrand, quad_tol).value;
          } catch (const PoleOnPath&) {
            row.note = "divergent: x = 1 is a pole";
          }
          if (row.value) {
            try {
              row.form = recognize<Real>(*row.value, match_tol);
            } catch (const AmbiguousMatch& e) {
              row.note = e.what();
            }
            if (!row.form && row.note.empty()) row.note = "no closed form in basis";
          }
          scan.rows.push_back(std::move(row));
        }

  for (const auto& printed : printed_s7_table()) {
    S7Resolution res{printed.label, std::nullopt, {}, std::nullopt, {}};
    const Real target = evaluate<Real>(printed.value);
    const SignPattern pat{printed.pattern, printed.block_sign};
    for (std::size_t i = 0; i < scan.rows.size(); ++i) {
      const auto& row = scan.rows[i];
      if (row.value && abs_of(Real(*row.value - target)) < match_tol) {
        if (res.row_by_value) res.conflicts.push_back("printed value matches more than one row");
        res.row_by_value = i;
      }
      if (row.pattern == pat) res.rows_by_pattern.push_back(i);
      if (row.factor_signs == printed.factor_signs && row.denom_sign == printed.denom_sign)
        res.row_by_printed_integrand = i;
    }
    if (!res.row_by_value) res.conflicts.push_back("printed value " + printed.value.to_string() + " matches no row");
    if (res.rows_by_pattern.empty())
      res.conflicts.push_back("printed pattern " + pat.notation() + " is produced by no integrand");
    if (res.row_by_value && res.row_by_printed_integrand != res.row_by_value) {
      const auto& actual = scan.rows[*res.row_by_value];
      res.conflicts.push_back("printed integrand " + s7_integrand(printed.factor_signs, printed.denom_sign).to_string() +
                              " does not give the printed value; " + actual.integrand.to_string() + " does");
    }
    if (res.row_by_value && !res.rows_by_pattern.empty() && res.rows_by_pattern.front() != *res.row_by_value) {
      const auto& actual = scan.rows[*res.row_by_value];
      res.conflicts.push_back("printed pattern belongs to a different integrand than the printed value; the value's "
                              "integrand has pattern " +
                              actual.pattern.notation());
    } else if (res.row_by_value && res.rows_by_pattern.empty()) {
      res.conflicts.push_back("the integrand giving the printed value has pattern " +
                              scan.rows[*res.row_by_value].pattern.notation());
    }
    scan.resolutions.push_back(std::move(res));
  }

  const auto& printed = printed_s7_table();
  for (std::size_t i = 0; i < printed.size(); ++i)
    for (std::size_t j = i + 1; j < printed.size(); ++j) {
      if (printed[i].factor_signs != printed[j].factor_signs || printed[i].denom_sign != printed[j].denom_sign)
        continue;
      auto resolved = [&](std::size_t r) {
        const auto& rv = scan.resolutions[r].row_by_value;
        return rv ? scan.rows[*rv].integrand.to_string() : std::string("unresolved");
      };
      scan.duplicates.push_back({printed[i].label, printed[j].label,
                                 s7_integrand(printed[i].factor_signs, printed[i].denom_sign).to_string(), resolved(i),
                                 resolved(j)});
    }

  for (std::size_t i = 0; i < scan.rows.size(); ++i)
    if (scan.rows[i].pattern == printed_h7_pattern()) scan.h7_row = i;
  return scan;
}

}  // namespace roughpi
