// roughpi: command-line front end for rough-number Pi formula verification.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "roughpi/catalog.hpp"
#include "roughpi/family.hpp"
#include "roughpi/report.hpp"
#include "roughpi/rough_core.hpp"
#include "roughpi/scan.hpp"

namespace {

using namespace roughpi;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int digits = 30;
  std::string format = "text";
  bool seedless = true;

  u64 rough_k = 5;
  u64 rough_limit = 100;
  u64 mmg_k = 7;
  std::string verify_id;
  double verify_tol = 1e-10;
  std::string expand_id;
  u64 expand_terms = 16;
  std::string derive_id;
  u64 derive_k = 0;
  bool catalog_dump = false;
  std::string catalog_load;
  std::string recognize_value;
  double recognize_tol = 1e-10;
};

const Formula& lookup(const Catalog& c, const std::string& id) {
  if (!c.contains(id)) throw UsageError("unknown formula id '" + id + "'");
  return c.at(id);
}

std::string join(const std::vector<u64>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

int cmd_roughs(const Options& o) {
  const auto s = rough_prefix(o.rough_k, o.rough_limit);
  if (o.format == "json")
    std::cout << json{{"k", s.k}, {"limit", s.limit}, {"elements", s.elements}}.dump(2) << "\n";
  else if (o.format == "csv") {
    std::cout << "index,value\n";
    for (std::size_t i = 0; i < s.elements.size(); ++i) std::cout << i + 1 << "," << s.elements[i] << "\n";
  } else
    std::cout << to_bfile(s.elements);
  return kExitOk;
}

int cmd_mmg(const Options& o) {
  const auto g = mmg(o.mmg_k);
  const bool closed = g.modulus <= kMmgClosureCheckLimit ? is_closed(g) : false;
  if (o.format == "json") {
    std::cout << json{{"k", g.k}, {"modulus", g.modulus}, {"order", g.order()}, {"totient", totient(g.modulus)},
                      {"closed", closed}, {"elements", g.elements}}
                     .dump(2)
              << "\n";
  } else if (o.format == "csv") {
    std::cout << "k,modulus,order,closed\n" << g.k << "," << g.modulus << "," << g.order() << "," << closed << "\n";
  } else {
    std::cout << "G_" << g.k << " = M(" << g.modulus << "), order " << g.order() << ", closed: " << (closed ? "yes" : "no")
              << "\n"
              << "{" << join(g.elements, ",") << "}\n";
  }
  return kExitOk;
}

template <class Real>
int cmd_verify(const Options& o, const EvalConfig& cfg_in) {
  const Catalog c = builtin_catalog();
  EvalConfig cfg = cfg_in;
  cfg.closed_form_tol = o.verify_tol;
  std::vector<std::string> ids;
  if (o.verify_id == "all")
    for (const auto& [id, f] : c.formulas) ids.push_back(id);
  else
    ids.push_back(lookup(c, o.verify_id).id);

  const auto reports = evaluate_catalog<Real>(c, ids, cfg);
  bool ok = true;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, o.digits));
    std::cout << arr.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "id,pass,residue,quadrature,series,expected\n";
    auto cell = [&](const auto& x) { return x ? to_decimal(Real(*x), o.digits) : std::string(); };
    for (const auto& r : reports) {
      std::optional<Real> q, s;
      if (r.quadrature) q = r.quadrature->value;
      if (r.series) s = r.series->value;
      std::cout << r.formula_id << "," << (r.passed() ? "PASS" : "FAIL") << "," << cell(r.residue) << "," << cell(q)
                << "," << cell(s) << "," << cell(r.expected) << "\n";
    }
  }
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (o.format != "text") continue;
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.formula_id;
    if (r.expected) std::cout << "  expected " << r.expected_expr;
    std::cout << "\n";
    auto line = [&](const char* name, const std::string& value) {
      std::cout << "  " << name << ": " << value << "\n";
    };
    line("residue   ", r.residue ? to_decimal(*r.residue, o.digits) : "absent (" + r.residue_status + ")");
    line("quadrature", r.quadrature ? to_decimal(r.quadrature->value, o.digits) : r.quadrature_status);
    line("series    ", r.series ? to_decimal(r.series->value, o.digits) : r.series_status);
    if (r.expected) line("expected  ", to_decimal(*r.expected, o.digits));
    line("recognized", r.recognized ? r.recognized->to_string() : r.recognized_status);
    for (const auto& [k, v] : r.deltas()) line(k.c_str(), to_decimal(v, 3));
    for (const auto& f : r.failures) line("failure   ", f);
  }
  return ok ? kExitOk : kExitFailure;
}

/// Bracketed blocks of one period each, the block sign factored out.
std::string render_series(const Formula& f, u64 terms) {
  const u64 P = f.integrand.period();
  const u64 len = block_length(f.k, P);
  const u64 blocks = (terms + len - 1) / len;
  const auto s = expand_series(f.integrand, static_cast<std::size_t>((blocks + 1) * P));
  std::ostringstream os;
  u64 shown = 0;
  for (u64 b = 0; b < blocks && shown < terms; ++b) {
    const int factor = (f.sign_pattern.block_sign == '-' && (b % 2)) ? -1 : 1;
    if (b) os << (factor > 0 ? " + " : " - ");
    os << "(";
    bool first = true;
    for (u64 e = b * P; e < (b + 1) * P && shown < terms; ++e) {
      if (s[e] == 0) continue;
      const bool neg = (s[e] * factor) < 0;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      if (e == 0)
        os << "1";
      else
        os << "1/" << e + 1;
      ++shown;
    }
    os << ")";
  }
  const int next = (f.sign_pattern.block_sign == '-' && (blocks % 2)) ? -1 : 1;
  os << (next > 0 ? " + ..." : " - ...");
  return os.str();
}

int cmd_expand(const Options& o) {
  const Catalog c = builtin_catalog();
  const Formula& f = lookup(c, o.expand_id);
  if (o.expand_terms < 1) throw UsageError("--terms must be >= 1");
  if (o.format == "json" || o.format == "csv") {
    const u64 P = f.integrand.period();
    std::vector<std::pair<u64, int>> fr;
    for (u64 n = P;; n *= 2) {
      const auto s = expand_series(f.integrand, n);
      fr.clear();
      for (u64 e = 0; e < n && fr.size() < o.expand_terms; ++e)
        if (s[e] != 0) fr.emplace_back(e + 1, s[e] > 0 ? 1 : -1);
      if (fr.size() >= o.expand_terms) break;
    }
    if (o.format == "csv") {
      std::cout << "denominator,sign\n";
      for (const auto& [n, sg] : fr) std::cout << n << "," << (sg > 0 ? "+" : "-") << "\n";
    } else {
      json terms = json::array();
      for (const auto& [n, sg] : fr) terms.push_back({{"denominator", n}, {"sign", sg}});
      std::cout << json{{"id", f.id},
                        {"integrand", f.integrand.to_string()},
                        {"sign_pattern", f.sign_pattern.notation()},
                        {"terms", terms}}
                       .dump(2)
                << "\n";
    }
    return kExitOk;
  }
  std::cout << f.id << ": " << f.integrand.to_string() << "  " << f.sign_pattern.notation() << "\n"
            << render_series(f, o.expand_terms) << "\n";
  return kExitOk;
}

template <class Real>
int cmd_derive(const Options& o, const EvalConfig& cfg) {
  const Catalog c = builtin_catalog();
  const Formula& parent = lookup(c, o.derive_id);
  const u64 k = o.derive_k ? o.derive_k : parent.k;
  const FamilyStep step = derive_child(parent.integrand, k, parent.id);
  const auto identity = verify_identity(step);
  const auto stats = child_numerator_stats(step);
  const auto child_pattern = sign_pattern(step.child, step.child_k());
  const auto q = quadrature<Real>(step.child, Real(cfg.quadrature_tol));
  const Real scaled = Real(boost::multiprecision::numerator(step.scale)) /
                      Real(boost::multiprecision::denominator(step.scale)) *
                      (parent.expected ? evaluate<Real>(*parent.expected)
                                       : quadrature<Real>(parent.integrand, Real(cfg.quadrature_tol)).value);
  std::optional<ClosedForm> form;
  std::string form_status = "ok";
  try {
    form = recognize<Real>(q.value, Real(cfg.recognize_tol));
    if (!form) form_status = "none";
  } catch (const AmbiguousMatch& e) {
    form_status = e.what();
  }
  std::string child_id;
  for (const auto& [id, f] : c.formulas)
    if (f.integrand.denom_sign() == step.child.denom_sign() && f.integrand.period() == step.child.period() &&
        f.integrand.numerator() == step.child.numerator() && child_id.empty())
      child_id = id;
  const bool scale_ok = abs_of(Real(q.value - scaled)) < Real(cfg.closed_form_tol);

  json j = to_json(step);
  j["identity_holds"] = identity.holds;
  if (identity.first_mismatch) j["first_mismatch"] = *identity.first_mismatch;
  j["child_id"] = child_id.empty() ? json(nullptr) : json(child_id);
  j["child_sign_pattern"] = child_pattern.notation();
  j["child_stats"] = {{"degree", stats.degree}, {"term_count", stats.term_count},
                      {"max_abs_coeff", stats.max_abs_coeff.str()}};
  j["child_quadrature"] = to_decimal(q.value, o.digits);
  j["scale_times_parent"] = to_decimal(scaled, o.digits);
  j["scale_law_holds"] = scale_ok;
  j["child_recognized"] = form ? json(form->to_string()) : json(nullptr);
  if (!form) j["child_recognized_status"] = form_status;

  if (o.format == "text") {
    std::cout << parent.id << " --(k=" << k << ", sign " << (step.sign > 0 ? "+" : "-") << ")--> "
              << (child_id.empty() ? "S" + std::to_string(step.child_k()) + " child" : child_id) << "\n"
              << "  scale " << step.scale.str() << "\n"
              << "  child " << step.child.to_string() << "\n"
              << "  pattern " << child_pattern.notation() << "\n"
              << "  numerator degree " << stats.degree << ", " << stats.term_count << " terms, max |c| "
              << stats.max_abs_coeff << "\n"
              << "  identity " << (identity.holds ? "exact" : "FAILS") << "\n"
              << "  integral " << to_decimal(q.value, o.digits) << (form ? " = " + form->to_string() : "") << "\n"
              << "  scale law " << (scale_ok ? "holds" : "FAILS") << "\n";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return identity.holds && scale_ok ? kExitOk : kExitFailure;
}

template <class Real>
int cmd_scan(const Options& o, const EvalConfig& cfg) {
  const auto scan = scan_s7_patterns<Real>(Real(cfg.quadrature_tol), Real(cfg.recognize_tol));
  const auto& printed = printed_s7_table();
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& r : scan.rows)
      rows.push_back({{"factor_signs", factor_signs_text(r.factor_signs, r.denom_sign)},
                      {"integrand", r.integrand.to_string()},
                      {"pattern", r.pattern.notation()},
                      {"value", r.value ? json(to_decimal(*r.value, o.digits)) : json(nullptr)},
                      {"recognized", r.form ? json(r.form->to_string()) : json(nullptr)},
                      {"residue_eligible", r.residue_eligible},
                      {"note", r.note}});
    json res = json::array();
    for (std::size_t i = 0; i < scan.resolutions.size(); ++i) {
      const auto& r = scan.resolutions[i];
      res.push_back({{"label", r.label},
                     {"printed_pattern", SignPattern{printed[i].pattern, printed[i].block_sign}.notation()},
                     {"printed_value", printed[i].value.to_string()},
                     {"row_by_value", r.row_by_value ? json(*r.row_by_value) : json(nullptr)},
                     {"rows_by_pattern", r.rows_by_pattern},
                     {"conflicts", r.conflicts}});
    }
    json dups = json::array();
    for (const auto& d : scan.duplicates)
      dups.push_back({{"rows", {d.first, d.second}},
                      {"printed_integrand", d.printed_integrand},
                      {"resolved", {d.first_resolved, d.second_resolved}}});
    std::cout << json{{"rows", rows}, {"resolutions", res}, {"duplicates", dups}}.dump(2) << "\n";
    return kExitOk;
  }
  if (o.format == "csv") {
    std::cout << "signs,pattern,value,recognized,residue_eligible\n";
    for (const auto& r : scan.rows)
      std::cout << factor_signs_text(r.factor_signs, r.denom_sign) << "," << r.pattern.notation() << ","
                << (r.value ? to_decimal(*r.value, o.digits) : "") << "," << (r.form ? r.form->to_string() : "")
                << "," << r.residue_eligible << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    const auto& r = scan.rows[i];
    std::cout << (i < 10 ? " " : "") << i << "  " << factor_signs_text(r.factor_signs, r.denom_sign) << "  "
              << r.pattern.notation() << "  " << (r.value ? to_decimal(*r.value, 20) : std::string(26, ' ')) << "  "
              << (r.form ? r.form->to_string() : r.note) << "\n";
  }
  std::cout << "\n";
  for (std::size_t i = 0; i < scan.resolutions.size(); ++i) {
    const auto& r = scan.resolutions[i];
    std::cout << r.label << " " << SignPattern{printed[i].pattern, printed[i].block_sign}.notation() << " "
              << printed[i].value.to_string() << ": ";
    if (r.consistent())
      std::cout << "agrees with row " << *r.row_by_value << "\n";
    else {
      std::cout << "conflict\n";
      for (const auto& c : r.conflicts) std::cout << "    " << c << "\n";
    }
  }
  for (const auto& d : scan.duplicates)
    std::cout << "duplicate printed integrand " << d.printed_integrand << " for " << d.first << " and " << d.second
              << ": " << d.first << " -> " << d.first_resolved << ", " << d.second << " -> " << d.second_resolved
              << "\n";
  if (scan.h7_row) std::cout << "h-family pattern " << printed_h7_pattern().notation() << " is row " << *scan.h7_row << "\n";
  return kExitOk;
}

int cmd_catalog(const Options& o) {
  Catalog c = builtin_catalog();
  if (!o.catalog_load.empty()) {
    std::ifstream in(o.catalog_load);
    if (!in) throw UsageError("cannot read " + o.catalog_load);
    std::stringstream buf;
    buf << in.rdbuf();
    c = parse_catalog(buf.str());
  }
  if (o.catalog_dump || o.format == "json") {
    std::cout << serialize(c);
    return kExitOk;
  }
  if (o.format == "csv") std::cout << "id,family,k,integrand,pattern,expected\n";
  for (const auto& [id, f] : c.formulas) {
    const std::string expected = f.expected ? f.expected->to_string() : "";
    if (o.format == "csv")
      std::cout << id << "," << f.family << "," << f.k << "," << f.integrand.to_string() << ","
                << f.sign_pattern.notation() << "," << expected << "\n";
    else
      std::cout << id << "  S_" << f.k << "  " << f.sign_pattern.notation() << "  " << f.integrand.to_string()
                << "  = " << expected << "\n";
  }
  return kExitOk;
}

template <class Real>
int cmd_recognize(const Options& o) {
  Real v;
  try {
    v = Real(o.recognize_value);
  } catch (const std::exception&) {
    throw UsageError("not a number: " + o.recognize_value);
  }
  try {
    auto cf = recognize<Real>(v, Real(o.recognize_tol));
    if (o.format == "json")
      std::cout << (cf ? to_json(*cf) : json(nullptr)).dump(2) << "\n";
    else
      std::cout << (cf ? cf->to_string() : "none") << "\n";
    return cf ? kExitOk : kExitFailure;
  } catch (const AmbiguousMatch& e) {
    std::cout << e.what() << "\n";
    return kExitFailure;
  }
}

template <class Real>
int dispatch(const std::string& command, const Options& o) {
  EvalConfig cfg;
  cfg.quadrature_tol = std::pow(10.0, -o.digits);
  if (command == "roughs") return cmd_roughs(o);
  if (command == "mmg") return cmd_mmg(o);
  if (command == "verify") return cmd_verify<Real>(o, cfg);
  if (command == "expand") return cmd_expand(o);
  if (command == "derive") return cmd_derive<Real>(o, cfg);
  if (command == "scan-s7") return cmd_scan<Real>(o, cfg);
  if (command == "catalog") return cmd_catalog(o);
  if (command == "recognize") return cmd_recognize<Real>(o);
  throw UsageError("a subcommand is required; see --help");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact and high-precision verification of Pi formulas indexed by k-rough numbers"};
  app.require_subcommand(1);
  app.add_option("--precision", o.digits, "Significant decimal digits (16-85)")->check(CLI::Range(16, 85));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--seedless", o.seedless, "Deterministic output (always on)");

  auto* roughs = app.add_subcommand("roughs", "Emit the k-rough numbers up to a limit (OEIS b-file in text mode)");
  roughs->add_option("k", o.rough_k, "Prime rough index")->required();
  roughs->add_option("--limit", o.rough_limit, "Largest value to emit")->check(CLI::PositiveNumber);

  auto* mmg_cmd = app.add_subcommand("mmg", "Show the group M(P_k)");
  mmg_cmd->add_option("k", o.mmg_k, "Prime rough index")->required();

  auto* verify = app.add_subcommand("verify", "Evaluate formulas three ways and compare with their closed forms");
  verify->add_option("id", o.verify_id, "Formula id or 'all'")->required();
  verify->add_option("--tol", o.verify_tol, "Closed-form tolerance")->check(CLI::PositiveNumber);

  auto* expand = app.add_subcommand("expand", "Show the series of a formula in bracketed blocks");
  expand->add_option("id", o.expand_id, "Formula id")->required();
  expand->add_option("--terms", o.expand_terms, "Number of fractions");

  auto* derive = app.add_subcommand("derive", "Apply the family recursion to a formula");
  derive->add_option("id", o.derive_id, "Parent formula id")->required();
  derive->add_option("--k", o.derive_k, "Prime to excise (default: the parent's rough index)");

  app.add_subcommand("scan-s7", "Enumerate all sixteen S_7 sign choices and reconcile the printed table");

  auto* catalog = app.add_subcommand("catalog", "List or dump the formula catalog");
  catalog->add_flag("--dump", o.catalog_dump, "Print canonical JSON");
  catalog->add_option("--load", o.catalog_load, "Parse a catalog file instead of the built-in one");

  auto* recognize_cmd = app.add_subcommand("recognize", "Match a value against the closed-form basis");
  recognize_cmd->add_option("value", o.recognize_value, "Decimal value")->required();
  recognize_cmd->add_option("--tol", o.recognize_tol, "Match tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (o.digits <= 35) return dispatch<real50>(command, o);
    return dispatch<real100>(command, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const roughpi::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
