// Command line front end: character tables, Euler factor shapes, the two
// prime tables, series expansion, zeta residues, convergence rates, the
// brute-force sublattice oracle, and the built-in reference verification.
//
// Exit codes: 0 success, 2 usage error, 3 capacity/envelope error,
// 4 reference table mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cyclozeta/arith.hpp"
#include "cyclozeta/characters.hpp"
#include "cyclozeta/dirichlet_series.hpp"
#include "cyclozeta/errors.hpp"
#include "cyclozeta/euler_factors.hpp"
#include "cyclozeta/l_values.hpp"
#include "cyclozeta/modulus.hpp"
#include "cyclozeta/reference_tables.hpp"
#include "cyclozeta/sublattice_oracle.hpp"
#include "cyclozeta/unit_group.hpp"

namespace {

using json = nlohmann::json;
using namespace cyclozeta;

constexpr const char* kVersion = "1.0.0";
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitMismatch = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& command, std::optional<int64_t> n,
          json payload) {
  json envelope;
  envelope["command"] = command;
  envelope["version"] = kVersion;
  if (n) envelope["n"] = *n;
  envelope["payload"] = std::move(payload);
  std::cout << envelope.dump(2) << "\n";
}

// --n accepts a single modulus or "all" (the 29-element list) where noted;
// values outside the list need --allow-any.
std::vector<Modulus> resolve_moduli(const std::string& spec, bool allow_any,
                                    bool allow_all) {
  if (spec == "all") {
    if (!allow_all) throw UsageError("--n all is not supported here");
    std::vector<Modulus> all;
    for (int64_t n : kClassNumberOne) all.emplace_back(n);
    return all;
  }
  int64_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoll(spec, &used);
    if (used != spec.size()) throw std::invalid_argument(spec);
  } catch (const std::exception&) {
    throw UsageError("--n expects an integer or 'all', got '" + spec + "'");
  }
  std::optional<Modulus> m;
  try {
    m.emplace(n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!m->class_number_one() && !allow_any) {
    throw UsageError(
        "n=" + std::to_string(n) +
        " is not in the class-number-one list; coefficients would count "
        "ideals, not colourings. Pass --allow-any to proceed.");
  }
  return {*m};
}

int64_t oracle_budget(int64_t flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("CYCLOZETA_MAX_NODES")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw UsageError("CYCLOZETA_MAX_NODES must be a positive integer");
  }
  return OracleOptions{}.max_nodes;
}

std::string root_text(const std::optional<RootOfUnity>& v) {
  return v ? v->to_string() : "0";
}

json root_json(const std::optional<RootOfUnity>& v) {
  if (!v) return nullptr;
  return json{{"num", v->num}, {"ord", v->ord}};
}

std::string label_text(const std::vector<int64_t>& label) {
  std::string out = "(";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(label[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// characters
// ---------------------------------------------------------------------------

int run_characters(const std::string& n_spec, bool allow_any,
                   const std::string& format) {
  const Modulus m = resolve_moduli(n_spec, allow_any, false).front();
  const int64_t n = m.value();
  const UnitGroup group(m);
  const auto chars = all_characters(group);

  if (format == "json") {
    json rows = json::array();
    for (const auto& chi : chars) {
      json values = json::array();
      for (int64_t k = 1; k <= n; ++k) {
        values.push_back(root_json(chi.value_at(k)));
      }
      rows.push_back({{"label", chi.label()},
                      {"conductor", chi.conductor()},
                      {"even", chi.is_even()},
                      {"values", values}});
    }
    emit("characters", n,
         json{{"n", n}, {"root_order", group.exponent()}, {"characters", rows}});
    return 0;
  }

  // Table layout: one row per character, columns k = 1..n, then the
  // ell/m footer for the unit classes and ramified prime columns.
  std::size_t width = 2;
  std::vector<std::vector<std::string>> cells;
  for (const auto& chi : chars) {
    std::vector<std::string> row;
    for (int64_t k = 1; k <= n; ++k) {
      row.push_back(root_text(chi.value_at(k)));
      width = std::max(width, row.back().size());
    }
    cells.push_back(std::move(row));
  }
  std::size_t head = 5;
  for (const auto& chi : chars) {
    head = std::max(head, label_text(chi.label()).size());
  }

  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };

  std::cout << pad("chi", head) << "  " << pad("f", 4) << " |";
  for (int64_t col = 1; col <= n; ++col) {
    std::cout << " " << pad(std::to_string(col), width);
  }
  std::cout << "\n";
  for (std::size_t i = 0; i < chars.size(); ++i) {
    std::cout << pad(label_text(chars[i].label()), head) << "  "
              << pad(std::to_string(chars[i].conductor()), 4) << " |";
    for (const auto& cell : cells[i]) std::cout << " " << pad(cell, width);
    std::cout << "\n";
  }
  // Footer: shapes per column.
  std::vector<std::string> ell_row, m_row;
  for (int64_t col = 1; col <= n; ++col) {
    if (std::gcd(col, n) == 1) {
      const int64_t ell = multiplicative_order_mod(col, n);
      ell_row.push_back(std::to_string(ell));
      m_row.push_back(std::to_string(group.order() / ell));
    } else if (is_prime(col) && n % col == 0) {
      const auto shape = shape_via_order(m, col);
      ell_row.push_back(std::to_string(shape.ell));
      m_row.push_back(std::to_string(shape.m));
    } else {
      ell_row.push_back("");
      m_row.push_back("");
    }
  }
  // "ℓ" is three bytes but one display column; pad by bytes accordingly.
  std::cout << pad("ℓ", head + 2) << "  " << pad("", 4) << " |";
  for (const auto& cell : ell_row) std::cout << " " << pad(cell, width);
  std::cout << "\n" << pad("m", head) << "  " << pad("", 4) << " |";
  for (const auto& cell : m_row) std::cout << " " << pad(cell, width);
  std::cout << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// euler
// ---------------------------------------------------------------------------

int run_euler(const std::string& n_spec, bool allow_any, int64_t p,
              const std::string& method, const std::string& format) {
  const Modulus m = resolve_moduli(n_spec, allow_any, false).front();
  if (!is_prime(p)) throw UsageError("--prime must be a prime number");

  std::optional<EulerShape> by_order, by_chars;
  if (method == "order" || method == "both") by_order = shape_via_order(m, p);
  if (method == "chars" || method == "both") {
    by_chars = shape_via_characters(m, p);
  }
  const EulerShape shape = by_order ? *by_order : *by_chars;

  if (format == "json") {
    json payload{{"n", m.value()}, {"prime", p}, {"method", method}};
    if (by_order) {
      payload["order"] = {{"ell", by_order->ell}, {"m", by_order->m}};
    }
    if (by_chars) {
      payload["characters"] = {{"ell", by_chars->ell}, {"m", by_chars->m}};
    }
    if (by_order && by_chars) payload["agree"] = *by_order == *by_chars;
    emit("euler", m.value(), payload);
    return 0;
  }

  std::cout << "ℓ=" << shape.ell << " m=" << shape.m;
  if (by_order && by_chars) {
    std::cout << (*by_order == *by_chars ? " (methods agree)"
                                         : " (METHODS DISAGREE)");
  } else {
    std::cout << (by_order ? " (order method)" : " (character method)");
  }
  std::cout << "\n";
  if (by_order && by_chars && !(*by_order == *by_chars)) return kExitMismatch;
  return 0;
}

// ---------------------------------------------------------------------------
// tables
// ---------------------------------------------------------------------------

int run_tables(const std::string& which, const std::string& n_spec,
               bool allow_any, const std::string& format) {
  if (which != "basic" && which != "ramified") {
    throw UsageError("--which must be 'basic' or 'ramified'");
  }
  const auto moduli = resolve_moduli(n_spec, allow_any, true);

  if (format == "json") {
    json rows = json::array();
    for (const auto& m : moduli) {
      if (which == "basic") {
        json entries = json::array();
        for (const auto& e : basic_index_table(m)) {
          entries.push_back({e.residue, e.ell});
        }
        rows.push_back({{"n", m.value()}, {"entries", entries}});
      } else {
        for (const auto& r : ramified_table(m)) {
          rows.push_back({{"n", m.value()},
                          {"p", r.p},
                          {"r", r.pfree},
                          {"phi_r", r.phi_pfree},
                          {"ell", r.ell},
                          {"m", r.m}});
        }
      }
    }
    emit("tables", moduli.size() == 1 ? std::optional(moduli[0].value())
                                      : std::nullopt,
         json{{"which", which}, {"rows", rows}});
    return 0;
  }

  for (const auto& m : moduli) {
    if (which == "basic") {
      std::cout << "n=" << m.value() << ":";
      for (const auto& e : basic_index_table(m)) {
        std::cout << " (" << e.residue << ")_" << e.ell;
      }
      std::cout << "\n";
    } else {
      for (const auto& r : ramified_table(m)) {
        std::cout << "n=" << m.value() << " p=" << r.p << ": r=" << r.pfree
                  << " phi(r)=" << r.phi_pfree << " ℓ=" << r.ell
                  << " m=" << r.m << "\n";
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

CoefficientSeries series_with_terms(const Modulus& m, int64_t limit,
                                    int64_t terms) {
  if (limit > 0) return coefficients_up_to(m, limit);
  // No explicit limit: grow until `terms` nonzero coefficients past 1 exist.
  int64_t k = 1024;
  while (true) {
    auto series = coefficients_up_to(m, k);
    int64_t nonzero = 0;
    for (int64_t i = 2; i <= k; ++i) {
      if (series.coeffs[i] > 0) ++nonzero;
    }
    if (nonzero >= terms) return series;
    if (k == kMaxSieveLimit) {
      throw capacity_error("series: term budget needs a sieve above the cap");
    }
    k = std::min(k * 8, kMaxSieveLimit);
  }
}

int run_series(const std::string& n_spec, bool allow_any, int64_t limit,
               int64_t terms, const std::string& format) {
  const auto moduli = resolve_moduli(n_spec, allow_any, true);
  const int64_t text_terms = terms > 0 ? terms : 17;

  json rows = json::array();
  for (const auto& m : moduli) {
    const auto series = series_with_terms(m, limit, text_terms);
    if (format == "json") {
      json nonzero = json::array();
      nonzero.push_back({1, 1});
      int64_t emitted = 0;
      for (int64_t k = 2; k <= series.limit; ++k) {
        if (series.coeffs[k] == 0) continue;
        if (terms > 0 && emitted >= terms) break;
        nonzero.push_back({k, series.coeffs[k]});
        ++emitted;
      }
      rows.push_back({{"n", m.value()},
                      {"interpretation", to_string(series.interpretation)},
                      {"limit", series.limit},
                      {"nonzero", nonzero}});
    } else {
      if (moduli.size() > 1) std::cout << "n=" << m.value() << ": ";
      std::cout << format_series(series, text_terms) << "\n";
    }
  }
  if (format == "json") {
    if (moduli.size() == 1) {
      emit("series", moduli[0].value(), rows[0]);
    } else {
      emit("series", std::nullopt, json{{"rows", rows}});
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// residue / rate
// ---------------------------------------------------------------------------

json residue_json(const ResidueReport& report, bool with_factors) {
  json payload{{"n", report.modulus.value()},
               {"alpha", report.alpha},
               {"regulator", report.regulator},
               {"ramified_product", report.ramified_product}};
  if (with_factors) {
    json factors = json::array();
    for (const auto& f : report.factors) {
      factors.push_back({{"label", f.label},
                         {"re", f.value.real()},
                         {"im", f.value.imag()}});
    }
    payload["factors"] = factors;
  }
  return payload;
}

int run_residue(const std::string& n_spec, bool allow_any, int64_t digits,
                bool with_factors, const std::string& format) {
  const auto moduli = resolve_moduli(n_spec, allow_any, true);
  json rows = json::array();
  for (const auto& m : moduli) {
    const auto report = residue(m);
    if (format == "json") {
      rows.push_back(residue_json(report, with_factors));
      continue;
    }
    std::ostringstream out;
    out << std::fixed << std::setprecision(static_cast<int>(digits));
    if (moduli.size() > 1) out << "n=" << m.value() << ": ";
    out << report.alpha;
    std::cout << out.str() << "\n";
    if (with_factors) {
      std::ostringstream extra;
      extra << std::fixed << std::setprecision(static_cast<int>(digits));
      extra << "  regulator = " << report.regulator
            << "\n  ramified product = " << report.ramified_product << "\n";
      for (const auto& f : report.factors) {
        extra << "  L(1,chi" << label_text(f.label) << ") = "
              << f.value.real();
        extra << (f.value.imag() < 0 ? " - " : " + ")
              << std::abs(f.value.imag()) << "i\n";
      }
      std::cout << extra.str();
    }
  }
  if (format == "json") {
    if (moduli.size() == 1) {
      emit("residue", moduli[0].value(), rows[0]);
    } else {
      emit("residue", std::nullopt, json{{"rows", rows}});
    }
  }
  return 0;
}

int run_rate(const std::string& n_spec, bool allow_any, int64_t x,
             const std::string& format) {
  const Modulus m = resolve_moduli(n_spec, allow_any, false).front();
  if (x < 1) throw UsageError("--x must be >= 1");
  const double rate = empirical_rate(m, x);
  const double alpha = residue(m).alpha;
  if (format == "json") {
    emit("rate", m.value(),
         json{{"n", m.value()}, {"x", x}, {"rate", rate}, {"alpha", alpha}});
    return 0;
  }
  std::cout << std::fixed << std::setprecision(6) << "A_n(x)/x = " << rate
            << "  (n=" << m.value() << ", x=" << x << ")\n"
            << "alpha_n  = " << alpha << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// oracle / oracle-sweep
// ---------------------------------------------------------------------------

int run_oracle(const std::string& n_spec, bool allow_any, int64_t k,
               int64_t max_nodes, const std::string& format) {
  const Modulus m = resolve_moduli(n_spec, allow_any, false).front();
  OracleOptions options;
  options.max_nodes = oracle_budget(max_nodes);
  const int64_t count = count_invariant_sublattices(m, k, options);
  if (format == "json") {
    emit("oracle", m.value(),
         json{{"n", m.value()}, {"k", k}, {"count", count}});
  } else {
    std::cout << "a_" << m.value() << "(" << k << ") = " << count << "\n";
  }
  return 0;
}

int run_oracle_sweep(const std::string& n_spec, bool allow_any, int64_t max_k,
                     bool compare, int64_t max_nodes,
                     const std::string& format) {
  const Modulus m = resolve_moduli(n_spec, allow_any, false).front();
  if (max_k < 1) throw UsageError("--max-k must be >= 1");
  OracleOptions options;
  options.max_nodes = oracle_budget(max_nodes);
  const CyclotomicAction action(m);

  json rows = json::array();
  bool all_agree = true;
  std::ostringstream text;
  text << std::setw(6) << "k" << std::setw(10) << "oracle";
  if (compare) text << std::setw(10) << "series" << "  match";
  text << "\n";
  for (int64_t k = 1; k <= max_k; ++k) {
    const int64_t count = count_invariant_sublattices(action, k, options);
    json row{{"k", k}, {"oracle", count}};
    text << std::setw(6) << k << std::setw(10) << count;
    if (compare) {
      const int64_t series = coefficient_at(m, k);
      const bool agree = series == count;
      all_agree = all_agree && agree;
      row["series"] = series;
      row["agree"] = agree;
      text << std::setw(10) << series << "  " << (agree ? "ok" : "MISMATCH");
    }
    text << "\n";
    rows.push_back(std::move(row));
  }
  if (compare) {
    text << (all_agree ? "all rows agree\n" : "MISMATCHES FOUND\n");
  }

  if (format == "json") {
    json payload{{"n", m.value()}, {"max_k", max_k}, {"rows", rows}};
    if (compare) {
      payload["compare"] = true;
      payload["all_agree"] = all_agree;
    }
    emit("oracle-sweep", m.value(), payload);
  } else {
    std::cout << text.str();
  }
  return compare && !all_agree ? kExitMismatch : 0;
}

// ---------------------------------------------------------------------------
// verify-paper
// ---------------------------------------------------------------------------

int run_verify(const std::string& format) {
  const auto results = reference::verify_all();
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;

  if (format == "json") {
    json tables = json::array();
    for (const auto& r : results) {
      tables.push_back(
          {{"table", r.table}, {"pass", r.pass}, {"detail", r.detail}});
    }
    emit("verify-paper", std::nullopt,
         json{{"tables", tables}, {"all_pass", all_pass}});
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.table;
      if (!r.pass) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
    }
    std::cout << (all_pass ? "all reference tables reproduced\n"
                           : "reference table mismatch\n");
  }
  return all_pass ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Bravais colouring counts of the planar cyclotomic modules Z[xi_n]: "
      "Dirichlet characters, Euler factors, zeta coefficients and residues, "
      "with a brute-force sublattice oracle."};
  app.require_subcommand(1);

  std::string n_spec = "all";
  bool allow_any = false;
  std::string format = "text";
  std::string method = "both";
  std::string which = "basic";
  int64_t prime = 0, limit = 0, terms = 0, digits = 6, x = 0, k = 0,
          max_k = 0, max_nodes = 0;
  bool with_factors = false, compare = false;

  auto add_n = [&](CLI::App* cmd, bool fan_out) {
    cmd->add_option("--n", n_spec,
                    fan_out ? "modulus, or 'all' for the 29 class-number-one "
                              "values"
                            : "modulus")
        ->required();
    cmd->add_flag("--allow-any", allow_any,
                  "accept n outside the class-number-one list (ideal counts)");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text", "table"}));
  };

  auto* cmd_characters =
      app.add_subcommand("characters", "primitive Dirichlet character table");
  add_n(cmd_characters, false);
  add_format(cmd_characters);

  auto* cmd_euler =
      app.add_subcommand("euler", "Euler factor shape (ell, m) at a prime");
  add_n(cmd_euler, false);
  cmd_euler->add_option("--prime", prime, "rational prime")->required();
  cmd_euler->add_option("--method", method, "chars|order|both")
      ->check(CLI::IsMember({"chars", "order", "both"}));
  add_format(cmd_euler);

  auto* cmd_tables =
      app.add_subcommand("tables", "basic-index and ramified prime tables");
  cmd_tables->add_option("--which", which, "basic|ramified")->required();
  add_n(cmd_tables, true);
  add_format(cmd_tables);

  auto* cmd_series =
      app.add_subcommand("series", "coefficients of the Dirichlet series");
  add_n(cmd_series, true);
  cmd_series->add_option("--limit", limit, "sieve bound K (<= 1e8)");
  cmd_series->add_option("--terms", terms, "nonzero terms to display");
  add_format(cmd_series);

  auto* cmd_residue =
      app.add_subcommand("residue", "zeta residue alpha_n and regulator");
  add_n(cmd_residue, true);
  cmd_residue->add_option("--digits", digits, "decimal digits (default 6)");
  cmd_residue->add_flag("--with-factors", with_factors,
                        "include every L(1,chi) factor");
  add_format(cmd_residue);

  auto* cmd_rate =
      app.add_subcommand("rate", "empirical rate A_n(x)/x vs alpha_n");
  add_n(cmd_rate, false);
  cmd_rate->add_option("--x", x, "partial sum bound")->required();
  add_format(cmd_rate);

  auto* cmd_oracle =
      app.add_subcommand("oracle", "brute-force invariant sublattice count");
  add_n(cmd_oracle, false);
  cmd_oracle->add_option("--k", k, "index to count")->required();
  cmd_oracle->add_option("--max-nodes", max_nodes,
                         "node budget (or CYCLOZETA_MAX_NODES)");
  add_format(cmd_oracle);

  auto* cmd_sweep = app.add_subcommand(
      "oracle-sweep", "oracle counts for k = 1..K, optionally vs the series");
  add_n(cmd_sweep, false);
  cmd_sweep->add_option("--max-k", max_k, "sweep bound")->required();
  cmd_sweep->add_flag("--compare", compare, "compare with coefficient_at");
  cmd_sweep->add_option("--max-nodes", max_nodes,
                        "node budget (or CYCLOZETA_MAX_NODES)");
  add_format(cmd_sweep);

  auto* cmd_verify = app.add_subcommand(
      "verify-paper", "recompute and check every built-in reference table");
  add_format(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_characters->parsed()) {
      return run_characters(n_spec, allow_any, format);
    }
    if (cmd_euler->parsed()) {
      return run_euler(n_spec, allow_any, prime, method, format);
    }
    if (cmd_tables->parsed()) {
      return run_tables(which, n_spec, allow_any, format);
    }
    if (cmd_series->parsed()) {
      return run_series(n_spec, allow_any, limit, terms, format);
    }
    if (cmd_residue->parsed()) {
      return run_residue(n_spec, allow_any, digits, with_factors, format);
    }
    if (cmd_rate->parsed()) return run_rate(n_spec, allow_any, x, format);
    if (cmd_oracle->parsed()) {
      return run_oracle(n_spec, allow_any, k, max_nodes, format);
    }
    if (cmd_sweep->parsed()) {
      return run_oracle_sweep(n_spec, allow_any, max_k, compare, max_nodes,
                              format);
    }
    if (cmd_verify->parsed()) return run_verify(format);
    throw UsageError("no subcommand selected");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
