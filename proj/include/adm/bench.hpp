#pragma once

// Comparison tables, plot data and polynomial listings built on the solver
// and the closed-form reference.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "adm/adomian.hpp"
#include "adm/error.hpp"
#include "adm/exact_reference.hpp"
#include "adm/numeric_kernel.hpp"
#include "adm/solver.hpp"

namespace adm {

inline constexpr std::size_t kDefaultOrder = 11;
inline constexpr int kGuardDigits = 10;

/// {-0.14, ..., -0.10, 0, 0.10, ..., 0.14}.
inline std::vector<Rational> default_time_grid() {
  std::vector<Rational> grid;
  for (long long k = -14; k <= -10; ++k) grid.emplace_back(k, 100);
  grid.emplace_back(0);
  for (long long k = 10; k <= 14; ++k) grid.emplace_back(k, 100);
  return grid;
}

inline ODEProblem preset_problem(std::string_view name) {
  if (name == "problem1") return problem1();
  if (name == "problem2") return problem2();
  throw argument_error("unknown preset '" + std::string(name) + "' (expected problem1 or problem2)");
}

struct ComparisonRow {
  HPReal t;
  HPReal exact;
  HPReal adm;
  HPReal abs_error;
};

struct ComparisonTable {
  std::string problem;
  std::size_t order = 0;
  int digits = kDefaultDigits;
  std::vector<ComparisonRow> rows;  ///< ascending t
};

namespace detail {

inline void check_before_blow_up(const ClosedFormSolution& cf, const Rational& t, int digits) {
  const auto tb = blow_up_time(cf, digits);
  if (tb && HPReal(t, digits) >= *tb) {
    const std::string ts = HPReal(t, digits).to_string(12);
    const std::string tbs = tb->to_string(12);
    throw singularity_error(ts, tbs, "t = " + ts + " is at or past the blow-up time t* = " + tbs);
  }
}

}  // namespace detail

/// One row per t: closed form against the order-N partial sum.
inline ComparisonTable build_comparison_table(const ODEProblem& problem, std::size_t order,
                                              std::vector<Rational> t_values, int digits) {
  require_digits(digits);
  const ClosedFormSolution cf = closed_form(problem);
  std::sort(t_values.begin(), t_values.end());
  for (const auto& t : t_values) detail::check_before_blow_up(cf, t, digits);

  const SeriesSolution sol = solve(problem, order);
  const TimePolynomial sum = partial_sum(sol, order);
  ComparisonTable table{problem.name, order, digits, {}};
  // guard digits keep the difference accurate to the output precision
  const int work = digits + kGuardDigits;
  for (const auto& tq : t_values) {
    const HPReal t(tq, work);
    const HPReal exact = eval_closed_form(cf, t, work);
    const HPReal approx = poly_eval_hp(sum, t, work);
    table.rows.push_back({t.with_digits(digits), exact.with_digits(digits), approx.with_digits(digits),
                          abs(exact - approx).with_digits(digits)});
  }
  return table;
}

enum class TableFormat { csv, markdown, json };

inline nlohmann::ordered_json to_json(const ComparisonTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"t", r.t.to_string(table.digits)},
                    {"exact", r.exact.to_string(table.digits)},
                    {"adm", r.adm.to_string(table.digits)},
                    {"abs_error", r.abs_error.to_string(table.digits)}});
  nlohmann::ordered_json out;
  out["problem"] = table.problem;
  out["order"] = table.order;
  out["digits"] = table.digits;
  out["rows"] = std::move(rows);
  return out;
}

/// Parses the json export back; values are rounded to the table's digits.
inline ComparisonTable table_from_json(const nlohmann::ordered_json& j) {
  ComparisonTable table;
  table.problem = j.at("problem").get<std::string>();
  table.order = j.at("order").get<std::size_t>();
  table.digits = j.at("digits").get<int>();
  require_digits(table.digits);
  const auto num = [&](const nlohmann::ordered_json& row, const char* key) {
    return HPReal::parse(row.at(key).get<std::string>(), table.digits);
  };
  for (const auto& row : j.at("rows"))
    table.rows.push_back({num(row, "t"), num(row, "exact"), num(row, "adm"), num(row, "abs_error")});
  return table;
}

/// Columns t, exact, adm, abs_error; every number has `digits` significant
/// figures. Each line ends in "\n".
inline std::string export_table(const ComparisonTable& table, TableFormat format) {
  const int d = table.digits;
  std::string out;
  switch (format) {
    case TableFormat::csv:
      out = "t,exact,adm,abs_error\n";
      for (const auto& r : table.rows)
        out += r.t.to_string(d) + "," + r.exact.to_string(d) + "," + r.adm.to_string(d) + "," +
               r.abs_error.to_string(d) + "\n";
      break;
    case TableFormat::markdown:
      out = "| t | exact | adm | abs_error |\n|---|---|---|---|\n";
      for (const auto& r : table.rows)
        out += "| " + r.t.to_string(d) + " | " + r.exact.to_string(d) + " | " + r.adm.to_string(d) + " | " +
               r.abs_error.to_string(d) + " |\n";
      break;
    case TableFormat::json:
      out = to_json(table).dump(2) + "\n";
      break;
  }
  return out;
}

/// Plot data: `samples` equally spaced points on [t_min, t_max], columns
/// t, exact, adm.
inline std::string figure_data(const ODEProblem& problem, std::size_t order, const Rational& t_min,
                               const Rational& t_max, std::size_t samples, int digits) {
  require_digits(digits);
  if (samples < 2) throw argument_error("figure needs at least 2 samples");
  if (!(t_min < t_max)) throw argument_error("figure needs t-min < t-max");
  const ClosedFormSolution cf = closed_form(problem);
  detail::check_before_blow_up(cf, t_max, digits);

  const TimePolynomial sum = partial_sum(solve(problem, order), order);
  const Rational step = (t_max - t_min) / Rational(static_cast<long long>(samples - 1));
  std::string out = "t,exact,adm\n";
  for (std::size_t i = 0; i < samples; ++i) {
    const HPReal t(t_min + Rational(static_cast<long long>(i)) * step, digits);
    out += t.to_string(digits) + "," + eval_closed_form(cf, t, digits).to_string(digits) + "," +
           poly_eval_hp(sum, t, digits).to_string(digits) + "\n";
  }
  return out;
}

/// A_0 ... A_max_order, one "A<n> = ..." line each (plain/latex, no trailing
/// newline) or a json array of polynomial objects.
inline std::string list_polynomials(unsigned eta, std::size_t max_order, PolyFormat format) {
  if (format == PolyFormat::json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n <= max_order; ++n) arr.push_back(to_json(generate_adomian(eta, n)));
    return arr.dump();
  }
  std::string out;
  for (std::size_t n = 0; n <= max_order; ++n) {
    if (n > 0) out += "\n";
    out += format == PolyFormat::plain ? "A" + std::to_string(n) : "A_{" + std::to_string(n) + "}";
    out += " = " + render(generate_adomian(eta, n), format);
  }
  return out;
}

/// Parsed command-line run: either a preset or explicit coefficients.
struct RunConfig {
  std::optional<std::string> preset;
  std::optional<ODEProblem> explicit_problem;
  std::size_t order = kDefaultOrder;
  std::vector<Rational> t_values = default_time_grid();
  int digits = kDefaultDigits;
  std::string format;
  std::string out_path;

  void validate() const {
    if (preset.has_value() == explicit_problem.has_value())
      throw argument_error("give exactly one of --preset or explicit --c/--b/--eta/--u0");
    require_digits(digits);
  }

  ODEProblem problem() const {
    validate();
    return preset ? preset_problem(*preset) : *explicit_problem;
  }
};

/// Comma-separated rationals or decimals, e.g. "-0.1,0,1/3".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// "c0,c1,..." as the polynomial c0 + c1*t + ...; empty text is zero.
inline TimePolynomial parse_coefficient_list(std::string_view text) {
  if (text.empty()) return {};
  return TimePolynomial(parse_rational_list(text));
}

}  // namespace adm
