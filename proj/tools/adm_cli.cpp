// Command-line front end: Adomian polynomial listings, series solutions,
// comparison tables and plot data.
//
// Exit codes: 0 success, 2 argument or parse error, 3 domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "adm/adm.hpp"

namespace {

constexpr int kExitArgument = 2;
constexpr int kExitDomain = 3;

struct ProblemFlags {
  std::optional<std::string> preset;
  std::optional<std::string> c;
  std::optional<std::string> b;
  std::optional<unsigned> eta;
  std::optional<std::string> u0;
  std::optional<std::string> forcing;

  void attach(CLI::App& cmd) {
    cmd.add_option("--preset", preset, "Built-in problem")->check(CLI::IsMember({"problem1", "problem2"}));
    cmd.add_option("--c", c, "Linear coefficient (p/q or decimal)");
    cmd.add_option("--b", b, "Coefficient of u^eta (p/q or decimal)");
    cmd.add_option("--eta", eta, "Exponent of the power term");
    cmd.add_option("--u0", u0, "Initial value u(0)");
    cmd.add_option("--forcing", forcing, "Forcing polynomial coefficients c0,c1,...");
  }

  bool any_explicit() const { return c || b || eta || u0 || forcing; }

  void fill(adm::RunConfig& cfg) const {
    cfg.preset = preset;
    if (any_explicit()) {
      if (!c || !b || !eta || !u0) throw adm::argument_error("explicit problems need --c, --b, --eta and --u0");
      adm::ODEProblem p;
      p.c = adm::Rational::parse(*c);
      p.b = adm::Rational::parse(*b);
      p.eta = *eta;
      p.u0 = adm::Rational::parse(*u0);
      if (forcing) p.forcing = adm::parse_coefficient_list(*forcing);
      p.name = "custom";
      cfg.explicit_problem = p;
    }
    cfg.validate();
  }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw adm::argument_error("cannot open output file '" + path + "'");
  out << text;
}

nlohmann::ordered_json coefficient_array(const adm::TimePolynomial& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

std::string format_solution(const adm::SeriesSolution& sol, const std::string& format) {
  const adm::TimePolynomial sum = adm::partial_sum(sol, sol.order());
  if (format == "json") {
    nlohmann::ordered_json j;
    const auto& p = sol.problem;
    j["problem"] = p.name;
    j["c"] = p.c.str();
    j["b"] = p.b.str();
    j["eta"] = p.eta;
    j["u0"] = p.u0.str();
    j["forcing"] = coefficient_array(p.forcing);
    j["order"] = sol.order();
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& c : sol.components) comps.push_back(coefficient_array(c));
    j["components"] = std::move(comps);
    j["partial_sum"] = coefficient_array(sum);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (std::size_t n = 0; n <= sol.order(); ++n) out << "u" << n << " = " << sol.components[n] << "\n";
  out << "sum = " << sum << "\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adomian decomposition for u' = c*u + b*u^eta + f(t)"};
  app.require_subcommand(1);

  // polys
  unsigned polys_eta = 0;
  std::size_t polys_max = 0;
  std::string polys_format = "plain";
  std::string polys_out;
  auto* polys = app.add_subcommand("polys", "List Adomian polynomials A_0..A_max for u^eta");
  polys->add_option("--eta", polys_eta, "Exponent eta")->required();
  polys->add_option("--max-order", polys_max, "Highest order n")->required();
  polys->add_option("--format", polys_format)->check(CLI::IsMember({"plain", "latex", "json"}));
  polys->add_option("--out", polys_out, "Output file");

  // solve
  ProblemFlags solve_flags;
  std::size_t solve_order = adm::kDefaultOrder;
  std::string solve_format = "plain";
  auto* solve = app.add_subcommand("solve", "Print ADM components u_0..u_N and their sum");
  solve_flags.attach(*solve);
  solve->add_option("--order", solve_order, "Truncation order N");
  solve->add_option("--format", solve_format)->check(CLI::IsMember({"plain", "json"}));

  // table
  ProblemFlags table_flags;
  std::size_t table_order = adm::kDefaultOrder;
  std::optional<std::string> table_t;
  int table_digits = adm::kDefaultDigits;
  std::string table_format = "csv";
  std::string table_out;
  auto* table = app.add_subcommand("table", "Exact versus ADM comparison table");
  table_flags.attach(*table);
  table->add_option("--order", table_order, "Truncation order N");
  table->add_option("--t", table_t, "Comma-separated time points");
  table->add_option("--digits", table_digits, "Significant digits");
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "markdown", "json"}));
  table->add_option("--out", table_out, "Output file");

  // figure
  ProblemFlags figure_flags;
  std::size_t figure_order = adm::kDefaultOrder;
  std::string t_min = "-0.14";
  std::string t_max = "0.14";
  std::size_t samples = 29;
  int figure_digits = adm::kDefaultDigits;
  std::string figure_out;
  auto* figure = app.add_subcommand("figure", "Plot data (t, exact, adm) as CSV");
  figure_flags.attach(*figure);
  figure->add_option("--order", figure_order, "Truncation order N");
  figure->add_option("--t-min", t_min);
  figure->add_option("--t-max", t_max);
  figure->add_option("--samples", samples);
  figure->add_option("--digits", figure_digits, "Significant digits");
  figure->add_option("--out", figure_out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgument;
  }

  try {
    if (polys->parsed()) {
      const auto fmt = polys_format == "latex"  ? adm::PolyFormat::latex
                       : polys_format == "json" ? adm::PolyFormat::json
                                                : adm::PolyFormat::plain;
      emit(adm::list_polynomials(polys_eta, polys_max, fmt) + "\n", polys_out);
    } else if (solve->parsed()) {
      adm::RunConfig cfg;
      solve_flags.fill(cfg);
      emit(format_solution(adm::solve(cfg.problem(), solve_order), solve_format), "");
    } else if (table->parsed()) {
      adm::RunConfig cfg;
      table_flags.fill(cfg);
      cfg.order = table_order;
      cfg.digits = table_digits;
      if (table_t) cfg.t_values = adm::parse_rational_list(*table_t);
      cfg.validate();
      const auto fmt = table_format == "markdown" ? adm::TableFormat::markdown
                       : table_format == "json"   ? adm::TableFormat::json
                                                  : adm::TableFormat::csv;
      const auto tab = adm::build_comparison_table(cfg.problem(), cfg.order, cfg.t_values, cfg.digits);
      emit(adm::export_table(tab, fmt), table_out);
    } else if (figure->parsed()) {
      adm::RunConfig cfg;
      figure_flags.fill(cfg);
      cfg.digits = figure_digits;
      cfg.validate();
      emit(adm::figure_data(cfg.problem(), figure_order, adm::Rational::parse(t_min), adm::Rational::parse(t_max),
                            samples, cfg.digits),
           figure_out);
    }
  } catch (const adm::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const adm::argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgument;
  }
  return 0;
}
