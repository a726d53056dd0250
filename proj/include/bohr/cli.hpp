#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bohr/errors.hpp"
#include "bohr/extremal.hpp"
#include "bohr/oracle.hpp"
#include "bohr/psi_catalog.hpp"
#include "bohr/radius.hpp"
#include "bohr/report.hpp"

namespace bohr::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kSolverFailure = 3,
  kVerificationFailure = 4,
};

struct CliConfig {
  std::string subcommand;
  std::string psi_id;
  std::string family = "starlike";
  int m = 1;
  int N = 1;
  std::string mode = "bohr-rogosinski";
  int order = kDefaultOrder;
  double tol = 1e-10;
  std::string format = "table";
  std::uint64_t seed = 7;
  int trials = 1000;
  // sweep
  std::string n_range;
  std::string m_range;
  // verify
  std::string lemma = "tail";
  bool weighted = false;
  double tau = 0.8;
  std::vector<int> Ns;
};

namespace detail {

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Family parse_family(const std::string& s) {
  if (s == "starlike") return Family::Starlike;
  if (s == "convex") return Family::Convex;
  throw usage_error("unknown family '" + s + "' (expected starlike or convex)");
}

inline Mode parse_mode(const std::string& s) {
  if (s == "bohr-rogosinski") return Mode::BohrRogosinski;
  if (s == "bohr-limit") return Mode::BohrLimit;
  throw usage_error("unknown mode '" + s + "' (expected bohr-rogosinski or bohr-limit)");
}

// "a:b" -> [a, b]; a single value "a" is the range [a, a].
inline std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    std::size_t used = 0;
    const int first = std::stoi(s.substr(0, colon), &used);
    if (used != (colon == std::string::npos ? s.size() : colon)) throw usage_error("");
    int last = first;
    if (colon != std::string::npos) {
      const std::string tail = s.substr(colon + 1);
      last = std::stoi(tail, &used);
      if (used != tail.size()) throw usage_error("");
    }
    if (first < 1 || last < first) throw usage_error("");
    return {first, last};
  } catch (const std::exception&) {
    throw usage_error("invalid or empty range '" + s + "' (expected first:last with 1 <= first <= last)");
  }
}

inline RadiusProblem make_problem(const CliConfig& cfg) {
  RadiusProblem p{parse_psi(cfg.psi_id)};
  p.family = parse_family(cfg.family);
  p.m = cfg.m;
  p.N = cfg.N;
  p.mode = parse_mode(cfg.mode);
  p.order = cfg.order;
  p.tol = cfg.tol;
  p.validate();
  return p;
}

inline void check_format(const CliConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw usage_error("format '" + cfg.format + "' is not supported by " + cfg.subcommand);
}

inline void write_results(const CliConfig& cfg, const std::vector<RadiusResult>& rows,
                          const nlohmann::json& extra, std::ostream& out) {
  if (cfg.format == "csv") {
    out << kRadiusCsvHeader << '\n';
    for (const auto& r : rows) out << radius_csv_row(r) << '\n';
  } else if (cfg.format == "json") {
    nlohmann::json j;
    if (cfg.subcommand == "radius") {
      j = radius_json(rows.front());
    } else {
      j = extra;
      j["rows"] = nlohmann::json::array();
      for (const auto& r : rows) j["rows"].push_back(radius_json(r));
    }
    out << j.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> table{radius_table_header()};
    for (const auto& r : rows) table.push_back(radius_table_row(r));
    write_table(out, table);
  }
}

}  // namespace detail

inline int run_radius(const CliConfig& cfg, std::ostream& out) {
  detail::check_format(cfg, {"table", "csv", "json"});
  const RadiusProblem problem = detail::make_problem(cfg);
  detail::write_results(cfg, {solve(problem)}, {}, out);
  return kOk;
}

inline int run_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::check_format(cfg, {"table", "csv", "json"});
  if (cfg.n_range.empty() == cfg.m_range.empty()) {
    throw detail::usage_error("sweep needs exactly one of --N-range or --m-range");
  }
  const SweepAxis axis = cfg.n_range.empty() ? SweepAxis::M : SweepAxis::N;
  const auto [first, last] = detail::parse_range(axis == SweepAxis::N ? cfg.n_range : cfg.m_range);
  RadiusProblem base = detail::make_problem(cfg);
  if (axis == SweepAxis::N) base.N = first;
  if (axis == SweepAxis::N && last > base.order) {
    throw detail::usage_error("N range exceeds the truncation order");
  }
  const SweepTable table = sweep(base, axis, first, last);
  if (!table.nondecreasing) err << "note: r0 is not nondecreasing along the sweep\n";
  detail::write_results(cfg, table.rows,
                        {{"axis", axis == SweepAxis::N ? "N" : "m"},
                         {"nondecreasing", table.nondecreasing}},
                        out);
  return kOk;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::check_format(cfg, {"json", "table"});
  if (cfg.trials < 1) throw detail::usage_error("--trials must be >= 1");
  const std::string lemma = cfg.weighted ? "weighted" : cfg.lemma;
  std::vector<PsiSpec> psis =
      cfg.psi_id.empty() ? default_catalog() : std::vector<PsiSpec>{parse_psi(cfg.psi_id)};

  nlohmann::json j;
  bool passed = true;
  std::string worst;
  if (lemma == "tail") {
    TailRunConfig run;
    run.seed = cfg.seed;
    run.trials = cfg.trials;
    run.order = cfg.order;
    run.family = detail::parse_family(cfg.family);
    run.psis = psis;
    if (!cfg.Ns.empty()) run.Ns = cfg.Ns;
    const auto report = run_tail_inequality(run);
    j = report;
    passed = report.passed();
    if (!passed) worst = nlohmann::json(report.counterexamples.front()).dump();
  } else if (lemma == "weighted") {
    WeightedRunConfig run;
    run.seed = cfg.seed;
    run.trials = cfg.trials;
    run.order = cfg.order;
    run.tau = cfg.tau;
    run.psis = psis;
    if (!cfg.Ns.empty()) run.Ns = cfg.Ns;
    const auto report = run_weighted(run);
    j = report;
    passed = report.passed();
    if (!passed) worst = nlohmann::json(report.counterexamples.front()).dump();
  } else if (lemma == "br") {
    BrRunConfig run;
    run.seed = cfg.seed;
    run.trials = cfg.trials;
    run.order = cfg.order;
    run.family = detail::parse_family(cfg.family);
    run.m = cfg.m;
    run.N = cfg.N;
    run.mode = detail::parse_mode(cfg.mode);
    run.psis = psis;
    const auto report = run_br_inequality(run);
    j = report;
    passed = report.passed();
    if (!passed) worst = nlohmann::json(report.counterexamples.front()).dump();
  } else if (lemma == "bohr-operator") {
    AxiomRunConfig run;
    run.seed = cfg.seed;
    run.trials = cfg.trials;
    const auto report = run_bohr_operator_axioms(run);
    const int violations = report.gated_violations();
    double worst_margin = std::numeric_limits<double>::infinity();
    for (const auto& t : report.tallies) {
      if (t.gated) worst_margin = std::min(worst_margin, t.worst_margin);
    }
    const Margin cx = submultiplicativity_counterexample(1.0 / 3.0);
    j = {{"seed", report.seed},
         {"trials", report.trials},
         {"violations", violations},
         {"worst_margin", worst_margin},
         {"config", {{"check", "bohr-operator"}, {"N", run.Ns}, {"r", run.radii}, {"order", run.order}}},
         {"axioms", report.tallies},
         {"documented",
          {{{"axiom", "iv"}, {"N", 2}, {"f", "z"}, {"g", "z"}, {"r", 1.0 / 3.0},
            {"M(fg)", cx.lhs}, {"M(f)M(g)", cx.rhs}},
           {{"axiom", "v"}, {"N", 1}, {"M(1)", bohr_operator(TruncatedSeries::constant(1.0, run.order), 1, 0.5)}}}}};
    passed = violations == 0;
    if (!passed) {
      for (const auto& t : report.tallies) {
        if (t.gated && t.violations > 0) {
          worst = nlohmann::json(t).dump();
          break;
        }
      }
    }
  } else {
    throw detail::usage_error("unknown lemma '" + lemma + "' (expected tail, weighted, br or bohr-operator)");
  }

  if (cfg.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    write_table(out, {{"check", "seed", "trials", "violations", "worst_margin"},
                      {lemma, std::to_string(cfg.seed), std::to_string(cfg.trials),
                       std::to_string(j["violations"].get<int>()),
                       format12(j["worst_margin"].get<double>())}});
  }
  if (!passed) {
    err << "verification failed; first counterexample: " << worst << '\n';
    return kVerificationFailure;
  }
  return kOk;
}

inline int run_catalog(const CliConfig& cfg, std::ostream& out) {
  detail::check_format(cfg, {"table", "csv", "json"});
  std::vector<std::vector<std::string>> rows{
      {"psi", "c1", "koebe_starlike", "koebe_convex", "koebe_closed", "clamp"}};
  nlohmann::json j = nlohmann::json::array();
  for (const auto& psi : default_catalog()) {
    const double ks = koebe_radius(psi, Family::Starlike);
    const double kc = koebe_radius(psi, Family::Convex);
    const bool closed = psi.koebe_closed().has_value();
    const double c1 = psi.coefficients(2)[1];
    rows.push_back({psi.name(), format12(c1), format12(ks), format12(kc), closed ? "yes" : "no",
                    psi.exact_coefficient_bounds() ? "no" : "1/3"});
    j.push_back({{"psi", psi.name()},
                 {"c1", round12(c1)},
                 {"koebe_starlike", round12(ks)},
                 {"koebe_convex", round12(kc)},
                 {"koebe_closed", closed},
                 {"clamp", !psi.exact_coefficient_bounds()}});
  }
  if (cfg.format == "json") {
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    for (const auto& row : rows) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "," : "") + row[i];
      out << line << '\n';
    }
  } else {
    write_table(out, rows);
  }
  return kOk;
}

/// Runs one subcommand; returns the process exit code.
inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.subcommand == "radius") return run_radius(cfg, out);
    if (cfg.subcommand == "sweep") return run_sweep(cfg, out, err);
    if (cfg.subcommand == "verify") return run_verify(cfg, out, err);
    if (cfg.subcommand == "catalog") return run_catalog(cfg, out);
    err << "error: unknown subcommand '" << cfg.subcommand << "'\n";
    return kUsage;
  } catch (const detail::usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const config_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const inconsistent_problem_error& e) {
    err << "solver error: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const numeric_error& e) {
    err << "solver error: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << '\n';
    return kSolverFailure;
  }
}

/// Parses argv-style arguments (without the program name) and runs.
inline int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Bohr and Bohr-Rogosinski radii for Ma-Minda starlike and convex classes", "bohr"};
  app.require_subcommand(1);

  auto add_problem_options = [&](CLI::App* sub, bool psi_required) {
    auto* psi = sub->add_option("--psi", cfg.psi_id,
                                "psi id: janowski:D=..,E=.. | cardioid | zexpz | booth | sine | "
                                "alpha:<a> | classical-starlike | classical-convex");
    if (psi_required) psi->required();
    sub->add_option("--family", cfg.family, "starlike or convex")->capture_default_str();
    sub->add_option("--m", cfg.m, "power in |g(z^m)|")->capture_default_str();
    sub->add_option("--N", cfg.N, "first index of the coefficient tail")->capture_default_str();
    sub->add_option("--mode", cfg.mode, "bohr-rogosinski or bohr-limit")->capture_default_str();
    sub->add_option("--order", cfg.order, "series truncation order")->capture_default_str();
    sub->add_option("--tol", cfg.tol, "root bracket width")->capture_default_str();
  };

  auto* radius = app.add_subcommand("radius", "solve one radius equation");
  add_problem_options(radius, true);
  radius->add_option("--format", cfg.format, "table, csv or json")->capture_default_str();

  auto* sweep_cmd = app.add_subcommand("sweep", "solve over a range of N or m");
  add_problem_options(sweep_cmd, true);
  sweep_cmd->add_option("--N-range", cfg.n_range, "first:last");
  sweep_cmd->add_option("--m-range", cfg.m_range, "first:last");
  sweep_cmd->add_option("--format", cfg.format, "table, csv or json")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Monte-Carlo verification of the coefficient inequalities");
  add_problem_options(verify, false);
  verify->add_option("--lemma", cfg.lemma, "tail, weighted, br or bohr-operator")->capture_default_str();
  verify->add_flag("--weighted", cfg.weighted, "shorthand for --lemma weighted");
  verify->add_option("--tau", cfg.tau, "weight bound for the weighted check")->capture_default_str();
  verify->add_option("--trials", cfg.trials, "number of samples")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  verify->add_option("--tail-N", cfg.Ns, "tail start indices for tail/weighted checks");
  verify->add_option("--format", cfg.format, "json or table");

  auto* catalog = app.add_subcommand("catalog", "list catalog entries");
  catalog->add_option("--format", cfg.format, "table, csv or json")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help is reported as a ParseError with exit code 0.
    if (e.get_exit_code() == 0) {
      for (auto* sub : app.get_subcommands()) out << sub->help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.subcommand == "verify" && verify->count("--format") == 0) cfg.format = "json";
  return run(cfg, out, err);
}

}  // namespace bohr::cli
