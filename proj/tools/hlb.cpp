// hlb: lower bounds for real polynomial Hardy-Littlewood constants.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hlb/bounds.hpp"
#include "hlb/error.hpp"
#include "hlb/kernels.hpp"
#include "hlb/report.hpp"

namespace {

using namespace hlb;

struct Common {
  std::string format = "md";
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid;
  std::optional<double> tol;
};

struct Args {
  std::string family;
  std::string params;
  std::string p;
  std::string mode = "grid-simplex";
  std::string lambda;
  int power = 0;
  std::string table;
};

double parse_p(const std::string& text) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw DomainError("--p needs a number or 'inf', got '" + text + "'");
  }
  return v;
}

// Defaults to the critical exponent 2m.
double p_or_default(const std::string& text, FamilyId family) {
  return text.empty() ? 2.0 * family_spec(family).degree : parse_p(text);
}

OptConfig effective_config(const Common& c) {
  OptConfig cfg;
  if (!c.config_path.empty()) apply_config_file(cfg, c.config_path);
  if (c.seed) cfg.rng_seed = *c.seed;
  if (c.grid) cfg.coarse_grid = *c.grid;
  if (c.tol) cfg.local_tol = *c.tol;
  cfg.validate();
  return cfg;
}

Document document(const std::string& command, const OptConfig& cfg, std::vector<std::string> columns) {
  Document doc;
  doc.command = command;
  doc.config = config_entries(cfg);
  doc.columns = std::move(columns);
  return doc;
}

Document cmd_norm(const Args& a, const OptConfig& cfg, const std::string& command) {
  const FamilyId family = parse_family(a.family);
  const std::vector<double> params = parse_params(a.params);
  const double p = p_or_default(a.p, family);
  const NormResult r = sup_norm(build_family(family, params), p, cfg);
  Document doc = document(command, cfg,
                          {"family", "params", "p", "value", "argmax_x", "argmax_y", "est_error", "grid_size",
                           "refinement_iters"});
  doc.rows.push_back({std::string(family_name(family)), format_params(params), p, r.value, r.argmax.x, r.argmax.y,
                      r.est_error, static_cast<long long>(r.grid_size), static_cast<long long>(r.refinement_iters)});
  return doc;
}

std::vector<std::string> bound_columns() {
  return {"family", "params", "m", "p", "q", "coeff_norm", "sup_norm", "lower_bound", "per_degree_root",
          "argmax_x", "argmax_y", "est_error"};
}

std::vector<Cell> bound_cells(const BoundReport& r) {
  return {r.family, format_params(r.params), static_cast<long long>(r.m), r.p, r.q, r.coeff_norm, r.sup_norm,
          r.lower_bound, r.per_degree_root, r.argmax.x, r.argmax.y, r.est_error};
}

Document cmd_bound(const Args& a, const OptConfig& cfg, const std::string& command) {
  const FamilyId family = parse_family(a.family);
  const std::vector<double> params = parse_params(a.params);
  const BoundReport r = lower_bound(family, params, p_or_default(a.p, family), cfg);
  Document doc = document(command, cfg, bound_columns());
  doc.rows.push_back(bound_cells(r));
  return doc;
}

Document cmd_optimize(const Args& a, const OptConfig& cfg, const std::string& command) {
  const FamilyId family = parse_family(a.family);
  const OptimizeResult r = optimize_parameters(family, p_or_default(a.p, family), cfg, parse_search_mode(a.mode));
  std::vector<std::string> columns = bound_columns();
  columns.insert(columns.begin() + 2, {"reference_params", "fixed_index", "mode", "evaluations"});
  Document doc = document(command, cfg, columns);
  std::vector<Cell> cells = bound_cells(r.report);
  cells.insert(cells.begin() + 2, {format_params(r.reference_params), static_cast<long long>(r.fixed_index),
                                   std::string(search_mode_name(r.mode)), static_cast<long long>(r.evaluations)});
  doc.rows.push_back(std::move(cells));
  return doc;
}

Document cmd_sweep(const Args& a, const OptConfig& cfg, const std::string& command) {
  const FamilyId family = parse_family(a.family);
  const auto first = a.lambda.find(':');
  const auto second = first == std::string::npos ? std::string::npos : a.lambda.find(':', first + 1);
  if (second == std::string::npos) throw DomainError("--lambda needs lo:hi:step");
  const double lo = parse_p(a.lambda.substr(0, first));
  const double hi = parse_p(a.lambda.substr(first + 1, second - first - 1));
  const double step = parse_p(a.lambda.substr(second + 1));
  const auto series = parameter_sweep(family, p_or_default(a.p, family), lo, hi, step, cfg);
  Document doc = document(command, cfg, {"lambda", "quotient"});
  for (const SweepPoint& s : series) doc.rows.push_back({s.lambda, s.quotient});
  return doc;
}

Document cmd_hyper(const Args& a, const OptConfig& cfg, const std::string& command) {
  const FamilyId family = parse_family(a.family);
  const std::vector<double> params = parse_params(a.params);
  const HyperReport r = hyper_estimate(family, params, a.power, cfg);
  Document doc = document(command, cfg,
                          {"family", "params", "power", "M", "p", "coeff_norm", "base_sup", "log_lower_bound",
                           "lower_bound", "h_estimate_finite_m"});
  doc.rows.push_back({r.base_family, format_params(r.base_params), static_cast<long long>(r.power),
                      static_cast<long long>(r.M), r.p, r.coeff_norm, r.base_sup, r.log_lower_bound, r.lower_bound,
                      r.h_estimate});
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds for real polynomial Hardy-Littlewood constants on l_p^2"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hlb::kVersion));

  Common common;
  Args args;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format: md, csv, json")->capture_default_str();
    sub->add_option("--config", common.config_path, "Flat key = value config file");
    sub->add_option("--seed", common.seed, "RNG seed (overrides config)");
    sub->add_option("--grid", common.grid, "Coarse sphere grid size, odd (overrides config)");
    sub->add_option("--tol", common.tol, "Refinement abscissa tolerance (overrides config)");
  };
  auto add_family = [&](CLI::App* sub, bool with_params) {
    sub->add_option("--family", args.family, "P2, P3, P5, P6, P7, P8 or P10")->required();
    if (with_params) sub->add_option("--params", args.params, "Comma separated; decimals or n/d")->required();
  };

  auto* norm = app.add_subcommand("norm", "Sup-norm on the unit ball of l_p^2");
  add_family(norm, true);
  norm->add_option("--p", args.p, "p >= 1 or inf (default 2m)");
  add_common(norm);

  auto* bound = app.add_subcommand("bound", "Lower bound |P|_q / ||P||");
  add_family(bound, true);
  bound->add_option("--p", args.p, "p > m or inf (default 2m)");
  add_common(bound);

  auto* optimize = app.add_subcommand("optimize", "Search the family parameters for the largest quotient");
  add_family(optimize, false);
  optimize->add_option("--p", args.p, "p > m or inf (default 2m)");
  optimize->add_option("--mode", args.mode, "grid-simplex or coordinate-sweep")->capture_default_str();
  add_common(optimize);

  auto* sweep = app.add_subcommand("sweep", "Quotient of build(1, lambda) over a lambda range");
  add_family(sweep, false);
  sweep->add_option("--p", args.p, "p > m or inf (default 2m)");
  sweep->add_option("--lambda", args.lambda, "lo:hi:step")->required();
  add_common(sweep);

  auto* hyper = app.add_subcommand("hyper", "Finite-m estimate from (P)^k on l_{2M}^2, M = m k");
  add_family(hyper, true);
  hyper->add_option("--power", args.power, "k >= 1")->required();
  add_common(hyper);

  auto* reproduce = app.add_subcommand("reproduce", "Recompute a golden table and compare");
  reproduce->add_option("--table", args.table, "s2, s3, s4a, s4b or s4c")->required();
  add_common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::string command = "hlb";
  for (int i = 1; i < argc; ++i) command += std::string(" ") + argv[i];

  try {
    configure_threads_from_env();
    const Format format = parse_format(common.format);
    const OptConfig cfg = effective_config(common);

    if (reproduce->parsed()) {
      const auto rows = reproduce_table(parse_table_id(args.table), cfg);
      std::cout << render(comparison_document(rows, command, cfg), format);
      if (!all_pass(rows)) {
        for (const Comparison& c : rows) {
          if (c.status == Status::Fail) {
            std::cerr << "hlb: fail: " << c.family << " " << c.quantity << " computed " << format_number(c.computed)
                      << " expected " << format_number(c.expected) << " delta " << format_number(c.delta)
                      << " > " << format_number(c.tolerance) << "\n";
          }
        }
        return 1;
      }
      return 0;
    }

    Document doc;
    if (norm->parsed()) {
      doc = cmd_norm(args, cfg, command);
    } else if (bound->parsed()) {
      doc = cmd_bound(args, cfg, command);
    } else if (optimize->parsed()) {
      doc = cmd_optimize(args, cfg, command);
    } else if (sweep->parsed()) {
      doc = cmd_sweep(args, cfg, command);
    } else {
      doc = cmd_hyper(args, cfg, command);
    }
    std::cout << render(doc, format);
    return 0;
  } catch (const OverflowError& e) {
    std::cerr << "hlb: overflow at power " << e.power() << ": " << e.what() << "\n";
  } catch (const ConvergenceError& e) {
    std::cerr << "hlb: " << e.what() << " (best value " << format_number(e.best_value()) << ")\n";
  } catch (const std::exception& e) {
    std::cerr << "hlb: " << e.what() << "\n";
  }
  return 2;
}
