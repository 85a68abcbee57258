#include "hlb/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hlb/bounds.hpp"
#include "hlb/error.hpp"
#include "json.hpp"

namespace hlb {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_integer(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError("config key '" + std::string(key) + "' needs an integer, got '" + std::string(value) + "'");
  }
  return out;
}

double parse_real(std::string_view key, std::string_view value) {
  const std::string s(value);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw DomainError("config key '" + std::string(key) + "' needs a finite number, got '" + s + "'");
  }
  return v;
}

}  // namespace

void apply_config_entry(OptConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "coarse_grid") {
    cfg.coarse_grid = parse_integer<int>(key, value);
  } else if (key == "local_tol") {
    cfg.local_tol = parse_real(key, value);
  } else if (key == "max_refine_iters") {
    cfg.max_refine_iters = parse_integer<int>(key, value);
  } else if (key == "multistart_count") {
    cfg.multistart_count = parse_integer<int>(key, value);
  } else if (key == "rng_seed") {
    cfg.rng_seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "search_coarse_grid") {
    cfg.search_coarse_grid = parse_integer<int>(key, value);
  } else if (key == "param_grid_budget") {
    cfg.param_grid_budget = parse_integer<int>(key, value);
  } else if (key == "max_simplex_evals") {
    cfg.max_simplex_evals = parse_integer<int>(key, value);
  } else if (key == "max_degree") {
    cfg.max_degree = parse_integer<int>(key, value);
  } else {
    throw DomainError("unknown config key '" + std::string(key) + "'");
  }
}

void apply_config_stream(OptConfig& cfg, std::istream& in, std::string_view source) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw DomainError(std::string(source) + ":" + std::to_string(lineno) + ": expected key = value");
    }
    try {
      apply_config_entry(cfg, trim(std::string_view(body).substr(0, eq)), trim(std::string_view(body).substr(eq + 1)));
    } catch (const DomainError& e) {
      throw DomainError(std::string(source) + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  cfg.validate();
}

void apply_config_file(OptConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  apply_config_stream(cfg, in, path);
}

std::vector<std::pair<std::string, std::string>> config_entries(const OptConfig& cfg) {
  return {
      {"coarse_grid", std::to_string(cfg.coarse_grid)},
      {"local_tol", format_number(cfg.local_tol)},
      {"max_refine_iters", std::to_string(cfg.max_refine_iters)},
      {"multistart_count", std::to_string(cfg.multistart_count)},
      {"rng_seed", std::to_string(cfg.rng_seed)},
      {"search_coarse_grid", std::to_string(cfg.search_coarse_grid)},
      {"param_grid_budget", std::to_string(cfg.param_grid_budget)},
      {"max_simplex_evals", std::to_string(cfg.max_simplex_evals)},
      {"max_degree", std::to_string(cfg.max_degree)},
  };
}

// ---------------------------------------------------------------------------
// Rendering

Format parse_format(std::string_view name) {
  if (name == "md") return Format::Markdown;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw DomainError("unknown format '" + std::string(name) + "' (md, csv, json)");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string format_params(const std::vector<double>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ',';
    out += format_number(params[i]);
  }
  return out;
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return format_number(std::get<double>(c));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

std::string config_line(const Document& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.config.size(); ++i) {
    if (i > 0) out += ' ';
    out += doc.config[i].first + "=" + doc.config[i].second;
  }
  return out;
}

ordered_json cell_json(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  const double v = std::get<double>(c);
  if (!std::isfinite(v)) return format_number(v);
  // Round to the printed precision so re-parsing reproduces the same text.
  return std::strtod(format_number(v).c_str(), nullptr);
}

std::string render_markdown(const Document& doc) {
  std::string out = "# " + doc.command + "\n\n";
  out += "version: " + std::string(kVersion) + "\n";
  out += "config: " + config_line(doc) + "\n\n";
  out += "|";
  for (const auto& c : doc.columns) out += " " + md_field(c) + " |";
  out += "\n|";
  for (std::size_t i = 0; i < doc.columns.size(); ++i) out += "---|";
  out += "\n";
  for (const auto& row : doc.rows) {
    out += "|";
    for (const auto& c : row) out += " " + md_field(cell_text(c)) + " |";
    out += "\n";
  }
  return out;
}

std::string render_csv(const Document& doc) {
  std::string out = "# " + doc.command + "; version " + std::string(kVersion) + "; " + config_line(doc) + "\n";
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(doc.columns[i]);
  }
  out += "\n";
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_field(cell_text(row[i]));
    }
    out += "\n";
  }
  return out;
}

std::string render_json(const Document& doc) {
  ordered_json meta;
  meta["version"] = kVersion;
  meta["command"] = doc.command;
  ordered_json config = ordered_json::object();
  for (const auto& [k, v] : doc.config) config[k] = v;
  meta["config"] = config;
  meta["columns"] = doc.columns;
  ordered_json rows = ordered_json::array();
  for (const auto& row : doc.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i) obj[doc.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  ordered_json top;
  top["meta"] = std::move(meta);
  top["rows"] = std::move(rows);
  return top.dump(2) + "\n";
}

}  // namespace

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::Markdown:
      return render_markdown(doc);
    case Format::Csv:
      return render_csv(doc);
    case Format::Json:
      return render_json(doc);
  }
  return {};
}

Document parse_json_document(std::string_view text) {
  const ordered_json top = ordered_json::parse(text);
  Document doc;
  const auto& meta = top.at("meta");
  doc.command = meta.at("command").get<std::string>();
  for (const auto& [k, v] : meta.at("config").items()) doc.config.emplace_back(k, v.get<std::string>());
  doc.columns = meta.at("columns").get<std::vector<std::string>>();
  for (const auto& obj : top.at("rows")) {
    std::vector<Cell> row;
    for (const auto& col : doc.columns) {
      const auto& v = obj.at(col);
      if (v.is_string()) {
        row.emplace_back(v.get<std::string>());
      } else if (v.is_number_integer()) {
        row.emplace_back(v.get<long long>());
      } else if (v.is_number_float()) {
        row.emplace_back(v.get<double>());
      } else {
        throw DomainError("unsupported JSON cell in column '" + col + "'");
      }
    }
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Reproduction

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Annotated:
      return "annotated";
  }
  return "";
}

namespace {

double printed(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

Comparison absolute(std::string family, std::string quantity, std::string params, double computed, double expected,
                    double tol) {
  Comparison c{std::move(family), std::move(quantity), std::move(params), computed, expected, 0.0, tol,
               Status::Pass, {}};
  c.delta = std::abs(computed - expected);
  c.status = c.delta <= tol ? Status::Pass : Status::Fail;
  return c;
}

Comparison relative(std::string family, std::string quantity, std::string params, double computed, double expected,
                    double tol) {
  Comparison c = absolute(std::move(family), std::move(quantity), std::move(params), computed, expected, tol);
  c.delta = std::abs(computed - expected) / std::abs(expected);
  c.status = c.delta <= tol ? Status::Pass : Status::Fail;
  return c;
}

Comparison floor_check(std::string family, std::string params, double bound, const std::string& base, int exponent) {
  const double floor = std::pow(printed(base), exponent);
  Comparison c{std::move(family), "floor (" + base + ")^" + std::to_string(exponent), std::move(params), bound,
               floor, bound - floor, 0.0, bound > floor ? Status::Pass : Status::Fail, {}};
  return c;
}

void bound_rows(const TableFixture& t, const FixtureRow& r, const OptConfig& cfg, std::vector<Comparison>& out) {
  const std::string name(family_name(r.family));
  const double p = 2.0 * family_spec(r.family).degree;
  const BoundReport rep = lower_bound(r.family, parse_params(r.effective_params()), p, cfg);
  const std::string& params = r.effective_params();

  out.push_back(absolute(name, "norm", params, rep.sup_norm, printed(r.norm), t.tol.norm_abs));
  out.push_back(relative(name, "bound", params, rep.lower_bound, printed(r.value), t.tol.bound_rel));
  if (!r.floor_base.empty()) {
    Comparison f = floor_check(name, params, rep.lower_bound, r.floor_base, r.floor_exponent_used);
    if (r.floor_claim_false) {
      f.status = Status::Annotated;
      f.note = r.annotation;
    }
    out.push_back(std::move(f));
    if (r.floor_exponent_used != r.floor_exponent) {
      Comparison g = floor_check(name, params, rep.lower_bound, r.floor_base, r.floor_exponent);
      g.status = Status::Annotated;
      g.note = r.annotation;
      out.push_back(std::move(g));
    }
  }
  if (!r.compute_params.empty()) {
    const BoundReport alt = lower_bound(r.family, parse_params(r.params), p, cfg);
    Comparison c = relative(name, "bound (printed params)", r.params, alt.lower_bound, printed(r.value),
                            t.tol.bound_rel);
    c.status = Status::Annotated;
    c.note = r.annotation;
    out.push_back(std::move(c));
  }
}

void hyper_rows(const TableFixture& t, const FixtureRow& r, const OptConfig& cfg, std::vector<Comparison>& out) {
  const std::string name = "(" + std::string(family_name(r.family)) + ")^" + std::to_string(r.power);
  const HyperReport rep = hyper_estimate(r.family, parse_params(r.effective_params()), r.power, cfg);
  out.push_back(absolute(name, "h", r.effective_params(), rep.h_estimate, printed(r.value), t.tol.h_abs));
  if (!r.compute_params.empty()) {
    const HyperReport alt = hyper_estimate(r.family, parse_params(r.params), r.power, cfg);
    Comparison c = absolute(name, "h (printed params)", r.params, alt.h_estimate, printed(r.value), t.tol.h_abs);
    c.status = Status::Annotated;
    c.note = r.annotation;
    out.push_back(std::move(c));
  }
}

}  // namespace

std::vector<Comparison> reproduce_table(TableId id, const OptConfig& cfg) {
  const TableFixture& t = table_fixture(id);
  std::vector<Comparison> out;
  for (const FixtureRow& r : t.rows) {
    if (t.is_hyper()) {
      hyper_rows(t, r, cfg, out);
    } else {
      bound_rows(t, r, cfg, out);
    }
  }
  return out;
}

Document comparison_document(const std::vector<Comparison>& rows, std::string command, const OptConfig& cfg) {
  Document doc;
  doc.command = std::move(command);
  doc.config = config_entries(cfg);
  doc.columns = {"family", "quantity", "params", "computed", "expected", "delta", "tolerance", "status", "note"};
  for (const Comparison& c : rows) {
    doc.rows.push_back({c.family, c.quantity, c.params, c.computed, c.expected, c.delta, c.tolerance,
                        std::string(status_name(c.status)), c.note});
  }
  return doc;
}

bool all_pass(const std::vector<Comparison>& rows) {
  for (const Comparison& c : rows) {
    if (c.status == Status::Fail) return false;
  }
  return true;
}

}  // namespace hlb
