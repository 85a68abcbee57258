#pragma once

// Config files, tabular output (md, csv, json) and table reproduction.

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hlb/fixtures.hpp"
#include "hlb/norm.hpp"

namespace hlb {

inline constexpr std::string_view kVersion = "1.0.0";

// --- config --------------------------------------------------------------

/// Sets one OptConfig field by key; unknown keys and bad values throw DomainError.
void apply_config_entry(OptConfig& cfg, std::string_view key, std::string_view value);

/// Flat `key = value` lines; `#` starts a comment.
void apply_config_stream(OptConfig& cfg, std::istream& in, std::string_view source = "config");
void apply_config_file(OptConfig& cfg, const std::string& path);

/// Every field in canonical order, values formatted for echoing.
std::vector<std::pair<std::string, std::string>> config_entries(const OptConfig& cfg);

// --- tables --------------------------------------------------------------

using Cell = std::variant<std::string, long long, double>;

struct Document {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Markdown, Csv, Json };

Format parse_format(std::string_view name);

/// 15 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_number(double v);
std::string format_params(const std::vector<double>& params);

std::string render(const Document& doc, Format format);

/// Inverse of render(doc, Format::Json).
Document parse_json_document(std::string_view text);

// --- reproduction --------------------------------------------------------

enum class Status { Pass, Fail, Annotated };

std::string_view status_name(Status s);

struct Comparison {
  std::string family;
  std::string quantity;  ///< norm, bound, floor, h
  std::string params;
  double computed = 0.0;
  double expected = 0.0;
  double delta = 0.0;  ///< |computed - expected| (relative for bounds)
  double tolerance = 0.0;
  Status status = Status::Pass;
  std::string note;
};

std::vector<Comparison> reproduce_table(TableId id, const OptConfig& cfg);

Document comparison_document(const std::vector<Comparison>& rows, std::string command, const OptConfig& cfg);

bool all_pass(const std::vector<Comparison>& rows);

}  // namespace hlb
