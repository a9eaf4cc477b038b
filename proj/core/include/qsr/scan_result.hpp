#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qsr {

/// Non-numeric cell markers. `inf` is a divergent power at beta = 1;
/// `ambiguous` marks the electron's order-of-limits point (beta = 1, theta = pi/2).
enum class Sentinel { inf, ambiguous };

using Cell = std::variant<double, Sentinel>;

/// Tabular output of a CLI computation: ordered key/value metadata, column
/// names, and rows of cells (one cell per column).
struct ScanResult {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void set(std::string key, std::string value);
  /// Empty string if absent.
  std::string get(std::string_view key) const;
};

/// A finite double stays a number; +inf becomes Sentinel::inf.
Cell make_cell(double value);

/// Nine significant digits, shortest general form, locale independent.
std::string format_number(double value);

/// `# key=value` metadata lines, then (if there are rows) a header line and
/// comma-separated rows. LF line endings.
std::string write_csv(const ScanResult& result);

/// {"metadata": {...}, "columns": [...], "rows": [{column: value, ...}, ...]}
/// Sentinels are the strings "inf" / "ambiguous".
std::string write_json(const ScanResult& result);

/// Inverse of write_json. Throws DomainError on malformed input.
ScanResult read_json(std::string_view text);

}  // namespace qsr
