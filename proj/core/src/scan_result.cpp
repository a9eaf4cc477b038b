#include "qsr/scan_result.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "qsr/errors.hpp"

namespace qsr {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view sentinel_name(Sentinel s) { return s == Sentinel::inf ? "inf" : "ambiguous"; }

std::string format_cell(const Cell& cell) {
  if (const auto* v = std::get_if<double>(&cell)) return format_number(*v);
  return std::string(sentinel_name(std::get<Sentinel>(cell)));
}

// Round to nine significant digits and back, so that the JSON writer's
// shortest round-trip form never exceeds nine digits.
double rounded(double value) {
  const std::string text = format_number(value);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

ordered_json json_cell(const Cell& cell) {
  if (const auto* v = std::get_if<double>(&cell)) return rounded(*v);
  return std::string(sentinel_name(std::get<Sentinel>(cell)));
}

Cell cell_from_json(const ordered_json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return Sentinel::inf;
    if (s == "ambiguous") return Sentinel::ambiguous;
  }
  throw DomainError("unexpected cell value in scan JSON");
}

}  // namespace

void ScanResult::set(std::string key, std::string value) {
  for (auto& [k, v] : metadata) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  metadata.emplace_back(std::move(key), std::move(value));
}

std::string ScanResult::get(std::string_view key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return {};
}

Cell make_cell(double value) {
  if (std::isinf(value) && value > 0.0) return Sentinel::inf;
  return value;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

std::string write_csv(const ScanResult& result) {
  std::ostringstream out;
  for (const auto& [key, value] : result.metadata) out << "# " << key << '=' << value << '\n';
  if (result.rows.empty()) return out.str();

  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    out << (i ? "," : "") << result.columns[i];
  }
  out << '\n';
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
  return out.str();
}

std::string write_json(const ScanResult& result) {
  ordered_json doc;
  doc["metadata"] = ordered_json::object();
  for (const auto& [key, value] : result.metadata) doc["metadata"][key] = value;
  doc["columns"] = result.columns;
  doc["rows"] = ordered_json::array();
  for (const auto& row : result.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < result.columns.size(); ++i) {
      obj[result.columns[i]] = json_cell(row[i]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

ScanResult read_json(std::string_view text) {
  try {
    const ordered_json doc = ordered_json::parse(text);
    if (!doc.is_object() || !doc.contains("metadata") || !doc.contains("columns") ||
        !doc.contains("rows")) {
      throw DomainError("scan JSON needs metadata, columns and rows");
    }

    ScanResult result;
    for (const auto& [key, value] : doc["metadata"].items()) {
      result.metadata.emplace_back(key, value.get<std::string>());
    }
    result.columns = doc["columns"].get<std::vector<std::string>>();
    for (const auto& obj : doc["rows"]) {
      std::vector<Cell> row;
      row.reserve(result.columns.size());
      for (const auto& column : result.columns) {
        if (!obj.contains(column)) throw DomainError("row is missing column '" + column + "'");
        row.push_back(cell_from_json(obj[column]));
      }
      result.rows.push_back(std::move(row));
    }
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed scan JSON: ") + e.what());
  }
}

}  // namespace qsr
