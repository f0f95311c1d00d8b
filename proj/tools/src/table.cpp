#include "dsw_cli/table.hpp"

#include <cstdio>
#include <fstream>

#include "dsw/errors.hpp"

namespace dsw::cli {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

Table::Table(std::vector<std::string> columns)
    : columns_(std::move(columns)) {}

void Table::add_row(std::vector<nlohmann::ordered_json> cells) {
  if (cells.size() != columns_.size())
    throw ConfigError("table: row width does not match the column list");
  rows_.push_back(std::move(cells));
}

void Table::write_csv(const std::string& path,
                      const std::vector<std::string>& header_comments) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("table: cannot open " + path);
  out << "# dsw-edge schema v1\n";
  for (const auto& line : header_comments) out << "# " << line << "\n";
  for (size_t c = 0; c < columns_.size(); ++c)
    out << (c ? "," : "") << columns_[c];
  out << "\n";
  for (const auto& row : rows_) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) out << ",";
      const auto& cell = row[c];
      if (cell.is_string()) out << csv_escape(cell.get<std::string>());
      else if (cell.is_boolean()) out << (cell.get<bool>() ? "true" : "false");
      else if (cell.is_number_integer()) out << cell.get<long long>();
      else if (cell.is_number()) out << format_double(cell.get<double>());
      else out << "nan";
    }
    out << "\n";
  }
  if (!out) throw ConfigError("table: write failed for " + path);
}

void Table::write_json(const std::string& path,
                       const std::vector<std::string>& config_lines) const {
  nlohmann::ordered_json doc;
  doc["schema"] = "dsw-edge schema v1";
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& line : config_lines) {
    const size_t eq = line.find('=');
    if (eq != std::string::npos)
      cfg[line.substr(0, eq)] = line.substr(eq + 1);
  }
  doc["config"] = std::move(cfg);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (size_t c = 0; c < row.size(); ++c) rec[columns_[c]] = row[c];
    rows.push_back(std::move(rec));
  }
  doc["rows"] = std::move(rows);
  std::ofstream out(path);
  if (!out) throw ConfigError("table: cannot open " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw ConfigError("table: write failed for " + path);
}

std::string Table::write(const std::string& dir, const std::string& stem,
                         const std::string& format,
                         const std::vector<std::string>& config_lines) const {
  const std::string path = dir + "/" + stem + "." + format;
  if (format == "json") write_json(path, config_lines);
  else write_csv(path, config_lines);
  return path;
}

}  // namespace dsw::cli
