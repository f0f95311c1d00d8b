#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace dsw::cli {

// Column-ordered rows emitted either as CSV (doubles with 17 significant
// digits) or as JSON records. NaN cells print as "nan" in CSV and null in
// JSON.
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  void add_row(std::vector<nlohmann::ordered_json> cells);
  size_t rows() const { return rows_.size(); }

  void write_csv(const std::string& path,
                 const std::vector<std::string>& header_comments) const;
  void write_json(const std::string& path,
                  const std::vector<std::string>& config_lines) const;

  // Dispatches on format ("csv" or "json") and appends the extension.
  std::string write(const std::string& dir, const std::string& stem,
                    const std::string& format,
                    const std::vector<std::string>& config_lines) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<nlohmann::ordered_json>> rows_;
};

std::string format_double(double v);

}  // namespace dsw::cli
