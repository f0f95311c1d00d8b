#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsw/specfun.hpp"

namespace dsw::cli {

struct SolverConfig {
  double dx = 0.0625;
  double dt = 0.005;
  double t_final = 60.0;
  double ramp_width = 0.5;
  double sponge_fraction = 0.10;
};

struct CompareConfig {
  std::string mode = "simulate";  // simulate | self | files
  std::vector<std::string> files;
};

struct RunConfig {
  double A = -1.0;
  double B = 0.5;
  std::vector<double> rho_list{0.1, 0.5, 1.0, 1.5};
  std::vector<double> t_list{30.0, 45.0, 60.0};
  std::optional<std::pair<double, double>> x_window;
  specfun::QuadratureSpec quadrature{};
  SolverConfig solver{};
  CompareConfig compare{};
  bool negate_jl_sign = false;  // negative control for parametrix-check
  std::string output_dir = "out";
  std::string format = "csv";
  int jobs = 1;
  unsigned long long seed = 0;  // reserved, runs are deterministic

  // Throws ConfigError on any violated invariant.
  void validate() const;
};

// Flat key = value text with dotted sections and '#' comment lines.
// Unknown keys and malformed values throw ConfigError.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

// Canonical "key=value" lines for embedding in output headers.
std::vector<std::string> config_echo(const RunConfig& cfg);

}  // namespace dsw::cli
