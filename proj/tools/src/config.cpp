#include "dsw_cli/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "dsw/errors.hpp"
#include "dsw_cli/table.hpp"

namespace dsw::cli {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: bad numeric value for " + key + ": " + v);
  }
}

long long parse_int(const std::string& key, const std::string& v) {
  try {
    size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer value for " + key + ": " + v);
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: bad boolean value for " + key + ": " + v);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& v) {
  std::vector<double> out;
  for (const auto& item : split_list(v)) out.push_back(parse_double(key, item));
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += ",";
    out += items[i];
  }
  return out;
}

std::string join_doubles(const std::vector<double>& items) {
  std::vector<std::string> s;
  s.reserve(items.size());
  for (double v : items) s.push_back(format_double(v));
  return join(s);
}

}  // namespace

void RunConfig::validate() const {
  if (!(B > 0.0)) throw ConfigError("config: B must be positive");
  if (rho_list.empty()) throw ConfigError("config: rho_list must be non-empty");
  for (double r : rho_list)
    if (r < 0.0) throw ConfigError("config: rho_list entries must be >= 0");
  if (t_list.empty()) throw ConfigError("config: t_list must be non-empty");
  for (double t : t_list)
    if (!(t > 1.0)) throw ConfigError("config: t_list entries must exceed 1");
  if (x_window && !(x_window->first < x_window->second))
    throw ConfigError("config: x_window must be an increasing pair");
  try {
    quadrature.validate();
  } catch (const Error& e) {
    throw ConfigError(std::string("config: quadrature: ") + e.what());
  }
  if (!(solver.dx > 0.0)) throw ConfigError("config: solver.dx must be positive");
  if (!(solver.dt > 0.0)) throw ConfigError("config: solver.dt must be positive");
  if (solver.dt > 0.1 * solver.dx * (1.0 + 1e-12))
    throw ConfigError("config: solver.dt must be <= 0.1 solver.dx");
  if (!(solver.t_final > 1.0))
    throw ConfigError("config: solver.t_final must exceed 1");
  if (solver.ramp_width < 0.0)
    throw ConfigError("config: solver.ramp_width must be >= 0");
  if (solver.sponge_fraction < 0.0 || solver.sponge_fraction > 0.45)
    throw ConfigError("config: solver.sponge_fraction must lie in [0, 0.45]");
  if (format != "csv" && format != "json")
    throw ConfigError("config: format must be csv or json");
  if (jobs < 1) throw ConfigError("config: jobs must be >= 1");
  if (compare.mode != "simulate" && compare.mode != "self" &&
      compare.mode != "files")
    throw ConfigError("config: compare.mode must be simulate, self or files");
  if (compare.mode == "files" && compare.files.empty())
    throw ConfigError("config: compare.files must list snapshots in files mode");
  if (output_dir.empty()) throw ConfigError("config: output_dir must be set");
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    const size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) +
                        " is not key = value: " + s);
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key == "A") cfg.A = parse_double(key, val);
    else if (key == "B") cfg.B = parse_double(key, val);
    else if (key == "rho_list") cfg.rho_list = parse_double_list(key, val);
    else if (key == "t_list") cfg.t_list = parse_double_list(key, val);
    else if (key == "x_window") {
      const auto pair = parse_double_list(key, val);
      if (pair.size() != 2)
        throw ConfigError("config: x_window needs exactly two values");
      cfg.x_window = {pair[0], pair[1]};
    } else if (key == "quadrature.abs_tol")
      cfg.quadrature.abs_tol = parse_double(key, val);
    else if (key == "quadrature.rel_tol")
      cfg.quadrature.rel_tol = parse_double(key, val);
    else if (key == "quadrature.max_subdivisions")
      cfg.quadrature.max_subdivisions =
          static_cast<int>(parse_int(key, val));
    else if (key == "quadrature.tail_cutoff")
      cfg.quadrature.tail_cutoff = parse_double(key, val);
    else if (key == "solver.dx") cfg.solver.dx = parse_double(key, val);
    else if (key == "solver.dt") cfg.solver.dt = parse_double(key, val);
    else if (key == "solver.t_final")
      cfg.solver.t_final = parse_double(key, val);
    else if (key == "solver.ramp_width")
      cfg.solver.ramp_width = parse_double(key, val);
    else if (key == "solver.sponge_fraction")
      cfg.solver.sponge_fraction = parse_double(key, val);
    else if (key == "compare.mode") cfg.compare.mode = val;
    else if (key == "compare.files") cfg.compare.files = split_list(val);
    else if (key == "parametrix.negate_jl_sign")
      cfg.negate_jl_sign = parse_bool(key, val);
    else if (key == "output_dir") cfg.output_dir = val;
    else if (key == "format") cfg.format = val;
    else if (key == "jobs") cfg.jobs = static_cast<int>(parse_int(key, val));
    else if (key == "seed")
      cfg.seed = static_cast<unsigned long long>(parse_int(key, val));
    else
      throw ConfigError("config: unknown key: " + key);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::vector<std::string> config_echo(const RunConfig& cfg) {
  std::vector<std::string> out;
  out.push_back("A=" + format_double(cfg.A));
  out.push_back("B=" + format_double(cfg.B));
  out.push_back("rho_list=" + join_doubles(cfg.rho_list));
  out.push_back("t_list=" + join_doubles(cfg.t_list));
  if (cfg.x_window)
    out.push_back("x_window=" + format_double(cfg.x_window->first) + "," +
                  format_double(cfg.x_window->second));
  out.push_back("quadrature.abs_tol=" + format_double(cfg.quadrature.abs_tol));
  out.push_back("quadrature.rel_tol=" + format_double(cfg.quadrature.rel_tol));
  out.push_back("quadrature.max_subdivisions=" +
                std::to_string(cfg.quadrature.max_subdivisions));
  out.push_back("quadrature.tail_cutoff=" +
                format_double(cfg.quadrature.tail_cutoff));
  out.push_back("solver.dx=" + format_double(cfg.solver.dx));
  out.push_back("solver.dt=" + format_double(cfg.solver.dt));
  out.push_back("solver.t_final=" + format_double(cfg.solver.t_final));
  out.push_back("solver.ramp_width=" + format_double(cfg.solver.ramp_width));
  out.push_back("solver.sponge_fraction=" +
                format_double(cfg.solver.sponge_fraction));
  out.push_back("compare.mode=" + cfg.compare.mode);
  if (!cfg.compare.files.empty())
    out.push_back("compare.files=" + join(cfg.compare.files));
  out.push_back(std::string("parametrix.negate_jl_sign=") +
                (cfg.negate_jl_sign ? "true" : "false"));
  out.push_back("format=" + cfg.format);
  return out;
}

}  // namespace dsw::cli
