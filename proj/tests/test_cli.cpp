#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "dsw/errors.hpp"
#include "dsw/nls_sim.hpp"
#include "dsw_cli/commands.hpp"
#include "dsw_cli/config.hpp"
#include "json.hpp"

namespace cli = dsw::cli;
namespace fs = std::filesystem;

namespace {

// Fresh scratch directory per call; removed up front so reruns start clean.
fs::path scratch_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("dsw_cli_test_" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cell += ch;
      }
    } else if (ch == '"' && cell.empty()) {
      quoted = true;
    } else if (ch == ',') {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell += ch;
    }
  }
  cells.push_back(cell);
  return cells;
}

int column_index(const std::vector<std::string>& header,
                 const std::string& name) {
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

cli::RunConfig tiny_solver_config(const std::string& out_dir) {
  cli::RunConfig cfg;
  cfg.t_list = {1.5, 2.0};
  cfg.solver.dx = 0.1;
  cfg.solver.dt = 0.01;
  cfg.solver.t_final = 2.0;
  cfg.output_dir = out_dir;
  return cfg;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config text parses defaults and explicit keys") {
  const auto def = cli::parse_config_text("# only a comment\n\n");
  CHECK(def.A == -1.0);
  CHECK(def.B == 0.5);
  CHECK(def.rho_list == std::vector<double>{0.1, 0.5, 1.0, 1.5});
  CHECK(def.t_list == std::vector<double>{30.0, 45.0, 60.0});
  CHECK(!def.x_window.has_value());
  CHECK(def.format == "csv");
  CHECK(def.compare.mode == "simulate");
  CHECK(!def.negate_jl_sign);
  def.validate();

  const auto cfg = cli::parse_config_text(
      "A = -2.0\n"
      "B = 0.25\n"
      "rho_list = 0.3, 0.9\n"
      "t_list = 10, 20\n"
      "x_window = -5, 40\n"
      "quadrature.abs_tol = 1e-11\n"
      "quadrature.rel_tol = 1e-9\n"
      "quadrature.max_subdivisions = 900\n"
      "quadrature.tail_cutoff = 45\n"
      "solver.dx = 0.125\n"
      "solver.dt = 0.0125\n"
      "solver.t_final = 20\n"
      "solver.ramp_width = 0.25\n"
      "solver.sponge_fraction = 0.2\n"
      "compare.mode = files\n"
      "compare.files = a.csv, b.csv\n"
      "parametrix.negate_jl_sign = true\n"
      "output_dir = results\n"
      "format = json\n"
      "jobs = 3\n");
  CHECK(cfg.A == -2.0);
  CHECK(cfg.B == 0.25);
  CHECK(cfg.rho_list == std::vector<double>{0.3, 0.9});
  CHECK(cfg.t_list == std::vector<double>{10.0, 20.0});
  REQUIRE(cfg.x_window.has_value());
  CHECK(cfg.x_window->first == -5.0);
  CHECK(cfg.x_window->second == 40.0);
  CHECK(cfg.quadrature.abs_tol == 1e-11);
  CHECK(cfg.quadrature.rel_tol == 1e-9);
  CHECK(cfg.quadrature.max_subdivisions == 900);
  CHECK(cfg.quadrature.tail_cutoff == 45.0);
  CHECK(cfg.solver.dx == 0.125);
  CHECK(cfg.solver.dt == 0.0125);
  CHECK(cfg.solver.t_final == 20.0);
  CHECK(cfg.solver.ramp_width == 0.25);
  CHECK(cfg.solver.sponge_fraction == 0.2);
  CHECK(cfg.compare.mode == "files");
  CHECK(cfg.compare.files == std::vector<std::string>{"a.csv", "b.csv"});
  CHECK(cfg.negate_jl_sign);
  CHECK(cfg.output_dir == "results");
  CHECK(cfg.format == "json");
  CHECK(cfg.jobs == 3);
  cfg.validate();
}

TEST_CASE("config parse and validation failures") {
  CHECK_THROWS_AS(cli::parse_config_text("no_such_key = 1\n"),
                  dsw::ConfigError);
  CHECK_THROWS_AS(cli::parse_config_text("A = fast\n"), dsw::ConfigError);
  CHECK_THROWS_AS(cli::parse_config_text("jobs = 1.5\n"), dsw::ConfigError);
  CHECK_THROWS_AS(cli::parse_config_text("x_window = 1\n"), dsw::ConfigError);
  CHECK_THROWS_AS(cli::parse_config_text("x_window = 1, 2, 3\n"),
                  dsw::ConfigError);
  CHECK_THROWS_AS(cli::parse_config_text("parametrix.negate_jl_sign = maybe\n"),
                  dsw::ConfigError);
  CHECK_THROWS_AS(cli::parse_config_text("A\n"), dsw::ConfigError);
  CHECK_THROWS_AS(cli::load_config("/nonexistent/path.cfg"), dsw::ConfigError);

  auto bad = [](auto&& mutate) {
    cli::RunConfig cfg;
    mutate(cfg);
    CHECK_THROWS_AS(cfg.validate(), dsw::ConfigError);
  };
  bad([](cli::RunConfig& c) { c.B = 0.0; });
  bad([](cli::RunConfig& c) { c.B = -0.5; });
  bad([](cli::RunConfig& c) { c.rho_list.clear(); });
  bad([](cli::RunConfig& c) { c.rho_list = {-0.2}; });
  bad([](cli::RunConfig& c) { c.t_list.clear(); });
  bad([](cli::RunConfig& c) { c.t_list = {0.5}; });
  bad([](cli::RunConfig& c) { c.x_window = {3.0, 3.0}; });
  bad([](cli::RunConfig& c) { c.quadrature.abs_tol = -1.0; });
  bad([](cli::RunConfig& c) { c.solver.dx = 0.0; });
  bad([](cli::RunConfig& c) { c.solver.dt = 0.02; });  // > 0.1 dx
  bad([](cli::RunConfig& c) { c.solver.t_final = 1.0; });
  bad([](cli::RunConfig& c) { c.solver.sponge_fraction = 0.6; });
  bad([](cli::RunConfig& c) { c.format = "xml"; });
  bad([](cli::RunConfig& c) { c.jobs = 0; });
  bad([](cli::RunConfig& c) { c.compare.mode = "magic"; });
  bad([](cli::RunConfig& c) { c.compare.mode = "files"; });  // no files
  bad([](cli::RunConfig& c) { c.output_dir.clear(); });
}

TEST_CASE("config echo round-trips through the parser") {
  cli::RunConfig cfg;
  cfg.A = -2.0;
  cfg.rho_list = {0.4, 1.2};
  cfg.x_window = {1.0, 9.0};
  cfg.compare.mode = "self";
  cfg.format = "json";

  const auto lines = cli::config_echo(cfg);
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  CHECK(text.find("A=-2") != std::string::npos);
  CHECK(text.find("compare.mode=self") != std::string::npos);

  const auto back = cli::parse_config_text(text);
  CHECK(back.A == cfg.A);
  CHECK(back.B == cfg.B);
  CHECK(back.rho_list == cfg.rho_list);
  CHECK(back.t_list == cfg.t_list);
  REQUIRE(back.x_window.has_value());
  CHECK(back.x_window->first == 1.0);
  CHECK(back.x_window->second == 9.0);
  CHECK(back.compare.mode == "self");
  CHECK(back.format == "json");
  CHECK(back.solver.dx == cfg.solver.dx);
}

TEST_CASE("asympt output is deterministic and schema-tagged") {
  const auto dir_a = scratch_dir("asympt_a");
  const auto dir_b = scratch_dir("asympt_b");

  cli::RunConfig cfg;
  cfg.rho_list = {0.1, 0.5, 1.3};
  cfg.t_list = {30.0, 60.0};
  cfg.jobs = 2;
  cfg.output_dir = dir_a.string();
  CHECK(cli::cmd_asympt(cfg) == 0);
  cfg.output_dir = dir_b.string();
  CHECK(cli::cmd_asympt(cfg) == 0);

  const auto text_a = slurp(dir_a / "asympt.csv");
  const auto text_b = slurp(dir_b / "asympt.csv");
  CHECK(text_a == text_b);
  CHECK(text_a.rfind("# dsw-edge schema v1\n", 0) == 0);

  const auto rows = data_lines(text_a);
  REQUIRE(rows.size() == 7);  // header plus 3 rho x 2 t
  const auto header = split_csv(rows[0]);
  const int c_rho = column_index(header, "rho");
  const int c_regime = column_index(header, "regime");
  const int c_abs_sol = column_index(header, "abs_q_sol");
  const int c_abs_tot = column_index(header, "abs_q_total");
  REQUIRE(c_rho >= 0);
  REQUIRE(c_regime >= 0);
  REQUIRE(c_abs_sol >= 0);
  REQUIRE(c_abs_tot >= 0);
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split_csv(rows[i]);
    const double rho = std::stod(cells[c_rho]);
    const double abs_sol = std::stod(cells[c_abs_sol]);
    const double abs_tot = std::stod(cells[c_abs_tot]);
    if (rho < 0.25) {
      CHECK(cells[c_regime] == "parabolic_only");
      CHECK(abs_sol == 0.0);
    } else {
      CHECK(cells[c_regime] == "solitonic");
      CHECK(abs_sol <= 2.0 * cfg.B * (1.0 + 1e-12));
    }
    CHECK(abs_tot < 2.5 * cfg.B);
  }
}

TEST_CASE("asympt json document carries config and rows") {
  const auto dir = scratch_dir("asympt_json");
  cli::RunConfig cfg;
  cfg.rho_list = {0.5};
  cfg.t_list = {40.0};
  cfg.format = "json";
  cfg.output_dir = dir.string();
  CHECK(cli::cmd_asympt(cfg) == 0);

  const auto doc = nlohmann::json::parse(slurp(dir / "asympt.json"));
  CHECK(doc.at("schema") == "dsw-edge schema v1");
  CHECK(doc.at("config").at("B") == "0.5");
  REQUIRE(doc.at("rows").size() == 1);
  const auto& row = doc.at("rows")[0];
  CHECK(row.at("rho") == 0.5);
  CHECK(row.at("t") == 40.0);
  CHECK(row.at("regime") == "solitonic");
  CHECK(row.at("n") == 0);
}

TEST_CASE("parametrix check passes and the sign control fails") {
  const auto dir = scratch_dir("pcheck");
  cli::RunConfig cfg;
  cfg.output_dir = dir.string();
  CHECK(cli::cmd_parametrix_check(cfg) == 0);

  const auto rows = data_lines(slurp(dir / "parametrix_check.csv"));
  REQUIRE(rows.size() > 100);
  const auto header = split_csv(rows[0]);
  const int c_name = column_index(header, "name");
  const int c_pass = column_index(header, "pass");
  REQUIRE(c_name >= 0);
  REQUIRE(c_pass >= 0);
  bool saw_beta = false, saw_slope = false;
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split_csv(rows[i]);
    CHECK(cells[c_pass] == "true");
    saw_beta |= cells[c_name] == "pc_beta_product";
    saw_slope |= cells[c_name] == "laguerre_far_slope";
  }
  CHECK(saw_beta);
  CHECK(saw_slope);

  cfg.negate_jl_sign = true;
  cfg.output_dir = scratch_dir("pcheck_neg").string();
  CHECK(cli::cmd_parametrix_check(cfg) == 1);
  const auto neg_rows =
      data_lines(slurp(fs::path(cfg.output_dir) / "parametrix_check.csv"));
  int failed = 0;
  for (size_t i = 1; i < neg_rows.size(); ++i)
    if (split_csv(neg_rows[i])[c_pass] == "false") ++failed;
  CHECK(failed > 0);
}

TEST_CASE("simulate writes invariants and requested snapshots") {
  const auto dir = scratch_dir("simulate");
  const auto cfg = tiny_solver_config(dir.string());
  CHECK(cli::cmd_simulate(cfg) == 0);

  CHECK(fs::exists(dir / "invariants.csv"));
  REQUIRE(fs::exists(dir / "snapshot_t1.5.csv"));
  REQUIRE(fs::exists(dir / "snapshot_t2.csv"));

  const auto rows = data_lines(slurp(dir / "invariants.csv"));
  REQUIRE(rows.size() == 4);  // header plus t = 0, 1.5, 2
  const auto header = split_csv(rows[0]);
  const int c_t = column_index(header, "t");
  const int c_mass = column_index(header, "mass");
  REQUIRE(c_t >= 0);
  REQUIRE(c_mass >= 0);
  CHECK(std::stod(split_csv(rows[1])[c_t]) == 0.0);
  CHECK(std::stod(split_csv(rows[3])[c_t]) == doctest::Approx(2.0));
  CHECK(std::stod(split_csv(rows[1])[c_mass]) > 0.0);

  const auto snap = dsw::sim::read_snapshot((dir / "snapshot_t2.csv").string());
  CHECK(snap.t == doctest::Approx(2.0));
  const auto g = cli::derive_grid(cfg, 2.0);
  CHECK(snap.grid.n_points == g.n_points);
  CHECK(snap.grid.x_min == doctest::Approx(g.x_min));
}

TEST_CASE("compare self mode reports exact agreement") {
  const auto dir = scratch_dir("compare_self");
  auto cfg = tiny_solver_config(dir.string());
  cfg.compare.mode = "self";
  CHECK(cli::cmd_compare(cfg) == 0);

  const auto rows = data_lines(slurp(dir / "compare_summary.csv"));
  REQUIRE(rows.size() == 3);
  const auto header = split_csv(rows[0]);
  const int c_linf = column_index(header, "linf_env");
  const int c_l2 = column_index(header, "l2_env");
  REQUIRE(c_linf >= 0);
  REQUIRE(c_l2 >= 0);
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split_csv(rows[i]);
    CHECK(std::stod(cells[c_linf]) == 0.0);
    CHECK(std::stod(cells[c_l2]) == 0.0);
  }
  CHECK(fs::exists(dir / "peaks_t1.5.csv"));
  CHECK(fs::exists(dir / "peaks_t2.csv"));
}

TEST_CASE("compare files mode consumes snapshots and rejects bad input") {
  const auto dir = scratch_dir("compare_files");

  const auto g = dsw::sim::make_grid(-12.8, 12.8, 512);
  std::vector<dsw::cplx> vals(g.n_points);
  auto f = dsw::sim::make_field(g, std::move(vals), 2.0);
  const auto snap_path = (dir / "zero_t2.csv").string();
  dsw::sim::write_snapshot(snap_path, f);

  cli::RunConfig cfg;
  cfg.output_dir = dir.string();
  cfg.compare.mode = "files";
  cfg.compare.files = {snap_path};
  CHECK(cli::cmd_compare(cfg) == 0);
  const auto rows = data_lines(slurp(dir / "compare_summary.csv"));
  REQUIRE(rows.size() == 2);
  const auto header = split_csv(rows[0]);
  const int c_linf = column_index(header, "linf_env");
  const int c_num = column_index(header, "peaks_num");
  REQUIRE(c_linf >= 0);
  REQUIRE(c_num >= 0);
  const auto cells = split_csv(rows[1]);
  CHECK(std::stod(cells[c_linf]) > 0.0);  // zero field vs prediction
  CHECK(std::stod(cells[c_num]) == 0.0);

  cfg.compare.files = {(dir / "missing.csv").string()};
  CHECK_THROWS_AS(cli::cmd_compare(cfg), dsw::ConfigError);
}

}  // TEST_SUITE
