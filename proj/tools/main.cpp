#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "dsw/errors.hpp"
#include "dsw_cli/commands.hpp"
#include "dsw_cli/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "dsw-edge: leading-edge soliton train and oscillatory correction for "
      "the focusing NLS step problem"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string format;
  int jobs = 0;
  unsigned long long seed = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "configuration file (key = value)");
    sub->add_option("--out", out_dir,
                    "output directory (overrides OUTPUT_DIR and config)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--jobs", jobs, "worker threads for independent cells");
    sub->add_option("--seed", seed, "reserved; runs are deterministic");
  };

  auto* c_asympt = app.add_subcommand(
      "asympt", "evaluate the edge prediction over the (rho, t) grid");
  auto* c_check = app.add_subcommand(
      "parametrix-check", "residual table for the model-problem matrices");
  auto* c_sim = app.add_subcommand(
      "simulate", "split-step solver run with snapshots and invariants");
  auto* c_cmp = app.add_subcommand(
      "compare", "solver profile against the edge prediction");
  for (auto* sub : {c_asympt, c_check, c_sim, c_cmp}) add_common(sub);

  CLI11_PARSE(app, argc, argv);

  try {
    dsw::cli::RunConfig cfg = config_path.empty()
                                  ? dsw::cli::RunConfig{}
                                  : dsw::cli::load_config(config_path);
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    else if (const char* env = std::getenv("OUTPUT_DIR")) cfg.output_dir = env;
    if (!format.empty()) cfg.format = format;
    if (jobs > 0) cfg.jobs = jobs;
    cfg.seed = seed;
    cfg.validate();

    if (c_asympt->parsed()) return dsw::cli::cmd_asympt(cfg);
    if (c_check->parsed()) return dsw::cli::cmd_parametrix_check(cfg);
    if (c_sim->parsed()) return dsw::cli::cmd_simulate(cfg);
    if (c_cmp->parsed()) return dsw::cli::cmd_compare(cfg);
    return 2;
  } catch (const dsw::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const dsw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
