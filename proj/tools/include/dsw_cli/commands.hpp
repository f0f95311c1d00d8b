#pragma once

#include "dsw/nls_sim.hpp"
#include "dsw_cli/config.hpp"

namespace dsw::cli {

// Periodic domain sized so both edges stay interior up to t_needed:
// half span = (4|A| + 8B) t_needed + margin, rounded up to a power-of-two
// point count at the configured dx.
sim::Grid derive_grid(const RunConfig& cfg, double t_needed);

// Advances with the configured step, shortened to land on t_target exactly.
void advance_to(sim::Field& f, double t_target, const RunConfig& cfg);

// Each driver writes its files under cfg.output_dir and returns the process
// exit code: 0 when every requested check passed, 1 otherwise. Configuration
// problems throw ConfigError instead.

int cmd_asympt(const RunConfig& cfg);
int cmd_parametrix_check(const RunConfig& cfg);
int cmd_simulate(const RunConfig& cfg);
int cmd_compare(const RunConfig& cfg);

}  // namespace dsw::cli
