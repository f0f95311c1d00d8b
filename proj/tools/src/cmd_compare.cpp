#include <algorithm>
#include <cmath>
#include <filesystem>

#include "dsw/nls_sim.hpp"
#include "dsw_cli/commands.hpp"
#include "dsw_cli/table.hpp"

namespace dsw::cli {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

sim::Field predicted_field(const ScatteringData& sd, const sim::Grid& g,
                           double t, const specfun::QuadratureSpec& q) {
  const double lnt = std::log(t);
  std::vector<cplx> vals(g.n_points);
  for (int i = 0; i < g.n_points; ++i) {
    const double rho = (sd.spec.C() * t - g.x(i)) * sd.spec.B / lnt;
    if (rho < 0.0) continue;
    vals[i] = q_total(sd, make_edge_frame(sd.spec, rho, t, q)).q_total;
  }
  return sim::make_field(g, std::move(vals), t);
}

std::pair<double, double> pick_window(const RunConfig& cfg,
                                      const ScatteringData& sd,
                                      const sim::Field& f) {
  const sim::Grid& g = f.grid;
  double lo, hi;
  if (cfg.x_window) {
    lo = cfg.x_window->first;
    hi = cfg.x_window->second;
  } else {
    const double front = sd.spec.C() * f.t;
    lo = front - 2.2 * std::log(f.t) / sd.spec.B;
    hi = front + 1.0;
  }
  lo = std::max(lo, g.x_min);
  hi = std::min(hi, g.x_max);
  if (!(lo < hi))
    throw ConfigError("compare: window does not intersect the grid");
  return {lo, hi};
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

}  // namespace

int cmd_compare(const RunConfig& cfg) {
  std::filesystem::create_directories(cfg.output_dir);
  const Genus0Spectrum sp{cfg.A, cfg.B};
  const auto sd = make_scattering_data(sp, cfg.quadrature);

  struct Item {
    sim::Field field;
    std::string label;
  };
  std::vector<Item> items;

  if (cfg.compare.mode == "files") {
    for (const auto& path : cfg.compare.files) {
      if (!std::filesystem::exists(path))
        throw ConfigError("compare: missing snapshot: " + path);
      auto f = sim::read_snapshot(path);
      if (!(f.t > 1.0))
        throw ConfigError("compare: snapshot " + path + " has t <= 1");
      items.push_back({std::move(f), stem_of(path)});
    }
  } else if (cfg.compare.mode == "simulate") {
    std::vector<double> times = cfg.t_list;
    std::sort(times.begin(), times.end());
    const auto grid =
        derive_grid(cfg, std::max(cfg.solver.t_final, times.back()));
    const double taper =
        cfg.solver.sponge_fraction * (grid.x_max - grid.x_min);
    auto field = sim::step_initial(sp, grid, cfg.solver.ramp_width, taper);
    for (const double t : times) {
      advance_to(field, t, cfg);
      items.push_back({field, "t" + format_double(t)});
    }
  } else {  // self
    for (const double t : cfg.t_list) {
      const double front = sp.C() * t;
      const double lo = cfg.x_window
                            ? cfg.x_window->first
                            : front - 2.2 * std::log(t) / sp.B;
      const double hi = cfg.x_window ? cfg.x_window->second : front + 1.0;
      int n = 2;
      while (n * cfg.solver.dx < (hi - lo) + 4.0) n <<= 1;
      const auto grid = sim::make_grid(lo - 2.0, lo - 2.0 + n * cfg.solver.dx,
                                       n);
      items.push_back({predicted_field(sd, grid, t, cfg.quadrature),
                       "t" + format_double(t)});
    }
  }

  Table summary({"t", "linf_env", "l2_env", "peaks_pred", "peaks_num",
                 "leading_offset", "linf_decreased"});
  double prev_linf = kNan;
  for (const auto& item : items) {
    const auto window = pick_window(cfg, sd, item.field);
    const auto rc =
        sim::compare_edge(item.field, sd, window, cfg.quadrature);

    Table peaks({"kind", "x", "offset"});
    for (size_t i = 0; i < rc.peak_centers_pred.size(); ++i)
      peaks.add_row({"pred", rc.peak_centers_pred[i],
                     i < rc.peak_offsets.size()
                         ? nlohmann::ordered_json(rc.peak_offsets[i])
                         : nlohmann::ordered_json(kNan)});
    for (const double x : rc.peak_centers_num)
      peaks.add_row({"num", x, kNan});
    peaks.write(cfg.output_dir, "peaks_" + item.label, cfg.format,
                config_echo(cfg));

    nlohmann::ordered_json decreased;
    if (!std::isnan(prev_linf)) decreased = rc.linf_env < prev_linf;
    summary.add_row(
        {item.field.t, rc.linf_env, rc.l2_env,
         static_cast<long long>(rc.peak_centers_pred.size()),
         static_cast<long long>(rc.peak_centers_num.size()),
         rc.peak_offsets.empty() ? nlohmann::ordered_json(kNan)
                                 : nlohmann::ordered_json(rc.peak_offsets[0]),
         decreased});
    prev_linf = rc.linf_env;
  }
  summary.write(cfg.output_dir, "compare_summary", cfg.format,
                config_echo(cfg));
  return 0;
}

}  // namespace dsw::cli
