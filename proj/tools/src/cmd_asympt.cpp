#include <atomic>
#include <exception>
#include <filesystem>
#include <mutex>
#include <thread>
#include <vector>

#include "dsw/edge_asymptotics.hpp"
#include "dsw_cli/commands.hpp"
#include "dsw_cli/table.hpp"

namespace dsw::cli {

namespace {

const char* regime_name(EdgeRegime r) {
  return r == EdgeRegime::solitonic ? "solitonic" : "parabolic_only";
}

}  // namespace

int cmd_asympt(const RunConfig& cfg) {
  std::filesystem::create_directories(cfg.output_dir);
  const Genus0Spectrum sp{cfg.A, cfg.B};
  const auto sd = make_scattering_data(sp, cfg.quadrature);

  struct Cell {
    double rho, t;
    EdgeFrame edge;
    EdgeResult res;
  };
  std::vector<Cell> cells;
  for (double t : cfg.t_list)
    for (double rho : cfg.rho_list) cells.push_back({rho, t, {}, {}});

  const int workers =
      std::min<int>(cfg.jobs, static_cast<int>(cells.size()));
  std::atomic<size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto run = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        cells[i].edge = make_edge_frame(sp, cells[i].rho, cells[i].t,
                                        cfg.quadrature);
        cells[i].res = q_total(sd, cells[i].edge);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (workers > 1) {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  } else {
    run();
  }
  if (first_error) std::rethrow_exception(first_error);

  Table tab({"rho", "t", "x", "n", "regime", "re_q_sol", "im_q_sol",
             "abs_q_sol", "re_q_par", "im_q_par", "abs_q_par", "re_q_total",
             "im_q_total", "abs_q_total", "phi_env", "psi", "nu"});
  for (const auto& c : cells) {
    tab.add_row({c.rho, c.t, c.edge.x, c.res.n, regime_name(c.res.regime),
                 c.res.q_sol.real(), c.res.q_sol.imag(),
                 std::abs(c.res.q_sol), c.res.q_par.real(),
                 c.res.q_par.imag(), std::abs(c.res.q_par),
                 c.res.q_total.real(), c.res.q_total.imag(),
                 std::abs(c.res.q_total), c.res.phi_env, c.edge.psi,
                 c.edge.nu});
  }
  tab.write(cfg.output_dir, "asympt", cfg.format, config_echo(cfg));
  return 0;
}

}  // namespace dsw::cli
