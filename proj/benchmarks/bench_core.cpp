#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "dsw/edge_asymptotics.hpp"
#include "dsw/nls_sim.hpp"
#include "dsw/parametrix.hpp"

using dsw::cplx;
using dsw::Genus0Spectrum;
namespace specfun = dsw::specfun;
namespace sim = dsw::sim;

namespace {

const Genus0Spectrum kShifted{-1.0, 0.5};

const dsw::ScatteringData& shared_scattering_data() {
  static const auto sd = dsw::make_scattering_data(kShifted);
  return sd;
}

void bm_parabolic_cylinder_D(benchmark::State& state) {
  const cplx a{0.0, 0.35};
  cplx z{1.3, -0.6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::parabolic_cylinder_D(a, z));
    z += cplx{1e-9, 0.0};
  }
}
BENCHMARK(bm_parabolic_cylinder_D);

void bm_pc_Psi(benchmark::State& state) {
  const auto p = dsw::make_pc_params({0.3, 0.1}, {0.3, -0.1});
  cplx lam{0.9, 0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsw::pc_Psi(p, lam));
    lam += cplx{1e-9, 0.0};
  }
}
BENCHMARK(bm_pc_Psi);

void bm_pc_P(benchmark::State& state) {
  const auto p = dsw::make_pc_params({0.3, 0.1}, {0.3, -0.1});
  cplx lam{0.9, 1.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsw::pc_P(p, lam));
    lam += cplx{1e-9, 0.0};
  }
}
BENCHMARK(bm_pc_P);

void bm_laguerre_L(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  cplx zeta{40.0, 25.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsw::laguerre_L(n, zeta));
    zeta += cplx{1e-9, 0.0};
  }
}
BENCHMARK(bm_laguerre_L)->Arg(0)->Arg(2)->Arg(5);

void bm_delta_fn(benchmark::State& state) {
  cplx k{-0.4, 0.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsw::delta_fn(kShifted, k, kShifted.A + 0.3));
    k += cplx{1e-9, 0.0};
  }
}
BENCHMARK(bm_delta_fn);

void bm_chi_fn(benchmark::State& state) {
  double k0 = kShifted.A + 0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsw::chi_fn(kShifted, k0));
    k0 += 1e-9;
  }
}
BENCHMARK(bm_chi_fn);

void bm_make_edge_frame(benchmark::State& state) {
  double rho = 0.8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsw::make_edge_frame(kShifted, rho, 45.0));
    rho += 1e-9;
  }
}
BENCHMARK(bm_make_edge_frame);

void bm_q_total(benchmark::State& state) {
  const auto& sd = shared_scattering_data();
  double rho = 0.8;
  for (auto _ : state) {
    const auto edge = dsw::make_edge_frame(kShifted, rho, 45.0);
    benchmark::DoNotOptimize(dsw::q_total(sd, edge));
    rho += 1e-9;
  }
}
BENCHMARK(bm_q_total);

void bm_refinement_coeffs(benchmark::State& state) {
  const auto& sd = shared_scattering_data();
  double rho = 1.3;
  for (auto _ : state) {
    const auto edge = dsw::make_edge_frame(kShifted, rho, 200.0);
    benchmark::DoNotOptimize(
        dsw::refinement_coeffs(sd, edge, dsw::RefinementScheme::first));
    rho += 1e-9;
  }
}
BENCHMARK(bm_refinement_coeffs);

void bm_evolve_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = sim::make_grid(-25.6, 25.6, n);
  std::vector<cplx> vals(n);
  for (int i = 0; i < n; ++i) vals[i] = 1.0 / std::cosh(grid.x(i));
  auto field = sim::make_field(grid, std::move(vals));
  sim::EvolveOptions opt;
  opt.sponge_fraction = 0.0;
  for (auto _ : state) sim::evolve(field, 1e-4, 1, opt);
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bm_evolve_step)->Arg(1024)->Arg(4096)->Arg(16384);

}  // namespace

BENCHMARK_MAIN();
