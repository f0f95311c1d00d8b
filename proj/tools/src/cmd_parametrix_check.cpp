#include <cmath>
#include <complex>
#include <filesystem>
#include <numbers>

#include "dsw/parametrix.hpp"
#include "dsw_cli/commands.hpp"
#include "dsw_cli/table.hpp"

namespace dsw::cli {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

Matrix2 zeta_pow_nsigma3(cplx zeta, int n) {
  const cplx p = std::pow(zeta, n);
  return {p, 0.0, 0.0, 1.0 / p};
}

struct Row {
  std::string name;
  std::string location;
  double residual;
  double tolerance;
};

}  // namespace

int cmd_parametrix_check(const RunConfig& cfg) {
  std::filesystem::create_directories(cfg.output_dir);
  std::vector<Row> rows;
  const specfun::QuadratureSpec& q = cfg.quadrature;

  const double jl_sign = cfg.negate_jl_sign ? 1.0 : -1.0;
  for (int n = 0; n <= 5; ++n) {
    for (int j = 0; j < 10; ++j) {
      const double s = 30.0 * (j + 0.5) / 10.0;
      const Matrix2 above = laguerre_L(n, s, specfun::HalfLineSide::above, q);
      const Matrix2 below = laguerre_L(n, s, specfun::HalfLineSide::below, q);
      const Matrix2 jump{1.0, 0.0, jl_sign * std::sqrt(s) * std::exp(-s),
                         1.0};
      rows.push_back({"laguerre_jump",
                      "n=" + std::to_string(n) + " s=" + format_double(s),
                      max_abs_diff(below, above * jump), 1e-8});

      const Matrix2 d_above =
          laguerre_Ld(n, s, specfun::HalfLineSide::above, q);
      const Matrix2 d_below =
          laguerre_Ld(n, s, specfun::HalfLineSide::below, q);
      const Matrix2 d_jump{1.0, -jl_sign * std::sqrt(s) * std::exp(-s), 0.0,
                           1.0};
      rows.push_back({"laguerre_dual_jump",
                      "n=" + std::to_string(n) + " s=" + format_double(s),
                      max_abs_diff(d_above, d_below * d_jump), 1e-8});
    }
  }

  for (int n = 0; n <= 4; ++n) {
    const auto coeffs = laguerre_expansion_coeffs(n);
    const double scale =
        std::max({std::abs(coeffs.diag), std::abs(coeffs.off12),
                  std::abs(coeffs.off21), 1.0});
    const cplx zs[3] = {{0.0, 1e3},
                        1e3 * std::polar(1.0, 3.0 * kPi / 4.0),
                        {0.0, 1e4}};
    Matrix2 errs[3];
    for (int m = 0; m < 3; ++m)
      errs[m] = laguerre_L(n, zs[m], q) * zeta_pow_nsigma3(zs[m], n) -
                Matrix2::identity();
    auto fit = [&](cplx f0, cplx f1, cplx f2) {
      const cplx g[3] = {f0 * zs[0] * zs[0] * zs[0],
                         f1 * zs[1] * zs[1] * zs[1],
                         f2 * zs[2] * zs[2] * zs[2]};
      cplx lead = 0.0;
      for (int m = 0; m < 3; ++m) {
        cplx denom = 1.0;
        for (int l = 0; l < 3; ++l)
          if (l != m) denom *= zs[m] - zs[l];
        lead += g[m] / denom;
      }
      return lead;
    };
    auto rel = [&](cplx got, cplx want) {
      if (std::abs(want) < 1e-12) return std::abs(got) / scale;
      return std::abs(got - want) / std::abs(want);
    };
    const double worst =
        std::max({rel(fit(errs[0].m11, errs[1].m11, errs[2].m11), coeffs.diag),
                  rel(fit(errs[0].m12, errs[1].m12, errs[2].m12), coeffs.off12),
                  rel(fit(errs[0].m21, errs[1].m21, errs[2].m21), coeffs.off21),
                  rel(fit(errs[0].m22, errs[1].m22, errs[2].m22),
                      -coeffs.diag)});
    rows.push_back({"laguerre_coeff_fit", "n=" + std::to_string(n),
                    worst, 1e-5});
  }

  for (int n : {0, 1, 3}) {
    const auto coeffs = laguerre_expansion_coeffs(n);
    auto corrected21 = [&](cplx zeta) {
      const Matrix2 L = laguerre_L(n, zeta, q);
      return (L.m21 + coeffs.R1 / zeta * L.m11) * std::pow(zeta, n);
    };
    const double g1 = std::abs(corrected21({0.0, 1e3}));
    const double g2 = std::abs(corrected21({0.0, 1e4}));
    const double slope = std::log(g2 / g1) / std::log(10.0);
    rows.push_back({"laguerre_far_slope", "n=" + std::to_string(n),
                    std::abs(slope + 2.0), 0.05});
  }

  const cplx r0s[] = {cplx{0.3, 0.1}, cplx{0.8, 0.0}, cplx{0.0, 1.2}};
  const double lams[] = {-2.6, -1.9, -1.2, -0.7, -0.3,
                         0.3,  0.7,  1.2,  1.9,  2.6};
  for (const cplx r0 : r0s) {
    const auto p = make_pc_params(r0, std::conj(r0));
    const std::string where =
        "r0=" + format_double(r0.real()) + "+" + format_double(r0.imag()) +
        "i";
    rows.push_back({"pc_beta_product", where,
                    std::abs(p.beta1 * p.beta2 - p.nu), 1e-10});
    const Matrix2 jump{1.0, -p.rho0, -p.r0, 1.0 + p.r0 * p.rho0};
    double worst = 0.0;
    for (const double lam : lams) {
      const Matrix2 above =
          pc_Psi(p, {lam, 0.0}, specfun::HalfLineSide::above);
      const Matrix2 below =
          pc_Psi(p, {lam, 0.0}, specfun::HalfLineSide::below);
      worst = std::max(worst, max_abs_diff(below, above * jump));
      worst = std::max(worst, std::abs(above.det() - 1.0));
    }
    rows.push_back({"pc_psi_jump", where, worst, 1e-8});
  }

  {
    const auto p = make_pc_params({0.3, 0.1}, {0.3, -0.1});
    auto big_e = [&](cplx lam) {
      return std::exp(2.0 * (kI * p.nu * std::log(lam) + kI * lam * lam));
    };
    const cplx denom = 1.0 + p.r0 * p.rho0;
    for (const double radius : {0.8, 1.5, 2.8}) {
      const std::string loc = "radius=" + format_double(radius);
      {
        const cplx lam = std::polar(radius, kPi / 4.0);
        const Matrix2 t1{1.0, 0.0, -p.r0 * big_e(lam), 1.0};
        const double res =
            max_abs_diff(pc_P_sector(p, lam, PCSector::upper_right),
                         pc_P_sector(p, lam, PCSector::upper_middle) * t1);
        rows.push_back({"pc_ray_jump", "ray=ur " + loc, res, 1e-8});
      }
      {
        const cplx lam = std::polar(radius, 3.0 * kPi / 4.0);
        const Matrix2 t2{1.0, -p.rho0 / denom / big_e(lam), 0.0, 1.0};
        const double res =
            max_abs_diff(pc_P_sector(p, lam, PCSector::upper_left),
                         pc_P_sector(p, lam, PCSector::upper_middle) * t2);
        rows.push_back({"pc_ray_jump", "ray=ul " + loc, res, 1e-8});
      }
      {
        const cplx lam = std::polar(radius, -kPi / 4.0);
        const Matrix2 t3_inv{1.0, -p.rho0 / big_e(lam), 0.0, 1.0};
        const double res =
            max_abs_diff(pc_P_sector(p, lam, PCSector::lower_middle),
                         pc_P_sector(p, lam, PCSector::lower_right) * t3_inv);
        rows.push_back({"pc_ray_jump", "ray=lr " + loc, res, 1e-8});
      }
      {
        const cplx lam = std::polar(radius, -3.0 * kPi / 4.0);
        const Matrix2 t4_inv{1.0, 0.0, -p.r0 / denom * big_e(lam), 1.0};
        const double res =
            max_abs_diff(pc_P_sector(p, lam, PCSector::lower_middle),
                         pc_P_sector(p, lam, PCSector::lower_left) * t4_inv);
        rows.push_back({"pc_ray_jump", "ray=ll " + loc, res, 1e-8});
      }
    }

    auto remainder = [&](double radius) {
      const cplx lam{0.0, radius};
      const Matrix2 first{
          0.0, std::polar(1.0, kPi / 4.0) * p.beta1 / (2.0 * lam),
          std::polar(1.0, 3.0 * kPi / 4.0) * p.beta2 / (2.0 * lam), 0.0};
      return max_abs_diff(pc_P(p, lam), Matrix2::identity() + first);
    };
    const double slope =
        std::log(remainder(1000.0) / remainder(100.0)) / std::log(10.0);
    rows.push_back({"pc_far_slope", "radii=100,1000", std::abs(slope + 2.0),
                    0.05});
    rows.push_back({"pc_det", "lambda=100i",
                    std::abs(pc_P(p, {0.0, 100.0}).det() - 1.0), 1e-8});
  }

  Table tab({"name", "location", "residual", "tolerance", "pass"});
  bool all_pass = true;
  for (const auto& r : rows) {
    const bool ok = r.residual <= r.tolerance;
    all_pass = all_pass && ok;
    tab.add_row({r.name, r.location, r.residual, r.tolerance, ok});
  }
  tab.write(cfg.output_dir, "parametrix_check", cfg.format, config_echo(cfg));
  return all_pass ? 0 : 1;
}

}  // namespace dsw::cli
