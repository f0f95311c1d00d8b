#include "dsw/parametrix.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace dsw {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

// Direct Cauchy evaluation loses relative accuracy once the transform
// decays below the absolute quadrature tolerance; beyond this radius the
// exact-moment tail expansion takes over.
constexpr double kLaguerreFarRadius = 50.0;
constexpr int kMomentRows = 120;

// Row m holds the coefficients of s^m in the monic polynomial basis,
// s^m = sum_l table[m][l] pi_l(s), grown through the recurrence
// s pi_l = pi_{l+1} + (2l + 3/2) pi_l + l(l + 1/2) pi_{l-1}.
const std::vector<std::vector<double>>& monomial_pi_table() {
  static const auto table = [] {
    std::vector<std::vector<double>> t;
    t.push_back({1.0});
    for (int m = 1; m <= kMomentRows; ++m) {
      const auto& prev = t.back();
      std::vector<double> cur(m + 1, 0.0);
      for (int l = 0; l < static_cast<int>(prev.size()); ++l) {
        const double c = prev[l];
        if (c == 0.0) continue;
        cur[l + 1] += c;
        cur[l] += (2.0 * l + 1.5) * c;
        if (l > 0) cur[l - 1] += l * (l + 0.5) * c;
      }
      t.push_back(std::move(cur));
    }
    return t;
  }();
  return table;
}

// (2 pi i)^{-1} Int_0^inf sqrt(s) e^{-s} pi_j(s) / (s - zeta) ds for large
// |zeta| through the exact moments mu_{j,m} = table[m][j] h_j, which keeps
// the result accurate relative to its own 1/zeta^{j+1} scale.
cplx cauchy_weighted_pi_far(int j, cplx zeta) {
  // The moment series is asymptotic, not convergent: |terms| shrink until
  // m + j ~ |zeta| and then grow, so stop at the smallest term and use it
  // as the error floor.
  const auto& table = monomial_pi_table();
  const double hj = specfun::laguerre_norm_sq(j);
  const cplx inv = 1.0 / zeta;
  cplx power = inv;
  for (int m = 0; m < j; ++m) power *= inv;
  cplx sum = 0.0;
  double floor_abs = 0.0;
  double prev_abs = std::numeric_limits<double>::infinity();
  for (int m = j; m <= kMomentRows; ++m) {
    const cplx term = (table[m][j] * hj) * power;
    const double mag = std::abs(term);
    if (mag > prev_abs) {
      floor_abs = mag;
      break;
    }
    sum += term;
    power *= inv;
    prev_abs = mag;
    floor_abs = mag;
    if (mag <= 1e-18 * std::abs(sum)) break;
  }
  if (floor_abs > 1e-10 * std::abs(sum))
    throw QuadratureError(
        "laguerre far-field expansion: attainable accuracy above 1e-10 at "
        "this radius");
  return -sum / (2.0 * kPi * kI);
}

cplx weighted_pi(int j, double s) {
  return std::sqrt(s) * std::exp(-s) * specfun::laguerre_monic(j, {s, 0.0});
}

cplx cauchy_weighted_pi(int j, cplx zeta, const specfun::QuadratureSpec& q) {
  if (std::abs(zeta) > kLaguerreFarRadius) {
    return cauchy_weighted_pi_far(j, zeta);
  }
  return specfun::cauchy_halfline([j](double s) { return weighted_pi(j, s); },
                                  zeta, q);
}

Matrix2 laguerre_from(int n, cplx zeta,
                      const std::function<cplx(int)>& cauchy_row) {
  if (n < 0) throw DomainError("laguerre_L: n must be nonnegative");
  if (n == 0) return {1.0, 0.0, cauchy_row(0), 1.0};
  const cplx factor =
      -2.0 * kPi * kI / specfun::laguerre_norm_sq(n - 1);
  return {factor * cauchy_row(n - 1),
          factor * specfun::laguerre_monic(n - 1, zeta), cauchy_row(n),
          specfun::laguerre_monic(n, zeta)};
}

}  // namespace

LocalFrame frame_at(const EdgeFrame& edge, cplx k) {
  const Genus0Spectrum& sp = edge.spec;
  LocalFrame f;
  f.y = k - sp.E0();
  f.y_d = k - sp.Ebar0();
  const double slope = 2.0 * edge.rho * std::log(edge.t) / (sp.B * edge.t);
  f.zp = cplx{8.0 * sp.B, slope};
  f.zdp = cplx{8.0 * sp.B, -slope};
  f.z = f.y * f.zp - 4.0 * kI * f.y * f.y;
  f.z_d = f.y_d * f.zdp + 4.0 * kI * f.y_d * f.y_d;
  f.zeta = f.z * edge.t;
  f.zeta_d = f.z_d * edge.t;
  f.mu = k - edge.k0;
  f.lambda = std::sqrt(2.0 * edge.t) * f.mu;
  f.theta = 2.0 * k * k + 4.0 * edge.xi * k;
  return f;
}

Matrix2 laguerre_L(int n, cplx zeta, const specfun::QuadratureSpec& q) {
  if (zeta.imag() == 0.0 && zeta.real() >= 0.0) {
    throw DomainError("laguerre_L on the cut requires a side");
  }
  return laguerre_from(
      n, zeta, [&](int j) { return cauchy_weighted_pi(j, zeta, q); });
}

Matrix2 laguerre_L(int n, double s, specfun::HalfLineSide side,
                   const specfun::QuadratureSpec& q) {
  return laguerre_from(n, {s, 0.0}, [&](int j) {
    return specfun::cauchy_halfline_side(
        [j](double u) { return weighted_pi(j, u); }, s, side, q);
  });
}

Matrix2 laguerre_Ld(int n, cplx zeta_d, const specfun::QuadratureSpec& q) {
  return laguerre_L(n, zeta_d, q).sigma1_conj();
}

Matrix2 laguerre_Ld(int n, double s, specfun::HalfLineSide side,
                    const specfun::QuadratureSpec& q) {
  return laguerre_L(n, s, side, q).sigma1_conj();
}

LaguerreExpansion laguerre_expansion_coeffs(int n) {
  if (n < 0) throw DomainError("laguerre_expansion_coeffs: n >= 0 required");
  LaguerreExpansion e;
  e.diag = n * (n + 0.5);
  const double fact = std::tgamma(n + 1.0);
  e.off12 = -2.0 * kPi * kI * static_cast<double>(n) /
            (fact * std::tgamma(n + 0.5));
  e.off21 = -fact * std::tgamma(n + 1.5) / (2.0 * kPi * kI);
  e.R1 = -e.off21;
  e.R2 = -e.off12;
  return e;
}

PCParams make_pc_params(cplx r0, cplx rho0) {
  const cplx product = r0 * rho0;
  if (std::abs(1.0 + product) < 1e-14) {
    throw DomainError("make_pc_params: 1 + r0 rho0 must not vanish");
  }
  PCParams p;
  p.r0 = r0;
  p.rho0 = rho0;
  p.nu = std::log(1.0 + product) / (2.0 * kPi);
  const cplx two_inu = std::exp(kI * p.nu * std::log(2.0));
  const cplx eq = std::exp(kPi * p.nu / 4.0);  // e^{pi nu / 4}
  p.u_plus = two_inu * eq * eq * eq;
  p.u_minus = two_inu / eq;
  p.v_plus = 1.0 / (two_inu * eq);
  p.v_minus = eq * eq * eq / two_inu;
  const cplx common = std::sqrt(2.0 * kPi) * two_inu * two_inu * eq * eq;
  p.beta1 = (r0 == cplx{0.0})
                ? cplx{0.0}
                : -kI * common * specfun::recip_gamma(kI * p.nu) / r0;
  p.beta2 = r0 * specfun::gamma_complex(1.0 + kI * p.nu) / common;
  return p;
}

Matrix2 pc_Psi(const PCParams& p, cplx lambda, specfun::HalfLineSide side) {
  const cplx inu = kI * p.nu;
  auto D = [](cplx a, cplx z) { return specfun::parabolic_cylinder_D(a, z); };
  if (side == specfun::HalfLineSide::above) {
    const cplx z1 = 2.0 * std::polar(1.0, -3.0 * kPi / 4.0) * lambda;
    const cplx z2 = 2.0 * std::polar(1.0, -kPi / 4.0) * lambda;
    return {p.u_plus * D(-inu, z1), p.beta1 * p.v_plus * D(inu - 1.0, z2),
            p.beta2 * p.u_plus * D(-inu - 1.0, z1), p.v_plus * D(inu, z2)};
  }
  const cplx z3 = 2.0 * std::polar(1.0, kPi / 4.0) * lambda;
  const cplx z4 = 2.0 * std::polar(1.0, 3.0 * kPi / 4.0) * lambda;
  return {p.u_minus * D(-inu, z3), -p.beta1 * p.v_minus * D(inu - 1.0, z4),
          -p.beta2 * p.u_minus * D(-inu - 1.0, z3), p.v_minus * D(inu, z4)};
}

Matrix2 pc_Psi(const PCParams& p, cplx lambda) {
  if (lambda.imag() == 0.0) {
    throw DomainError("pc_Psi on the real line requires a side");
  }
  return pc_Psi(p, lambda,
                lambda.imag() > 0.0 ? specfun::HalfLineSide::above
                                    : specfun::HalfLineSide::below);
}

namespace {

Matrix2 sector_factor(const PCParams& p, cplx lambda, PCSector sector) {
  if (sector == PCSector::upper_middle || sector == PCSector::lower_middle) {
    return Matrix2::identity();
  }
  const cplx big_e =
      std::exp(2.0 * (kI * p.nu * std::log(lambda) + kI * lambda * lambda));
  const cplx denom = 1.0 + p.r0 * p.rho0;
  switch (sector) {
    case PCSector::upper_right:
      return {1.0, 0.0, -p.r0 * big_e, 1.0};
    case PCSector::upper_left:
      return {1.0, -p.rho0 / denom / big_e, 0.0, 1.0};
    case PCSector::lower_right:
      return {1.0, p.rho0 / big_e, 0.0, 1.0};
    case PCSector::lower_left:
      return {1.0, 0.0, p.r0 / denom * big_e, 1.0};
    default:
      return Matrix2::identity();
  }
}

bool upper_sector(PCSector s) {
  return s == PCSector::upper_right || s == PCSector::upper_middle ||
         s == PCSector::upper_left;
}

}  // namespace

Matrix2 pc_P_sector(const PCParams& p, cplx lambda, PCSector sector) {
  if (lambda == cplx{0.0}) {
    throw DomainError("pc_P is singular at the origin");
  }
  const Matrix2 psi =
      pc_Psi(p, lambda,
             upper_sector(sector) ? specfun::HalfLineSide::above
                                  : specfun::HalfLineSide::below);
  const Matrix2 norm = Matrix2::exp_sigma3(
      kI * p.nu * std::log(lambda) + kI * lambda * lambda);
  return psi * (norm * sector_factor(p, lambda, sector));
}

Matrix2 pc_P(const PCParams& p, cplx lambda) {
  if (lambda == cplx{0.0}) {
    throw DomainError("pc_P is singular at the origin");
  }
  const double a = std::arg(lambda);
  const double rays[] = {0.0,      kPi / 4.0,  3.0 * kPi / 4.0, kPi,
                         -kPi,     -kPi / 4.0, -3.0 * kPi / 4.0};
  for (double ray : rays) {
    if (std::abs(a - ray) < 1e-12) {
      throw SectorError("pc_P within 1e-12 of a jump ray; pass a sector");
    }
  }
  PCSector sector = PCSector::upper_middle;
  if (a > 0.0 && a < kPi / 4.0) sector = PCSector::upper_right;
  else if (a > kPi / 4.0 && a < 3.0 * kPi / 4.0) sector = PCSector::upper_middle;
  else if (a > 3.0 * kPi / 4.0) sector = PCSector::upper_left;
  else if (a < -3.0 * kPi / 4.0) sector = PCSector::lower_left;
  else if (a < 0.0 && a > -kPi / 4.0) sector = PCSector::lower_right;
  else sector = PCSector::lower_middle;
  return pc_P_sector(p, lambda, sector);
}

}  // namespace dsw
