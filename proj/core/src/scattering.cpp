#include "dsw/scattering.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace dsw {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

std::pair<cplx, cplx> ab_from_kappa(cplx kap) {
  const cplx khat = 1.0 / kap;
  return {0.5 * (kap + khat), 0.5 * (kap - khat)};
}

cplx r_from_kappa(cplx kap) {
  const cplx k2 = kap * kap;
  return (k2 - 1.0) / (k2 + 1.0);
}

// Integrates over the pieces of [a, b] cut at the interior points in
// `cuts` (unsorted, possibly outside the interval).
cplx integrate_split(const std::function<cplx(double)>& f, double a, double b,
                     std::vector<double> cuts,
                     const specfun::QuadratureSpec& q) {
  cuts.push_back(a);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cplx total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = std::max(a, cuts[i]);
    const double hi = std::min(b, cuts[i + 1]);
    if (hi > lo) total += specfun::integrate(f, lo, hi, q);
  }
  return total;
}

// Int_{-inf}^{anchor} log_jump(s)/(s - k) ds through s = anchor - u/(1-u).
cplx ray_tail_integral(const std::function<double(double)>& log_jump,
                       double kink_at, cplx k, double anchor,
                       const specfun::QuadratureSpec& q) {
  auto g = [&](double u) -> cplx {
    const double om = 1.0 - u;
    const double s = anchor - u / om;
    return log_jump(s) / ((s - k) * om * om);
  };
  std::vector<double> cuts;
  if (kink_at < anchor) {
    const double d = anchor - kink_at;
    cuts.push_back(d / (1.0 + d));
  }
  return integrate_split(g, 0.0, 1.0, std::move(cuts), q);
}

}  // namespace

std::pair<cplx, cplx> scattering_ab(const Genus0Spectrum& sp, cplx k) {
  return ab_from_kappa(kappa0(sp, k));
}

std::pair<cplx, cplx> scattering_ab(const Genus0Spectrum& sp, cplx k,
                                    BranchSide side) {
  return ab_from_kappa(kappa0(sp, k, side));
}

cplx reflection(const Genus0Spectrum& sp, cplx k) {
  return r_from_kappa(kappa0(sp, k));
}

cplx reflection(const Genus0Spectrum& sp, cplx k, BranchSide side) {
  return r_from_kappa(kappa0(sp, k, side));
}

double abs_r_squared(const Genus0Spectrum& sp, double s) {
  sp.validate();
  const double u = std::abs(s - sp.A);
  const double w = (std::hypot(u, sp.B) - u) / sp.B;
  return w * w;
}

cplx f_jump(const Genus0Spectrum& sp, cplx k_on_band) {
  return reflection(sp, k_on_band, BranchSide::minus) -
         reflection(sp, k_on_band, BranchSide::plus);
}

cplx phi_hat_E0(const Genus0Spectrum& sp) {
  sp.validate();
  constexpr int kTerms = 6;
  std::array<double, kTerms> xs{};
  std::array<cplx, kTerms> est{};
  const cplx quarter_turn = std::polar(1.0, kPi / 4.0);
  for (int j = 0; j < kTerms; ++j) {
    const double eps = 1e-2 * std::ldexp(1.0, -j);
    xs[j] = std::sqrt(eps);
    est[j] = f_jump(sp, sp.E0() - kI * eps) * quarter_turn / xs[j];
  }
  // Neville extrapolation to eps = 0 in the variable sqrt(eps), matching
  // the square-root endpoint behavior of f.
  cplx previous = 0.0;
  for (int level = 1; level < kTerms; ++level) {
    if (level == kTerms - 1) previous = est[kTerms - 1];
    for (int j = kTerms - 1; j >= level; --j) {
      est[j] = (xs[j] * est[j - 1] - xs[j - level] * est[j]) /
               (xs[j] - xs[j - level]);
    }
  }
  if (std::abs(est[kTerms - 1] - previous) > 1e-6) {
    throw ConvergenceError("phi_hat_E0: extrapolants disagree beyond 1e-6");
  }
  return est[kTerms - 1];
}

cplx delta_from_log_jump(const std::function<double(double)>& log_jump,
                         double kink_at, cplx k, double k0,
                         const specfun::QuadratureSpec& q) {
  if (k.imag() == 0.0 && k.real() <= k0) {
    throw DomainError("delta evaluated on its jump ray");
  }
  const cplx exponent = ray_tail_integral(log_jump, kink_at, k, k0, q);
  return std::exp(exponent / (2.0 * kPi * kI));
}

cplx delta_from_log_jump_side(const std::function<double(double)>& log_jump,
                              double kink_at, double s0, double k0,
                              specfun::HalfLineSide side,
                              const specfun::QuadratureSpec& q) {
  if (!(s0 < k0)) {
    throw DomainError("side limits only exist strictly inside the ray");
  }
  const double L0 = log_jump(s0);
  const double w = std::min(0.75, 0.5 * (k0 - s0));
  // symmetric window, so the principal value of the subtracted pole is zero
  auto windowed = [&](double s) -> cplx {
    const double d = s - s0;
    if (d == 0.0) return 0.0;
    return (log_jump(s) - L0) / d;
  };
  cplx exponent =
      integrate_split(windowed, s0 - w, s0 + w, {kink_at, s0}, q);
  auto outside = [&](double s) -> cplx {
    return log_jump(s) / (s - s0);
  };
  exponent += integrate_split(outside, s0 + w, k0, {kink_at}, q);
  exponent += ray_tail_integral(log_jump, kink_at, cplx{s0, 0.0}, s0 - w, q);
  const double half_residue =
      (side == specfun::HalfLineSide::above) ? kPi * L0 : -kPi * L0;
  exponent += kI * half_residue;
  return std::exp(exponent / (2.0 * kPi * kI));
}

namespace {

std::function<double(double)> log_jump_of(const Genus0Spectrum& sp) {
  return [sp](double s) { return std::log1p(abs_r_squared(sp, s)); };
}

}  // namespace

cplx delta_fn(const Genus0Spectrum& sp, cplx k, double k0,
              const specfun::QuadratureSpec& q) {
  sp.validate();
  return delta_from_log_jump(log_jump_of(sp), sp.A, k, k0, q);
}

cplx delta_fn_side(const Genus0Spectrum& sp, double s0, double k0,
                   specfun::HalfLineSide side,
                   const specfun::QuadratureSpec& q) {
  sp.validate();
  return delta_from_log_jump_side(log_jump_of(sp), sp.A, s0, k0, side, q);
}

double nu_of(const Genus0Spectrum& sp, double k0) {
  return std::log1p(abs_r_squared(sp, k0)) / (2.0 * kPi);
}

cplx chi_from_log_jump(const std::function<double(double)>& log_jump,
                       double log_jump_at_k0, double kink_at, double k0,
                       double N, const specfun::QuadratureSpec& q) {
  if (!(k0 + N > 0.0)) {
    throw DomainError("chi requires the split point to satisfy -N < k0");
  }
  auto subtracted = [&](double s) -> cplx {
    const double d = s - k0;
    if (d == 0.0) return 0.0;
    return (log_jump(s) - log_jump_at_k0) / d;
  };
  const cplx i1 = integrate_split(subtracted, -N, k0, {kink_at}, q);
  auto tail = [&](double s) -> cplx { return log_jump(s) / (s - k0); };
  cplx i2 = 0.0;
  {
    auto g = [&](double u) -> cplx {
      const double om = 1.0 - u;
      return tail(-N - u / om) / (om * om);
    };
    std::vector<double> cuts;
    if (kink_at < -N) {
      const double d = -N - kink_at;
      cuts.push_back(d / (1.0 + d));
    }
    i2 = integrate_split(g, 0.0, 1.0, std::move(cuts), q);
  }
  const double nu = log_jump_at_k0 / (2.0 * kPi);
  return std::exp(kI * nu * std::log(k0 + N)) *
         std::exp((i1 + i2) / (2.0 * kPi * kI));
}

cplx chi_fn(const Genus0Spectrum& sp, double k0, double N,
            const specfun::QuadratureSpec& q) {
  sp.validate();
  return chi_from_log_jump(log_jump_of(sp),
                           std::log1p(abs_r_squared(sp, k0)), sp.A, k0, N, q);
}

cplx chi_fn(const Genus0Spectrum& sp, double k0,
            const specfun::QuadratureSpec& q) {
  return chi_fn(sp, k0, std::max(5.0, std::abs(k0) + 3.0), q);
}

Matrix2 jump_J(const Genus0Spectrum& sp, double x, double t, cplx k) {
  sp.validate();
  if (!(t > 0.0)) throw DomainError("jump_J needs t > 0");
  const double xi = x / (4.0 * t);
  auto phase = [&](cplx kk) {
    return std::exp(2.0 * kI * t * (2.0 * kk * kk + 4.0 * xi * kk));
  };
  if (k.imag() == 0.0) {
    if (k.real() == sp.A) {
      throw BranchError("jump matrix is discontinuous at k = A");
    }
    const cplx r = reflection(sp, k);
    const cplx e = phase(k);
    return {1.0, -std::conj(r) / e, -r * e, 1.0 + std::norm(r)};
  }
  if (k.real() == sp.A && k.imag() > 0.0 && k.imag() < sp.B) {
    return {1.0, 0.0, f_jump(sp, k) * phase(k), 1.0};
  }
  if (k.real() == sp.A && k.imag() < 0.0 && k.imag() > -sp.B) {
    return {1.0, -std::conj(f_jump(sp, std::conj(k))) / phase(k), 0.0, 1.0};
  }
  throw DomainError("jump_J: k is not on the contour");
}

ScatteringData make_scattering_data(const Genus0Spectrum& sp,
                                    const specfun::QuadratureSpec& q) {
  sp.validate();
  ScatteringData sd;
  sd.spec = sp;
  sd.phi_hat_E0 = phi_hat_E0(sp);
  sd.c0 = sd.phi_hat_E0;
  sd.delta_E0_edge = delta_fn(sp, sp.E0(), sp.A, q);
  return sd;
}

EdgeFrame make_edge_frame(const Genus0Spectrum& sp, double rho, double t,
                          const specfun::QuadratureSpec& q) {
  sp.validate();
  if (rho < 0.0) throw DomainError("edge frame needs rho >= 0");
  if (!(t > 0.0)) throw DomainError("edge frame needs t > 0");
  EdgeFrame fr;
  fr.spec = sp;
  fr.rho = rho;
  fr.t = t;
  fr.x = sp.C() * t - rho * std::log(t) / sp.B;
  fr.xi = fr.x / (4.0 * t);
  fr.k0 = -fr.xi;
  fr.gamma = rho - 0.25;
  if (rho < 0.25) {
    fr.regime = EdgeRegime::parabolic_only;
    fr.n = -1;
  } else {
    fr.regime = EdgeRegime::solitonic;
    fr.n = static_cast<int>(std::floor(rho - 0.25));
  }
  fr.phi_t = 2.0 * t * (sp.A * sp.A + sp.B * sp.B) +
             rho * sp.A * std::log(t) / sp.B;
  fr.nu = nu_of(sp, fr.k0);
  const double arg_chi = std::arg(chi_fn(sp, fr.k0, q));
  double arg_r = 0.0;
  if (fr.k0 > sp.A) arg_r = -kPi / 2.0;
  if (fr.k0 < sp.A) arg_r = kPi / 2.0;
  const double arg_gamma_inu =
      std::arg(specfun::gamma_complex(kI * fr.nu));
  fr.psi = 4.0 * t * fr.xi * fr.xi + fr.nu * std::log(8.0 * t) +
           2.0 * arg_chi - arg_r - arg_gamma_inu + kPi / 4.0;
  return fr;
}

}  // namespace dsw
