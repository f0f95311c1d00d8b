#pragma once

#include <functional>
#include <utility>

#include "dsw/errors.hpp"
#include "dsw/matrix2.hpp"
#include "dsw/specfun.hpp"
#include "dsw/spectrum.hpp"

namespace dsw {

// Transition coefficients of the step background: a = (k0 + 1/k0)/2 and
// b = (k0 - 1/k0)/2 in terms of kappa0, so a^2 - b^2 = 1 identically.
std::pair<cplx, cplx> scattering_ab(const Genus0Spectrum& sp, cplx k);
std::pair<cplx, cplx> scattering_ab(const Genus0Spectrum& sp, cplx k,
                                    BranchSide side);

// r = b/a. Bounded on both sides of the band.
cplx reflection(const Genus0Spectrum& sp, cplx k);
cplx reflection(const Genus0Spectrum& sp, cplx k, BranchSide side);

// |r(s)|^2 on the real axis in closed form, continuous through s = A where
// it equals 1 (the side limits of r differ only in phase there).
double abs_r_squared(const Genus0Spectrum& sp, double s);

// Difference of the boundary values of r across the band, minus side first.
cplx f_jump(const Genus0Spectrum& sp, cplx k_on_band);

// Limit of f(k) e^{i pi/4} / sqrt(i(k - E0)) along k = E0 - i eps,
// Richardson-extrapolated in sqrt(eps). Throws ConvergenceError if the last
// two extrapolants disagree beyond 1e-6.
cplx phi_hat_E0(const Genus0Spectrum& sp);

// exp[(2 pi i)^{-1} Int_{-inf}^{k0} log_jump(s)/(s - k) ds] for a real
// integrable log-jump with one derivative kink at kink_at. Exposed so the
// quadrature core can be exercised with synthetic jump data.
cplx delta_from_log_jump(const std::function<double(double)>& log_jump,
                         double kink_at, cplx k, double k0,
                         const specfun::QuadratureSpec& q);

// Boundary values of the same exponential on the ray, s0 < k0: principal
// value plus the half-residue +- i pi log_jump(s0).
cplx delta_from_log_jump_side(const std::function<double(double)>& log_jump,
                              double kink_at, double s0, double k0,
                              specfun::HalfLineSide side,
                              const specfun::QuadratureSpec& q);

// The partial-transmission factor delta(k, xi) with log-jump
// ln(1 + |r(s)|^2) on (-inf, k0]. k must stay off the closed ray.
cplx delta_fn(const Genus0Spectrum& sp, cplx k, double k0,
              const specfun::QuadratureSpec& q = {});
cplx delta_fn_side(const Genus0Spectrum& sp, double s0, double k0,
                   specfun::HalfLineSide side,
                   const specfun::QuadratureSpec& q = {});

// ln(1 + |r(k0)|^2) / (2 pi), side-averaged through k0 = A.
double nu_of(const Genus0Spectrum& sp, double k0);

// Regularized value of delta at k = k0 itself:
//   (k0 + N)^{i nu} exp[(I1 + I2)/(2 pi i)],
// I1 subtracting the endpoint logarithm on [-N, k0], I2 the remaining tail.
// Unimodular, and independent of the split point N > -k0.
cplx chi_from_log_jump(const std::function<double(double)>& log_jump,
                       double log_jump_at_k0, double kink_at, double k0,
                       double N, const specfun::QuadratureSpec& q);
cplx chi_fn(const Genus0Spectrum& sp, double k0, double N,
            const specfun::QuadratureSpec& q = {});
// N defaulted to max(5, |k0| + 3).
cplx chi_fn(const Genus0Spectrum& sp, double k0,
            const specfun::QuadratureSpec& q = {});

// Oscillatory-region jump matrix at the point k of the contour: the real
// axis away from A, or the open band halves, with theta = 2k^2 + 4 xi k
// and xi = x/(4t). Throws BranchError at k = A.
Matrix2 jump_J(const Genus0Spectrum& sp, double x, double t, cplx k);

// Frozen per-background scattering constants consumed downstream.
struct ScatteringData {
  Genus0Spectrum spec;
  cplx phi_hat_E0{};    // cached limit
  cplx c0{};            // the same constant under the name the train uses
  cplx delta_E0_edge{}; // delta(E0, k0 = A)

  std::pair<cplx, cplx> ab(cplx k) const { return scattering_ab(spec, k); }
  cplx r(cplx k) const { return reflection(spec, k); }
  cplx f(cplx k) const { return f_jump(spec, k); }
};

ScatteringData make_scattering_data(const Genus0Spectrum& sp,
                                    const specfun::QuadratureSpec& q = {});

enum class EdgeRegime { parabolic_only, solitonic };

// Leading-edge observation frame x = C t - rho ln t / B and the slow
// variables derived from it.
struct EdgeFrame {
  Genus0Spectrum spec;
  double rho = 0.0;
  double t = 0.0;
  double x = 0.0;
  double xi = 0.0;     // x / (4t)
  double k0 = 0.0;     // -xi, the moving saddle
  double gamma = 0.0;  // rho - 1/4
  EdgeRegime regime = EdgeRegime::parabolic_only;
  int n = -1;          // soliton index; -1 in the parabolic-only regime
  double phi_t = 0.0;  // 2t(A^2+B^2) + rho A ln t / B
  double nu = 0.0;
  double psi = 0.0;    // 4t xi^2 + nu ln(8t) + 2 arg chi - arg r - arg Gamma(i nu) + pi/4
};

EdgeFrame make_edge_frame(const Genus0Spectrum& sp, double rho, double t,
                          const specfun::QuadratureSpec& q = {});

}  // namespace dsw
