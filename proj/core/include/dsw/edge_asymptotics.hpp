#pragma once

#include <optional>

#include "dsw/scattering.hpp"

namespace dsw {

// Index of the soliton band containing rho: rho in [n+1/4, n+5/4) gives n,
// rho in [0, 1/4) gives nullopt (no soliton, only the oscillatory part).
// Throws DomainError for rho < 0.
std::optional<int> soliton_index(double rho);

enum class RefinementScheme { first, second };

// Pole data of the rational gauge that removes the residues of the model
// solution at E0 and conj(E0). The first set (H, H_d, a1, b1, a1_t, b1_t)
// always refers to the triangular scheme with index n; when scheme == second
// the H2 set carries the opposite-triangular scheme at the same n.
struct RefinementCoeffs {
  RefinementScheme scheme = RefinementScheme::first;
  int n = 0;
  cplx H, H_d;
  cplx a1, b1, a1_t, b1_t;
  cplx H2, H2_d;
  cplx a2, b2, a2_t, b2_t;

  // Leading coefficient of the reconstructed field, 2i b1_t for the first
  // scheme and 2i b2 for the second.
  cplx q_inf() const;
};

// Solves the residue-cancellation system in closed form. The index is
// floor(gamma) for the first scheme and floor(gamma)+1 for the second, per
// the accuracy windows of the two refinements. Requires t > 1 and a
// nonnegative resulting index. Throws DegenerateError if the denominator
// 4B^2 z' z_d' - H H_d degenerates (does not happen for t > 1, B > 0).
RefinementCoeffs refinement_coeffs(const ScatteringData& sd,
                                   const EdgeFrame& edge,
                                   RefinementScheme scheme,
                                   const specfun::QuadratureSpec& q = {});

// ln K_n for the envelope: K_n = 2 pi |delta(E0,A)|^2 (16 B^2)^{2n+3/2}
//                                 / (n! Gamma(n+3/2) |phi_hat(E0)| sqrt(2B)).
double envelope_log_coeff(const ScatteringData& sd, int n);

// Center of the n-th edge soliton at time t: the x where the cosh argument
// of the envelope vanishes, x* = -4At - [(2n+3/2) ln t + ln K_n] / (2B).
double soliton_center(const ScatteringData& sd, int n, double t);

// Argument of cosh in the soliton envelope at the frame's (x, t).
double phi_envelope(const ScatteringData& sd, const EdgeFrame& edge);

// The soliton term: 2B e^{i arg} / cosh(phi_envelope). Requires the
// solitonic regime.
cplx q_sol_eval(const ScatteringData& sd, const EdgeFrame& edge);

// The oscillatory term sqrt(nu/2t)(e^{i psi}(1 - |q_sol|^2/4B^2)
//                                  - e^{-i psi} q_sol^2/4B^2);
// q_sol enters as 0 in the parabolic-only regime, and nu = 0 short-circuits
// to 0.
cplx q_par_eval(const ScatteringData& sd, const EdgeFrame& edge);

struct EdgeResult {
  EdgeRegime regime = EdgeRegime::parabolic_only;
  int n = -1;
  cplx q_sol, q_par, q_total;
  double phi_env = 0.0;  // NaN in the parabolic-only regime
  double arg_qsol = 0.0; // NaN in the parabolic-only regime
};

// Full leading-edge prediction at the frame point.
EdgeResult q_total(const ScatteringData& sd, const EdgeFrame& edge);

}  // namespace dsw
