#pragma once

#include <complex>

#include "dsw/errors.hpp"
#include "dsw/matrix2.hpp"
#include "dsw/scattering.hpp"
#include "dsw/specfun.hpp"
#include "dsw/spectrum.hpp"

namespace dsw {

// Local coordinates around the band endpoints and the moving saddle.
struct LocalFrame {
  cplx y;       // k - E0
  cplx y_d;     // k - conj(E0)
  cplx zp;      // 8B + 2i rho ln t / (B t)
  cplx zdp;     // conjugate slope for the mirror chart
  cplx z;       // y zp - 4i y^2
  cplx z_d;     // y_d zdp + 4i y_d^2
  cplx zeta;    // z t
  cplx zeta_d;  // z_d t
  cplx mu;      // k - k0
  cplx lambda;  // sqrt(2t) mu
  cplx theta;   // 2k^2 + 4 xi k
};

LocalFrame frame_at(const EdgeFrame& edge, cplx k);

// Radius of the endpoint lens, as a fraction of B.
inline constexpr double kDefaultLensRadiusFactor = 0.2;

// Half-integer-weight orthogonal-polynomial model matrix: row built from
// the monic polynomial of degree n and its weighted Cauchy transform,
// normalized so L(zeta) zeta^{n sigma3} -> I. n = 0 gives the unipotent
// matrix with the plain Cauchy transform of the weight.
Matrix2 laguerre_L(int n, cplx zeta, const specfun::QuadratureSpec& q = {});
Matrix2 laguerre_L(int n, double s, specfun::HalfLineSide side,
                   const specfun::QuadratureSpec& q = {});

// Mirror model matrix, the sigma1 conjugate of laguerre_L.
Matrix2 laguerre_Ld(int n, cplx zeta_d, const specfun::QuadratureSpec& q = {});
Matrix2 laguerre_Ld(int n, double s, specfun::HalfLineSide side,
                    const specfun::QuadratureSpec& q = {});

// 1/zeta coefficients of the far-field expansion of laguerre_L, and the
// constants removing the slowest off-diagonal decay.
struct LaguerreExpansion {
  double diag;  // n^2 + n/2, with opposite signs on the two diagonal slots
  cplx off12;   // -2 pi i n / (n! Gamma(n + 1/2))
  cplx off21;   // -n! Gamma(n + 3/2) / (2 pi i)
  cplx R1;      // -off21
  cplx R2;      // -off12
};
LaguerreExpansion laguerre_expansion_coeffs(int n);

// Constants of the parabolic-cylinder model problem for reflection data
// (r0, rho0) with nu = ln(1 + r0 rho0)/(2 pi).
struct PCParams {
  cplx r0;
  cplx rho0;
  cplx nu;
  cplx u_plus, u_minus;
  cplx v_plus, v_minus;
  cplx beta1, beta2;
};
PCParams make_pc_params(cplx r0, cplx rho0);

// Piecewise-analytic parabolic-cylinder matrix, one formula per half-plane,
// jumping on the real line by [[1, -rho0], [-r0, 1 + r0 rho0]].
Matrix2 pc_Psi(const PCParams& p, cplx lambda);
Matrix2 pc_Psi(const PCParams& p, cplx lambda, specfun::HalfLineSide side);

enum class PCSector {
  upper_right,   // arg in (0, pi/4)
  upper_middle,  // arg in (pi/4, 3pi/4)
  upper_left,    // arg in (3pi/4, pi)
  lower_left,    // arg in (-pi, -3pi/4)
  lower_middle,  // arg in (-3pi/4, -pi/4)
  lower_right,   // arg in (-pi/4, 0)
};

// The sectorwise model solution Psi lambda^{i nu sigma3} e^{i lambda^2
// sigma3} T(sector), normalized to I at infinity, jumping on the four
// diagonal rays and the real axis. pc_P resolves the sector from arg
// lambda and throws SectorError within 1e-12 radians of a ray; the
// explicit-sector form evaluates boundary values on the rays.
Matrix2 pc_P(const PCParams& p, cplx lambda);
Matrix2 pc_P_sector(const PCParams& p, cplx lambda, PCSector sector);

}  // namespace dsw
