#pragma once

#include <complex>
#include <functional>

#include "dsw/errors.hpp"

namespace dsw::specfun {

using cplx = std::complex<double>;

// Controls for every adaptive quadrature in the library.
struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
  double tail_cutoff = 60.0;  // integration on [0,inf) is truncated here

  // Throws DomainError unless every field is positive.
  void validate() const;
};

// Complex Gamma function (Lanczos g=7 with reflection for Re z < 1/2).
// Throws PoleError within 1e-12 of a non-positive integer.
cplx gamma_complex(cplx z);

// 1/Gamma(z); returns exactly 0 at the poles of Gamma instead of throwing.
cplx recip_gamma(cplx z);

// Parabolic cylinder function D_a(z).
//
// |z| <= switch radius: pair of convergent Kummer series; above: the
// large-z expansion truncated at its smallest term. The large-z branch
// loses accuracy when arg z approaches +-3pi/4 at large |z|; callers keep
// their arguments inside that sector.
cplx parabolic_cylinder_D(cplx a, cplx z);

// Evaluation-regime switch radius used by parabolic_cylinder_D.
double parabolic_cylinder_switch_radius();

// Diagnostic: evaluates both regimes in the overlap annulus around the
// switch radius and throws AccuracyError if they disagree beyond
// `rel_tol` relative. Outside the annulus behaves like the plain call.
cplx parabolic_cylinder_D_checked(cplx a, cplx z, double rel_tol = 1e-8);

// Monic generalized Laguerre polynomial, weight s^{1/2} e^{-s}, via the
// three-term recurrence pi_{j+1} = (z - (2j+3/2)) pi_j - j(j+1/2) pi_{j-1}.
cplx laguerre_monic(int n, cplx zeta);

// Weighted L2 norm squared of the monic polynomial: n! * Gamma(n+3/2).
double laguerre_norm_sq(int n);

// Adaptive Gauss-Legendre integration of f over the finite interval [a,b].
// Throws QuadratureError when the subdivision budget is exhausted before
// the tolerance is met.
cplx integrate(const std::function<cplx(double)>& f, double a, double b,
               const QuadratureSpec& q);

// Cauchy transform over the positive half line,
//   C[f](zeta) = (2 pi i)^{-1} Int_0^inf f(s)/(s - zeta) ds,
// for zeta off [0,inf). f must decay fast enough that the part beyond
// tail_cutoff is below tolerance (this is verified and QuadratureError is
// thrown otherwise). Far field |zeta| >> tail_cutoff switches to an exact
// truncated moment expansion to avoid catastrophic cancellation.
cplx cauchy_halfline(const std::function<cplx(double)>& f, cplx zeta,
                     const QuadratureSpec& q);

enum class HalfLineSide { above, below };

// Boundary values of the half-line Cauchy transform at s0 in (0, tail_cutoff):
// principal value plus the half-residue +- f(s0)/2.
cplx cauchy_halfline_side(const std::function<cplx(double)>& f, double s0,
                          HalfLineSide side, const QuadratureSpec& q);

}  // namespace dsw::specfun
