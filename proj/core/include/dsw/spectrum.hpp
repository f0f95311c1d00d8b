#pragma once

#include <complex>

#include "dsw/errors.hpp"
#include "dsw/matrix2.hpp"

namespace dsw {

// Step-background spectral data for the focusing NLS half-line profile
// q(x,0) = B e^{-2iAx} (x < 0), 0 (x >= 0). The band is the vertical
// segment [E0, conj(E0)] with E0 = A + iB.
struct Genus0Spectrum {
  double A = 0.0;
  double B = 1.0;

  cplx E0() const { return {A, B}; }
  cplx Ebar0() const { return {A, -B}; }
  // leading-edge speed of the oscillatory region
  double C() const { return -4.0 * A; }
  double h0() const { return -A; }
  double g0() const { return B * B - 2.0 * A * A; }

  void validate() const {
    if (!(B > 0.0)) throw DomainError("Genus0Spectrum: B must be positive");
  }
};

// Which side of the band a boundary value is taken from. The band is
// oriented downward, so plus = left of the orientation = Re k > A.
enum class BranchSide { plus, minus };

inline constexpr double kEndpointRadius = 1e-10;

// ((k - E0)/(k - conj(E0)))^{1/4}, branch cut on the band, -> 1 at infinity.
cplx kappa0(const Genus0Spectrum& sp, cplx k);
cplx kappa0(const Genus0Spectrum& sp, cplx k, BranchSide side);

struct BandFunctions {
  cplx h;  // sqrt((k-A)^2 + B^2), ~ k - A at infinity
  cplx g;  // 2(k+A) h, ~ 2k^2 + g0 at infinity
};

BandFunctions h_and_g(const Genus0Spectrum& sp, cplx k);
BandFunctions h_and_g(const Genus0Spectrum& sp, cplx k, BranchSide side);

// Explicit plane-wave Lax-pair solution
//   e^{i(x h0 + t g0) sigma3} . N0(k) . e^{-i(x h + t g) sigma3},
// unimodular, jumping by [[0, i], [i, 0]] across the band.
Matrix2 baker_akhiezer_phi(const Genus0Spectrum& sp, double x, double t,
                           cplx k);
Matrix2 baker_akhiezer_phi(const Genus0Spectrum& sp, double x, double t,
                           cplx k, BranchSide side);

// B e^{2i(x h0 + t g0)}, the modulated plane wave filling x < 0.
cplx q_plane_wave(const Genus0Spectrum& sp, double x, double t);

}  // namespace dsw
