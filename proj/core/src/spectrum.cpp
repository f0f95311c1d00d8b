#include "dsw/spectrum.hpp"

#include <cmath>
#include <numbers>

namespace dsw {

namespace {

void guard_endpoints(const Genus0Spectrum& sp, cplx k) {
  if (std::abs(k - sp.E0()) <= kEndpointRadius ||
      std::abs(k - sp.Ebar0()) <= kEndpointRadius) {
    throw EndpointError("evaluation within 1e-10 of a band endpoint");
  }
}

bool on_band(const Genus0Spectrum& sp, cplx k) {
  return k.real() == sp.A && std::abs(k.imag()) < sp.B;
}

// Side evaluations take k = A + iy on the band; reject anything else.
double band_ordinate(const Genus0Spectrum& sp, cplx k) {
  guard_endpoints(sp, k);
  if (std::abs(k.real() - sp.A) > 1e-9 || std::abs(k.imag()) >= sp.B) {
    throw DomainError("side evaluation requested off the band");
  }
  return k.imag();
}

}  // namespace

cplx kappa0(const Genus0Spectrum& sp, cplx k) {
  sp.validate();
  guard_endpoints(sp, k);
  if (on_band(sp, k)) {
    throw BranchError("kappa0 on the band: a BranchSide is required");
  }
  // The Moebius ratio maps the band onto (-inf, 0], so the principal log
  // realizes exactly the cut structure we need, normalized to 1 at infinity.
  const cplx w = (k - sp.E0()) / (k - sp.Ebar0());
  return std::exp(0.25 * std::log(w));
}

cplx kappa0(const Genus0Spectrum& sp, cplx k, BranchSide side) {
  sp.validate();
  const double y = band_ordinate(sp, k);
  const double m = std::pow((sp.B - y) / (sp.B + y), 0.25);
  const double quarter_turn = std::numbers::pi / 4.0;
  return std::polar(m, side == BranchSide::plus ? -quarter_turn
                                                : quarter_turn);
}

BandFunctions h_and_g(const Genus0Spectrum& sp, cplx k) {
  sp.validate();
  guard_endpoints(sp, k);
  if (on_band(sp, k)) {
    throw BranchError("h_and_g on the band: a BranchSide is required");
  }
  const cplx u = k - sp.A;
  // (k-A) sqrt(1 + B^2/(k-A)^2) keeps the principal cut on the band and
  // forces h ~ k - A at infinity.
  const cplx h = u * std::sqrt(1.0 + (sp.B / u) * (sp.B / u));
  return {h, 2.0 * (k + sp.A) * h};
}

BandFunctions h_and_g(const Genus0Spectrum& sp, cplx k, BranchSide side) {
  sp.validate();
  const double y = band_ordinate(sp, k);
  const double root = std::sqrt(sp.B * sp.B - y * y);
  const cplx h = (side == BranchSide::plus) ? cplx{root, 0.0}
                                            : cplx{-root, 0.0};
  return {h, 2.0 * (k + sp.A) * h};
}

namespace {

Matrix2 phi_from_parts(const Genus0Spectrum& sp, double x, double t, cplx kap,
                       const BandFunctions& bf) {
  const cplx i{0.0, 1.0};
  const Matrix2 outer = Matrix2::exp_sigma3(i * (x * sp.h0() + t * sp.g0()));
  const cplx khat = 1.0 / kap;
  const Matrix2 n0{0.5 * (kap + khat), 0.5 * (kap - khat),
                   0.5 * (kap - khat), 0.5 * (kap + khat)};
  const Matrix2 inner = Matrix2::exp_sigma3(-i * (x * bf.h + t * bf.g));
  return outer * (n0 * inner);
}

}  // namespace

Matrix2 baker_akhiezer_phi(const Genus0Spectrum& sp, double x, double t,
                           cplx k) {
  return phi_from_parts(sp, x, t, kappa0(sp, k), h_and_g(sp, k));
}

Matrix2 baker_akhiezer_phi(const Genus0Spectrum& sp, double x, double t,
                           cplx k, BranchSide side) {
  return phi_from_parts(sp, x, t, kappa0(sp, k, side), h_and_g(sp, k, side));
}

cplx q_plane_wave(const Genus0Spectrum& sp, double x, double t) {
  sp.validate();
  return sp.B * std::exp(cplx{0.0, 2.0 * (x * sp.h0() + t * sp.g0())});
}

}  // namespace dsw
