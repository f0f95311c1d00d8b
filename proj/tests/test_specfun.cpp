#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "dsw/specfun.hpp"

// Reference constants below were frozen from tests/oracles/reference_values.py
// (mpmath at 40 digits).

using dsw::specfun::cplx;
using namespace dsw::specfun;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool close(cplx got, cplx want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

}  // namespace

TEST_SUITE("specfun") {

TEST_CASE("gamma: exact and frozen values") {
  CHECK(close(gamma_complex({1.0, 0.0}), {1.0, 0.0}, 1e-14));
  CHECK(close(gamma_complex({0.5, 0.0}), {std::sqrt(kPi), 0.0}, 1e-13));
  CHECK(close(gamma_complex({6.0, 0.0}), {120.0, 0.0}, 1e-13));
  CHECK(close(gamma_complex({0.3, 0.7}),
              {0.3096862567437491289981432, -0.8567877529392704959494605},
              1e-12));
  CHECK(close(gamma_complex({-1.5, 0.2}),
              {1.962555125802847257457518, 0.2784595531212624530626723},
              1e-12));
  CHECK(close(gamma_complex({0.0, 0.5}),
              {-0.3992794763291927125044534, -1.603388194139434445195513},
              1e-12));
}

TEST_CASE("gamma: functional equation on the |z| <= 50 disk") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> radial(0.1, 49.0);
  std::uniform_real_distribution<double> angular(-kPi, kPi);
  int tested = 0;
  while (tested < 200) {
    const double r = radial(rng), th = angular(rng);
    const cplx z = std::polar(r, th);
    // stay away from the poles so conditioning does not dominate
    if (z.imag() == 0.0 ||
        (z.real() < 0.5 &&
         std::abs(z - cplx(std::round(z.real()), 0.0)) < 0.1))
      continue;
    const cplx lhs = gamma_complex(z + 1.0);
    const cplx rhs = z * gamma_complex(z);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    ++tested;
  }
}

TEST_CASE("gamma: modulus identity on the imaginary axis") {
  // |Gamma(i nu)|^2 = pi / (nu sinh(pi nu))
  for (double nu : {0.05, 0.5, 2.0}) {
    const double m2 = std::norm(gamma_complex({0.0, nu}));
    CHECK(std::abs(m2 * nu * std::sinh(kPi * nu) / kPi - 1.0) <= 1e-10);
  }
}

TEST_CASE("gamma: poles rejected, reciprocal regularized") {
  CHECK_THROWS_AS(gamma_complex({0.0, 0.0}), dsw::PoleError);
  CHECK_THROWS_AS(gamma_complex({-3.0, 0.0}), dsw::PoleError);
  CHECK_THROWS_AS(gamma_complex({-2.0, 1e-13}), dsw::PoleError);
  CHECK(recip_gamma({-4.0, 0.0}) == cplx(0.0, 0.0));
  CHECK(close(recip_gamma({2.0, 0.0}), {1.0, 0.0}, 1e-13));
}

TEST_CASE("parabolic cylinder: ground state and frozen spot values") {
  for (cplx z : {cplx(0.3, 0.0), cplx(-1.2, 2.0), cplx(0.0, 3.0)}) {
    CHECK(close(parabolic_cylinder_D({0.0, 0.0}, z), std::exp(-0.25 * z * z),
                1e-13));
  }
  CHECK(close(parabolic_cylinder_D({0.3, 0.2}, {1.5, 0.5}),
              {0.666451453462656887652925, -0.1304641191788595935660278},
              1e-12));
  CHECK(close(
      parabolic_cylinder_D({0.0, -0.5},
                           2.0 * std::polar(1.0, -3.0 * kPi / 4.0) * 1.2),
      {-0.448994685889153885962548, -0.1627021828996460093554359}, 1e-12));
  CHECK(close(
      parabolic_cylinder_D(cplx(0.0, 0.5) - 1.0,
                           2.0 * std::polar(1.0, -kPi / 4.0) * 1.1),
      {-0.3769224979185781517436045, 0.4299630331117879869439345}, 1e-12));
  // large-argument regime
  CHECK(close(parabolic_cylinder_D({0.3, 0.0}, {8.0, 0.0}),
              {2.103366730426707486978715e-7, 0.0}, 1e-11));
  CHECK(close(parabolic_cylinder_D({0.25, 0.4}, 7.0 * std::polar(1.0, kPi / 3.0)),
              {-483.8017279245470917002391, 72.15064435602170048710749},
              1e-11));
  CHECK(close(parabolic_cylinder_D({0.0, -0.8}, {0.0, 12.0}),
              {-6084470053639058.264179264, -13834806215662163.73685966},
              1e-11));
}

TEST_CASE("parabolic cylinder: recurrence residual on the test grid") {
  const cplx as[] = {{-4.5, 0.0}, {-2.0, 1.5}, {0.0, -0.5},
                     {0.3, 0.2},  {2.5, 3.0},  {5.0, 0.0}};
  const cplx zs[] = {{4.8, 0.0}, {-2.0, 0.0}, {1.0, 1.0},
                     {-3.0, 4.0}, {0.0, 0.5},  {3.0, -2.0}};
  for (cplx a : as) {
    for (cplx z : zs) {
      const cplx dm = parabolic_cylinder_D(a - 1.0, z);
      const cplx d0 = parabolic_cylinder_D(a, z);
      const cplx dp = parabolic_cylinder_D(a + 1.0, z);
      const double scale =
          std::max({std::abs(dp), std::abs(z * d0), std::abs(a * dm), 1.0});
      CHECK(std::abs(dp - z * d0 + a * dm) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("parabolic cylinder: derivative identity via central differences") {
  const double h = 1e-5;
  const cplx as[] = {{0.3, 0.2}, {-1.5, 0.4}, {0.0, -0.7}};
  const cplx zs[] = {{1.5, -0.8}, {-0.4, 2.0}, {2.5, 0.0}};
  for (cplx a : as) {
    for (cplx z : zs) {
      const cplx fd = (parabolic_cylinder_D(a, z + h) -
                       parabolic_cylinder_D(a, z - h)) /
                      (2.0 * h);
      const cplx an = -0.5 * z * parabolic_cylinder_D(a, z) +
                      a * parabolic_cylinder_D(a - 1.0, z);
      const double scale = std::max(std::abs(an), 1.0);
      CHECK(std::abs(fd - an) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("parabolic cylinder: connection formula") {
  const cplx as[] = {{0.3, 0.2}, {0.0, -0.5}, {1.3, -0.4}};
  const cplx zs[] = {{1.5, -0.8}, {-0.7, 0.4}, {0.0, 2.5}};
  for (cplx a : as) {
    for (cplx z : zs) {
      const cplx lhs = parabolic_cylinder_D(a, z);
      const cplx rhs =
          std::exp(cplx(0.0, -kPi) * a) * parabolic_cylinder_D(a, -z) +
          std::sqrt(2.0 * kPi) * recip_gamma(-a) *
              std::exp(cplx(0.0, -kPi / 2.0) * (a + 1.0)) *
              parabolic_cylinder_D(-a - 1.0, cplx(0.0, 1.0) * z);
      const double scale = std::max(std::abs(lhs), 1.0);
      CHECK(std::abs(lhs - rhs) <= 1e-8 * scale);
    }
  }
}

TEST_CASE("parabolic cylinder: regime agreement in the overlap annulus") {
  // diagnostic mode must not trip away from the arg z = +-3pi/4 Stokes
  // directions, where the large-z expansion is documented to degrade
  for (double r : {6.15, 6.45}) {
    for (double th : {0.3, 0.9, kPi / 2.0, -1.2}) {
      CHECK_NOTHROW(
          parabolic_cylinder_D_checked({0.3, 0.2}, std::polar(r, th), 1e-8));
    }
  }
}

TEST_CASE("laguerre: low-order closed forms") {
  CHECK(laguerre_monic(0, {7.0, 0.0}) == cplx(1.0, 0.0));
  CHECK(close(laguerre_monic(1, {2.0, 0.5}), {0.5, 0.5}, 1e-15));
  CHECK(close(laguerre_monic(3, {2.0, 0.0}), {5.375, 0.0}, 1e-14));
  CHECK_THROWS_AS(laguerre_monic(-1, {0.0, 0.0}), dsw::DomainError);
}

TEST_CASE("laguerre: orthogonality under the half-integer weight") {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      QuadratureSpec q;
      // the integrand scale grows like the norm, so the absolute target has
      // to ride along or the roundoff floor of the panel sums is unreachable
      q.abs_tol = 1e-10 * std::max(1.0, laguerre_norm_sq(n));
      q.rel_tol = 1e-11;
      const cplx ip = integrate(
          [&](double s) {
            return std::sqrt(s) * std::exp(-s) * laguerre_monic(n, {s, 0.0}) *
                   laguerre_monic(m, {s, 0.0});
          },
          0.0, q.tail_cutoff, q);
      if (n == m) {
        CHECK(std::abs(ip.real() - laguerre_norm_sq(n)) <=
              1e-8 * laguerre_norm_sq(n));
      } else {
        CHECK(std::abs(ip) <= 1e-8 * laguerre_norm_sq(n));
      }
    }
  }
  CHECK(std::abs(laguerre_norm_sq(2) - 6.646701940895685102368128) <= 1e-12);
}

TEST_CASE("integrate: polynomials, oscillations, budget error") {
  QuadratureSpec q;
  const cplx p = integrate([](double s) { return cplx(s * s * s, 0.0); }, 0.0,
                           1.0, q);
  CHECK(std::abs(p.real() - 0.25) <= 1e-14);
  const cplx osc = integrate(
      [](double s) { return std::exp(cplx(0.0, 1.0) * s); }, 0.0, 2.0 * kPi, q);
  CHECK(std::abs(osc) <= 1e-12);
  QuadratureSpec tight;
  tight.max_subdivisions = 3;
  tight.abs_tol = 1e-14;
  tight.rel_tol = 1e-14;
  CHECK_THROWS_AS(integrate(
                      [](double s) {
                        return cplx(1.0 / std::sqrt(std::abs(s - 0.37) + 1e-14),
                                    0.0);
                      },
                      0.0, 1.0, tight),
                  dsw::QuadratureError);
  QuadratureSpec bad;
  bad.abs_tol = -1.0;
  CHECK_THROWS_AS(bad.validate(), dsw::DomainError);
}

TEST_CASE("cauchy transform: frozen values near and far") {
  QuadratureSpec q;
  const auto f = [](double s) { return cplx(std::sqrt(s) * std::exp(-s), 0.0); };
  CHECK(close(cauchy_halfline(f, {-1.0, 0.0}, q),
              {0.0, -0.06830300369597464126866455}, 1e-10));
  CHECK(close(cauchy_halfline(f, {2.0, 3.0}, q),
              {0.04067593465197509523523622, 0.007192807510873591004486804},
              1e-10));
  // far field goes through the moment expansion
  CHECK(close(cauchy_halfline(f, {0.0, 1000.0}, q),
              {1.410468669675348097346847e-4, -2.115692426291537230729121e-7},
              1e-9));
  CHECK(close(cauchy_halfline(f, {0.0, 10000.0}, q),
              {1.410473905976625590376888e-5, -2.115710753179424792790438e-9},
              1e-9));
  CHECK_THROWS_AS(cauchy_halfline(f, {1.0, 0.0}, q), dsw::DomainError);
}

TEST_CASE("cauchy transform: boundary values satisfy the jump relation") {
  QuadratureSpec q;
  const auto f = [](double s) { return cplx(std::sqrt(s) * std::exp(-s), 0.0); };
  for (double s0 : {0.4, 1.3, 2.9, 11.0}) {
    const cplx above = cauchy_halfline_side(f, s0, HalfLineSide::above, q);
    const cplx below = cauchy_halfline_side(f, s0, HalfLineSide::below, q);
    CHECK(std::abs(above - below - f(s0)) <= 1e-10);
    // side limits are the limits of the off-axis transform
    const cplx off = cauchy_halfline(f, {s0, 1e-5}, q);
    CHECK(std::abs(off - above) <= 1e-3);
  }
  CHECK_THROWS_AS(cauchy_halfline_side(f, -1.0, HalfLineSide::above, q),
                  dsw::DomainError);
  CHECK_THROWS_AS(cauchy_halfline_side(f, 1e9, HalfLineSide::above, q),
                  dsw::DomainError);
}

}  // TEST_SUITE
