#include "dsw/edge_asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dsw/parametrix.hpp"

namespace dsw {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

struct PoleData {
  cplx a, b, a_t, b_t;
};

PoleData solve_residue_system(cplx H, cplx H_d, cplx zp, cplx zdp, double B) {
  const cplx lead = 4.0 * B * B * zp * zdp;
  const cplx denom = lead - H * H_d;
  if (std::abs(denom) < 1e-14 * (std::abs(lead) + std::abs(H * H_d)))
    throw DegenerateError("refinement coefficients: 4B^2 z' z_d' - H H_d "
                          "is numerically singular");
  PoleData out;
  out.a = -2.0 * kI * B * H * H_d / denom;
  out.a_t = -out.a;
  out.b = -4.0 * B * B * H * zdp / denom;
  out.b_t = -4.0 * B * B * H_d * zp / denom;
  return out;
}

double log_hn(int n) { return std::lgamma(n + 1.0) + std::lgamma(n + 1.5); }

}  // namespace

std::optional<int> soliton_index(double rho) {
  if (rho < 0.0) throw DomainError("soliton_index: rho must be >= 0");
  if (rho < 0.25) return std::nullopt;
  return static_cast<int>(std::floor(rho - 0.25));
}

cplx RefinementCoeffs::q_inf() const {
  return 2.0 * kI * (scheme == RefinementScheme::first ? b1_t : b2);
}

RefinementCoeffs refinement_coeffs(const ScatteringData& sd,
                                   const EdgeFrame& edge,
                                   RefinementScheme scheme,
                                   const specfun::QuadratureSpec& q) {
  sd.spec.validate();
  const double t = edge.t;
  if (!(t > 1.0)) throw DomainError("refinement_coeffs: t must exceed 1");
  const double gamma = edge.gamma;
  const int n = (scheme == RefinementScheme::first)
                    ? static_cast<int>(std::floor(gamma))
                    : static_cast<int>(std::floor(gamma)) + 1;
  if (n < 0)
    throw DomainError("refinement_coeffs: index would be negative at this "
                      "gamma");

  const double B = sd.spec.B;
  const auto frame = frame_at(edge, sd.spec.E0());
  const cplx zp = frame.zp;
  const cplx zdp = frame.zdp;
  const cplx delta_xi = delta_fn(sd.spec, sd.spec.E0(), edge.k0, q);

  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(n+1)
  const double logt = std::log(t);
  const double mag1 = std::exp(log_hn(n) + (2.0 * gamma - 2.0 * n - 1.0) * logt);
  const cplx rot = std::polar(1.0, 2.0 * edge.phi_t);
  const double sq2B = std::sqrt(2.0 * B);
  const cplx pow_zp = std::pow(2.0 * B * zp, 2.0 * n + 0.5);
  const cplx pow_zdp = std::pow(2.0 * B * zdp, 2.0 * n + 0.5);
  const cplx two_pi_i = 2.0 * kPi * kI;

  RefinementCoeffs out;
  out.scheme = scheme;
  out.n = n;
  out.H = sign * mag1 * sq2B * sd.c0 /
          (rot * two_pi_i * delta_xi * delta_xi * pow_zp);
  out.H_d = sign * mag1 * rot * sq2B * std::conj(sd.c0) /
            (two_pi_i * std::conj(delta_xi) * std::conj(delta_xi) * pow_zdp);
  const PoleData first = solve_residue_system(out.H, out.H_d, zp, zdp, B);
  out.a1 = first.a;
  out.b1 = first.b;
  out.a1_t = first.a_t;
  out.b1_t = first.b_t;

  if (scheme == RefinementScheme::second) {
    const cplx R2 = laguerre_expansion_coeffs(n).R2;
    const double mag2 = std::exp((2.0 * n - 2.0 * gamma - 1.0) * logt);
    out.H2 = R2 * sign * mag2 * pow_zp * rot * delta_xi * delta_xi /
             (sd.c0 * sq2B);
    out.H2_d = R2 * sign * mag2 * pow_zdp * std::conj(delta_xi) *
               std::conj(delta_xi) / (std::conj(sd.c0) * sq2B * rot);
    const PoleData second = solve_residue_system(out.H2, out.H2_d, zp, zdp, B);
    out.a2 = second.a;
    out.b2 = second.b;
    out.a2_t = second.a_t;
    out.b2_t = second.b_t;
  }
  return out;
}

double envelope_log_coeff(const ScatteringData& sd, int n) {
  if (n < 0) throw DomainError("envelope_log_coeff: n must be >= 0");
  const double B = sd.spec.B;
  return std::log(2.0 * kPi) + 2.0 * std::log(std::abs(sd.delta_E0_edge)) +
         (2.0 * n + 1.5) * std::log(16.0 * B * B) - log_hn(n) -
         std::log(std::abs(sd.c0)) - 0.5 * std::log(2.0 * B);
}

double soliton_center(const ScatteringData& sd, int n, double t) {
  if (!(t > 1.0)) throw DomainError("soliton_center: t must exceed 1");
  const double A = sd.spec.A;
  const double B = sd.spec.B;
  return -4.0 * A * t -
         ((2.0 * n + 1.5) * std::log(t) + envelope_log_coeff(sd, n)) /
             (2.0 * B);
}

double phi_envelope(const ScatteringData& sd, const EdgeFrame& edge) {
  if (edge.regime != EdgeRegime::solitonic)
    throw DomainError("phi_envelope: no soliton in this regime");
  const double A = sd.spec.A;
  const double B = sd.spec.B;
  return 2.0 * B * (edge.x + 4.0 * A * edge.t) +
         (2.0 * edge.n + 1.5) * std::log(edge.t) +
         envelope_log_coeff(sd, edge.n);
}

cplx q_sol_eval(const ScatteringData& sd, const EdgeFrame& edge) {
  if (edge.regime != EdgeRegime::solitonic)
    throw DomainError("q_sol_eval: no soliton in this regime");
  const double A = sd.spec.A;
  const double B = sd.spec.B;
  const double phase =
      kPi * edge.n -
      2.0 * (A * edge.x + 2.0 * edge.t * (A * A - B * B)) -
      std::arg(sd.c0) + 2.0 * std::arg(sd.delta_E0_edge);
  return 2.0 * B * std::polar(1.0, phase) /
         std::cosh(phi_envelope(sd, edge));
}

cplx q_par_eval(const ScatteringData& sd, const EdgeFrame& edge) {
  if (edge.nu == 0.0) return 0.0;
  const double B = sd.spec.B;
  const cplx qs = (edge.regime == EdgeRegime::solitonic)
                      ? q_sol_eval(sd, edge)
                      : cplx{0.0};
  const double pref = std::sqrt(edge.nu / (2.0 * edge.t));
  const double ratio = std::norm(qs) / (4.0 * B * B);
  return pref * (std::polar(1.0, edge.psi) * (1.0 - ratio) -
                 std::polar(1.0, -edge.psi) * qs * qs / (4.0 * B * B));
}

EdgeResult q_total(const ScatteringData& sd, const EdgeFrame& edge) {
  EdgeResult res;
  res.regime = edge.regime;
  res.n = edge.n;
  if (edge.regime == EdgeRegime::solitonic) {
    res.q_sol = q_sol_eval(sd, edge);
    res.phi_env = phi_envelope(sd, edge);
    res.arg_qsol = std::arg(res.q_sol);
  } else {
    res.q_sol = 0.0;
    res.phi_env = std::numeric_limits<double>::quiet_NaN();
    res.arg_qsol = std::numeric_limits<double>::quiet_NaN();
  }
  res.q_par = q_par_eval(sd, edge);
  res.q_total = res.q_sol + res.q_par;
  return res;
}

}  // namespace dsw
