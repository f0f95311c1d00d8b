#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dsw/edge_asymptotics.hpp"

namespace dsw::sim {

struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = 0;
  double dx() const { return (x_max - x_min) / n_points; }
  double x(int i) const { return x_min + i * dx(); }
  // FFT-ordered wavenumbers 2 pi j / L with j wrapped to (-n/2, n/2].
  std::vector<double> wavenumbers() const;
};

// Validates n_points (power of two) and the interval. Throws DomainError.
Grid make_grid(double x_min, double x_max, int n_points);

struct Field {
  Grid grid;
  double t = 0.0;
  std::vector<cplx> values;
  double mass0 = 0.0;
  double energy0 = 0.0;
  double boundary_peak = 0.0;  // largest |q| seen at the outermost cells
};

// Wraps sampled values, recording the initial invariants.
Field make_field(const Grid& grid, std::vector<cplx> values, double t = 0.0);

// The step datum B e^{-2iAx} for x < 0, zero for x >= 0, with the left
// shoulder smoothed by a cubic ramp of the given width (0 keeps the jump).
// left_taper > 0 additionally fades the plane wave to zero over that width
// at the left end of the grid, so the periodic wrap sees no second step.
Field step_initial(const Genus0Spectrum& spec, const Grid& grid,
                   double ramp_width, double left_taper = 0.0);

double mass(const Field& f);
double energy(const Field& f);  // sum(|q_x|^2 - |q|^4) dx, spectral q_x

struct EvolveOptions {
  double sponge_fraction = 0.10;  // absorbing width per side, 0 disables
  double sponge_strength = 5.0;   // quartic profile amplitude
  double blowup_factor = 1e3;     // threshold relative to max initial |q|
};

// Strang split step: half kinetic multiplier e^{-i k^2 dt/2}, full nonlinear
// rotation e^{2i|q|^2 dt} with the sponge damping folded in, half kinetic.
// Throws DomainError unless 0 < dt <= 0.1 dx, BlowupError past the runaway
// threshold.
void evolve(Field& f, double dt, int n_steps, const EvolveOptions& opt = {});

struct EdgeComparison {
  double linf_env = 0.0;
  double l2_env = 0.0;
  std::vector<double> peak_centers_pred;  // refined from sampled |q_total|
  std::vector<double> peak_centers_num;   // refined from sampled |q|
  std::vector<double> peak_offsets;       // numeric minus predicted, matched
};

// Samples the leading-edge prediction on the grid restricted to the window,
// mapping x to rho = (Ct - x) B / ln t (prediction 0 ahead of the front),
// and reports envelope discrepancies plus per-peak center offsets.
// Requires field.t > 1 and the window inside the grid.
EdgeComparison compare_edge(const Field& field, const ScatteringData& sd,
                            std::pair<double, double> window,
                            const specfun::QuadratureSpec& q = {});

// CSV snapshot with columns x, re_q, im_q, abs_q and the field metadata in
// header comments.
void write_snapshot(const std::string& path, const Field& f);
Field read_snapshot(const std::string& path);

}  // namespace dsw::sim
