#include "dsw/nls_sim.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

namespace dsw::sim {

namespace {

constexpr double kPi = std::numbers::pi;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

struct FftPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  explicit FftPair(std::vector<cplx>& buf) {
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    const int n = static_cast<int>(buf.size());
    fwd = fftw_plan_dft_1d(n, p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(n, p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  FftPair(const FftPair&) = delete;
  FftPair& operator=(const FftPair&) = delete;
  ~FftPair() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
  }
};

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

// Local maxima of y above the floor, refined by a parabola through the
// three samples around each crest.
std::vector<double> refine_peaks(const Grid& g, const std::vector<int>& idx,
                                 const std::vector<double>& y,
                                 double floor_level) {
  std::vector<double> out;
  for (size_t j = 1; j + 1 < y.size(); ++j) {
    if (y[j] < floor_level) continue;
    if (!(y[j] >= y[j - 1] && y[j] > y[j + 1])) continue;
    const double den = y[j - 1] - 2.0 * y[j] + y[j + 1];
    double shift = 0.0;
    if (std::abs(den) > 0.0) shift = 0.5 * (y[j - 1] - y[j + 1]) / den;
    shift = std::clamp(shift, -0.5, 0.5);
    out.push_back(g.x(idx[j]) + shift * g.dx());
  }
  return out;
}

}  // namespace

std::vector<double> Grid::wavenumbers() const {
  std::vector<double> ks(n_points);
  const double dk = 2.0 * kPi / (x_max - x_min);
  for (int j = 0; j < n_points; ++j)
    ks[j] = dk * (j <= n_points / 2 ? j : j - n_points);
  return ks;
}

Grid make_grid(double x_min, double x_max, int n_points) {
  if (!(x_min < x_max)) throw DomainError("make_grid: need x_min < x_max");
  if (!power_of_two(n_points))
    throw DomainError("make_grid: n_points must be a positive power of two");
  return {x_min, x_max, n_points};
}

Field make_field(const Grid& grid, std::vector<cplx> values, double t) {
  if (static_cast<int>(values.size()) != grid.n_points)
    throw DomainError("make_field: value count does not match the grid");
  Field f;
  f.grid = grid;
  f.t = t;
  f.values = std::move(values);
  f.mass0 = mass(f);
  f.energy0 = energy(f);
  return f;
}

Field step_initial(const Genus0Spectrum& spec, const Grid& grid,
                   double ramp_width, double left_taper) {
  spec.validate();
  if (ramp_width < 0.0)
    throw DomainError("step_initial: ramp_width must be >= 0");
  if (left_taper < 0.0 || left_taper > 0.5 * (grid.x_max - grid.x_min))
    throw DomainError("step_initial: left_taper outside [0, half span]");
  std::vector<cplx> vals(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    const double x = grid.x(i);
    double w = 0.0;
    if (x < 0.0) {
      if (ramp_width == 0.0 || x <= -ramp_width) {
        w = 1.0;
      } else {
        const double s = -x / ramp_width;
        w = s * s * (3.0 - 2.0 * s);
      }
    }
    // The plane-wave half wraps around the periodic boundary and would meet
    // the vacuum half as a second sharp step; fading it out near the left end
    // keeps the field smooth across the wrap.
    if (left_taper > 0.0 && x < grid.x_min + left_taper) {
      const double s = (x - grid.x_min) / left_taper;
      w *= s * s * (3.0 - 2.0 * s);
    }
    vals[i] = w * spec.B * std::polar(1.0, -2.0 * spec.A * x);
  }
  return make_field(grid, std::move(vals), 0.0);
}

double mass(const Field& f) {
  double m = 0.0;
  for (const auto& z : f.values) m += std::norm(z);
  return m * f.grid.dx();
}

double energy(const Field& f) {
  const int n = static_cast<int>(f.values.size());
  std::vector<cplx> buf = f.values;
  FftPair fft(buf);
  fftw_execute(fft.fwd);
  const auto ks = f.grid.wavenumbers();
  const double inv_n = 1.0 / n;
  for (int i = 0; i < n; ++i) buf[i] *= cplx{0.0, ks[i] * inv_n};
  fftw_execute(fft.bwd);
  double e = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a2 = std::norm(f.values[i]);
    e += std::norm(buf[i]) - a2 * a2;
  }
  return e * f.grid.dx();
}

void evolve(Field& f, double dt, int n_steps, const EvolveOptions& opt) {
  const Grid& g = f.grid;
  const int n = g.n_points;
  if (!power_of_two(n))
    throw DomainError("evolve: n_points must be a positive power of two");
  if (static_cast<int>(f.values.size()) != n)
    throw DomainError("evolve: field length does not match the grid");
  if (!(dt > 0.0) || dt > 0.1 * g.dx() * (1.0 + 1e-12))
    throw DomainError("evolve: need 0 < dt <= 0.1 dx");
  if (n_steps < 0) throw DomainError("evolve: n_steps must be >= 0");

  const double cap = opt.blowup_factor * max_abs(f.values);

  const auto ks = g.wavenumbers();
  std::vector<cplx> half(n);
  for (int i = 0; i < n; ++i)
    half[i] = std::exp(cplx{0.0, -ks[i] * ks[i] * dt / 2.0}) / double(n);
  std::vector<double> damp(n, 1.0);
  bool sponged = false;
  if (opt.sponge_fraction > 0.0) {
    const double w = opt.sponge_fraction * (g.x_max - g.x_min);
    for (int i = 0; i < n; ++i) {
      const double x = g.x(i);
      double s = 0.0;
      if (x < g.x_min + w) s = (g.x_min + w - x) / w;
      if (x > g.x_max - w) s = (x - (g.x_max - w)) / w;
      if (s > 0.0) {
        damp[i] = std::exp(-opt.sponge_strength * s * s * s * s * dt);
        sponged = true;
      }
    }
  }

  FftPair fft(f.values);
  for (int step = 0; step < n_steps; ++step) {
    fftw_execute(fft.fwd);
    for (int i = 0; i < n; ++i) f.values[i] *= half[i];
    fftw_execute(fft.bwd);
    for (int i = 0; i < n; ++i) {
      cplx m = std::polar(1.0, 2.0 * std::norm(f.values[i]) * dt);
      if (sponged) m *= damp[i];
      f.values[i] *= m;
    }
    fftw_execute(fft.fwd);
    for (int i = 0; i < n; ++i) f.values[i] *= half[i];
    fftw_execute(fft.bwd);
    f.t += dt;

    const double peak = max_abs(f.values);
    if (cap > 0.0 && peak > cap)
      throw BlowupError("evolve: amplitude passed the runaway threshold");
    f.boundary_peak = std::max(
        {f.boundary_peak, std::abs(f.values[0]), std::abs(f.values[1]),
         std::abs(f.values[n - 2]), std::abs(f.values[n - 1])});
  }
}

EdgeComparison compare_edge(const Field& field, const ScatteringData& sd,
                            std::pair<double, double> window,
                            const specfun::QuadratureSpec& q) {
  if (!(field.t > 1.0)) throw DomainError("compare_edge: t must exceed 1");
  const Grid& g = field.grid;
  if (!(window.first < window.second) || window.first < g.x_min - 1e-9 ||
      window.second > g.x_max + 1e-9)
    throw DomainError("compare_edge: window must sit inside the grid");

  const double lnt = std::log(field.t);
  const double B = sd.spec.B;
  const double front = sd.spec.C() * field.t;
  std::vector<int> idx;
  std::vector<double> pred, num;
  for (int i = 0; i < g.n_points; ++i) {
    const double x = g.x(i);
    if (x < window.first || x > window.second) continue;
    idx.push_back(i);
    num.push_back(std::abs(field.values[i]));
    const double rho = (front - x) * B / lnt;
    if (rho < 0.0) {
      pred.push_back(0.0);
      continue;
    }
    const auto edge = make_edge_frame(sd.spec, rho, field.t, q);
    pred.push_back(std::abs(q_total(sd, edge).q_total));
  }

  EdgeComparison out;
  double l2 = 0.0;
  for (size_t j = 0; j < idx.size(); ++j) {
    const double d = std::abs(num[j] - pred[j]);
    out.linf_env = std::max(out.linf_env, d);
    l2 += d * d;
  }
  out.l2_env = std::sqrt(l2 * g.dx());

  const double floor_level = 0.6 * 2.0 * B;
  out.peak_centers_pred = refine_peaks(g, idx, pred, floor_level);
  out.peak_centers_num = refine_peaks(g, idx, num, floor_level);
  std::sort(out.peak_centers_pred.rbegin(), out.peak_centers_pred.rend());
  std::sort(out.peak_centers_num.rbegin(), out.peak_centers_num.rend());

  const double match_radius = std::max(5.0 * g.dx(), 1.0);
  for (const double p : out.peak_centers_pred) {
    double best = 0.0;
    double best_d = match_radius;
    bool found = false;
    for (const double m : out.peak_centers_num) {
      if (std::abs(m - p) <= best_d) {
        best_d = std::abs(m - p);
        best = m;
        found = true;
      }
    }
    if (found) out.peak_offsets.push_back(best - p);
  }
  return out;
}

void write_snapshot(const std::string& path, const Field& f) {
  std::ofstream out(path);
  if (!out) throw ConfigError("write_snapshot: cannot open " + path);
  char buf[320];
  out << "# dsw-edge schema v1\n";
  std::snprintf(buf, sizeof buf,
                "# snapshot t=%.17g x_min=%.17g x_max=%.17g n_points=%d\n",
                f.t, f.grid.x_min, f.grid.x_max, f.grid.n_points);
  out << buf;
  out << "x,re_q,im_q,abs_q\n";
  for (int i = 0; i < f.grid.n_points; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", f.grid.x(i),
                  f.values[i].real(), f.values[i].imag(),
                  std::abs(f.values[i]));
    out << buf;
  }
  if (!out) throw ConfigError("write_snapshot: write failed for " + path);
}

Field read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("read_snapshot: cannot open " + path);
  Field f;
  bool have_meta = false;
  std::vector<cplx> vals;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      double t = 0.0, x0 = 0.0, x1 = 0.0;
      int n = 0;
      if (std::sscanf(line.c_str(),
                      "# snapshot t=%lg x_min=%lg x_max=%lg n_points=%d", &t,
                      &x0, &x1, &n) == 4) {
        f.t = t;
        f.grid = {x0, x1, n};
        have_meta = true;
      }
      continue;
    }
    if (line.rfind("x,", 0) == 0) continue;
    double x = 0.0, re = 0.0, im = 0.0, ab = 0.0;
    if (std::sscanf(line.c_str(), "%lg,%lg,%lg,%lg", &x, &re, &im, &ab) < 3)
      throw ConfigError("read_snapshot: malformed row in " + path);
    vals.emplace_back(re, im);
  }
  if (!have_meta)
    throw ConfigError("read_snapshot: missing metadata header in " + path);
  if (static_cast<int>(vals.size()) != f.grid.n_points)
    throw ConfigError("read_snapshot: row count does not match n_points in " +
                      path);
  f.values = std::move(vals);
  f.mass0 = mass(f);
  f.energy0 = energy(f);
  return f;
}

}  // namespace dsw::sim
