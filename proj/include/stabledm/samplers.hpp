#pragma once

// Random samplers and path constructions: one-sided stable subordinators
// (Kanter transform), subordinated Brownian motion, radial 3-d stable
// marginals, the first-passage construction, and the Lamperti simulation of
// eta and Y.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "stabledm/levy.hpp"
#include "stabledm/onesided_stable.hpp"
#include "stabledm/special.hpp"
#include "stabledm/types.hpp"

namespace stabledm {

// Seeded random stream.  Distributions are generated from raw engine bits
// so that identical (seed, stream_id) reproduce bit-identical sequences on
// any platform.
class RngStream {
 public:
  explicit RngStream(RngSeed s) {
    std::seed_seq seq{static_cast<std::uint32_t>(s.seed & 0xffffffffu),
                      static_cast<std::uint32_t>(s.seed >> 32),
                      static_cast<std::uint32_t>(s.stream_id & 0xffffffffu),
                      static_cast<std::uint32_t>(s.stream_id >> 32),
                      std::uint32_t{0x9e3779b9}};
    eng_.seed(seq);
  }

  // uniform on the open interval (0,1)
  double u01() { return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1p-53; }

  double exponential() { return -std::log(u01()); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double r = std::sqrt(-2.0 * std::log(u01()));
    double phi = 2.0 * kPi * u01();
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

  int poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean > 30.0) return poisson(mean / 2.0) + poisson(mean - mean / 2.0);
    double limit = std::exp(-mean), prod = u01();
    int k = 0;
    while (prod > limit) {
      prod *= u01();
      ++k;
    }
    return k;
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Column-major-free flat sample storage: n rows of d components.
struct SampleMatrix {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<double> data;  // row-major

  double operator()(std::size_t i, std::size_t j) const { return data[i * d + j]; }
  double row_norm(std::size_t i) const {
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j) s += (*this)(i, j) * (*this)(i, j);
    return std::sqrt(s);
  }
};

// One draw of the standard one-sided beta-stable variable (Kanter):
//   S = (A(pi U) / E)^((1-beta)/beta).
inline double kanter_draw(double beta, RngStream& rng) {
  double u = rng.u01();
  double e = rng.exponential();
  double log_a = std::log(detail::kanter_a(beta, kPi * u));
  return std::exp((1.0 - beta) / beta * (log_a - std::log(e)));
}

// i.i.d. samples of Lambda_t, the subordinator with Laplace exponent
// lambda^{alpha/2}:  Lambda_t = t^{2/alpha} S.
inline std::vector<double> sample_subordinator(const StabilityIndex& alpha, double t,
                                               RngStream& rng, std::size_t n) {
  if (!alpha.pure_jump())
    throw std::domain_error("sample_subordinator: requires alpha in (0,2)");
  if (!(t > 0.0)) throw std::domain_error("sample_subordinator: t must be > 0");
  double beta = alpha.alpha() / 2.0;
  double scale = std::pow(t, 1.0 / beta);
  std::vector<double> out(n);
  for (auto& v : out) v = scale * kanter_draw(beta, rng);
  return out;
}

// Marginals of the isotropic stable process x0 + sqrt(2) B^(d)_{Lambda_t}.
inline SampleMatrix sample_stable_marginal(int d, const StabilityIndex& alpha, double t,
                                           std::vector<double> x0, RngStream& rng,
                                           std::size_t n) {
  if (d < 1 || static_cast<int>(x0.size()) != d)
    throw std::domain_error("sample_stable_marginal: x0 must have d components");
  if (!alpha.pure_jump())
    throw std::domain_error("sample_stable_marginal: requires alpha in (0,2)");
  if (!(t > 0.0)) throw std::domain_error("sample_stable_marginal: t must be > 0");
  double beta = alpha.alpha() / 2.0;
  double scale = std::pow(t, 1.0 / beta);
  SampleMatrix m;
  m.n = n;
  m.d = static_cast<std::size_t>(d);
  m.data.resize(n * m.d);
  for (std::size_t i = 0; i < n; ++i) {
    double lam = scale * kanter_draw(beta, rng);
    double sd = std::sqrt(2.0 * lam);
    for (int j = 0; j < d; ++j) m.data[i * m.d + j] = x0[j] + sd * rng.normal();
  }
  return m;
}

// Radial marginals |sqrt(2) B^(3)_{Lambda_t}| from (x,0,0): the Monte Carlo
// side of the Doob-McKean identity.
inline std::vector<double> sample_radial3_doob(const StabilityIndex& alpha, double t, double x,
                                               RngStream& rng, std::size_t n) {
  if (x < 0.0) throw std::domain_error("sample_radial3_doob: x must be >= 0");
  SampleMatrix m = sample_stable_marginal(3, alpha, t, {x, 0.0, 0.0}, rng, n);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m.row_norm(i);
  return out;
}

// First time sqrt(2) B hits level t for a one-dimensional Brownian motion:
// Gamma_t = t^2 / (2 G^2), a 1/2-stable subordinator in the level variable.
inline double first_passage_gamma_draw(double level, RngStream& rng) {
  double g = rng.normal();
  while (g == 0.0) g = rng.normal();
  return level * level / (2.0 * g * g);
}

inline std::vector<double> first_passage_gamma(double t, RngStream& rng, std::size_t n) {
  if (!(t > 0.0)) throw std::domain_error("first_passage_gamma: t must be > 0");
  std::vector<double> out(n);
  for (auto& v : out) v = first_passage_gamma_draw(t, rng);
  return out;
}

// Coupled passage times along one path, via independent increments of the
// level ladder; monotone in the level by construction.
inline std::vector<double> first_passage_gamma_levels(const std::vector<double>& levels,
                                                      RngStream& rng) {
  std::vector<double> out;
  out.reserve(levels.size());
  double prev_level = 0.0, acc = 0.0;
  for (double level : levels) {
    if (!(level > prev_level))
      throw std::domain_error("first_passage_gamma_levels: levels must increase");
    acc += first_passage_gamma_draw(level - prev_level, rng);
    out.push_back(acc);
    prev_level = level;
  }
  return out;
}

// Pathwise Doob-McKean construction: sqrt(2) R_{Gamma_t} with R an
// independent Bessel-3 marginal started from x / sqrt(2).
inline std::vector<double> sample_pathwise_doob(double t, double x, RngStream& rng,
                                                std::size_t n) {
  if (!(t > 0.0)) throw std::domain_error("sample_pathwise_doob: t must be > 0");
  if (x < 0.0) throw std::domain_error("sample_pathwise_doob: x must be >= 0");
  std::vector<double> out(n);
  double x0 = x / std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i) {
    double gamma = first_passage_gamma_draw(t, rng);
    double sd = std::sqrt(gamma);
    double a = x0 + sd * rng.normal();
    double b = sd * rng.normal();
    double c = sd * rng.normal();
    out[i] = std::sqrt(2.0 * (a * a + b * b + c * c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// eta simulation (Levy process with density mu)

// Precomputed truncation data for one jump cutoff.
struct EtaScheme {
  double eps;
  double rate_pos;    // Int_eps^inf mu
  double rate_neg;    // Int_eps^inf mu(-x) dx
  double sigma_eps;   // sqrt(Int_{|x|<eps} x^2 mu)
  double drift;       // pi/2 - Int_{|x|>=eps} x mu(x) dx

  explicit EtaScheme(double jump_cutoff)
      : eps(jump_cutoff),
        rate_pos(mu_tail_mass_positive(jump_cutoff)),
        rate_neg(mu_tail_mass_negative(jump_cutoff)),
        sigma_eps(std::sqrt(mu_small_jump_variance(jump_cutoff))),
        drift(kPi / 2.0 - mu_truncated_mean(jump_cutoff)) {}

  double rate() const { return rate_pos + rate_neg; }

  double draw_jump(RngStream& rng) const {
    double u = rng.u01() * rate();
    if (u < rate_pos) return mu_positive_jump_quantile(eps, u);
    return mu_negative_jump_quantile(eps, u - rate_pos);
  }

  // advance one step of length dt from state value
  double step(double value, double dt, RngStream& rng) const {
    value += drift * dt + sigma_eps * std::sqrt(dt) * rng.normal();
    int k = rng.poisson(rate() * dt);
    for (int j = 0; j < k; ++j) value += draw_jump(rng);
    return value;
  }
};

// Path of eta on the grid {0, step, 2 step, ..., horizon}: compound Poisson
// jumps above the cutoff, Brownian replacement of the small jumps, and the
// drift calibrated so the exact increment mean rate is pi/2.
inline PathSample simulate_eta(const LampertiSimConfig& cfg, RngStream& rng) {
  cfg.validate();
  EtaScheme scheme(cfg.jump_cutoff);
  std::size_t n_steps = static_cast<std::size_t>(std::ceil(cfg.horizon / cfg.step));
  PathSample path;
  path.times.reserve(n_steps + 1);
  path.values.reserve(n_steps + 1);
  double value = 0.0;
  path.times.push_back(0.0);
  path.values.push_back(value);
  for (std::size_t i = 1; i <= n_steps; ++i) {
    double t0 = (i - 1) * cfg.step;
    double t1 = std::min(i * cfg.step, cfg.horizon);
    value = scheme.step(value, t1 - t0, rng);
    path.times.push_back(t1);
    path.values.push_back(value);
  }
  return path;
}

// ---------------------------------------------------------------------------
// Lamperti transforms

// Y_t = exp(xi_{phi(t)}) with phi the inverse of the exponential clock
// A(s) = Int_0^s exp(xi_u) du (trapezoidal accumulation, grid inversion).
// The output keeps the input grid times that fall inside the reachable
// clock range [0, A(horizon)).
inline PathSample lamperti_time_change(const PathSample& xi) {
  xi.validate();
  if (xi.times.empty()) throw std::domain_error("lamperti_time_change: empty path");
  std::size_t m = xi.times.size();
  std::vector<double> clock(m);
  clock[0] = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    double dt = xi.times[i] - xi.times[i - 1];
    clock[i] = clock[i - 1] + 0.5 * dt * (std::exp(xi.values[i - 1]) + std::exp(xi.values[i]));
  }
  PathSample out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < m; ++j) {
    double t = xi.times[j];
    if (!(t < clock.back())) break;
    while (clock[k + 1] <= t) ++k;
    double w = (t - clock[k]) / (clock[k + 1] - clock[k]);
    double s = xi.times[k] + w * (xi.times[k + 1] - xi.times[k]);
    double xv = xi.values[k] + (s - xi.times[k]) / (xi.times[k + 1] - xi.times[k]) *
                                   (xi.values[k + 1] - xi.values[k]);
    out.times.push_back(t);
    out.values.push_back(std::exp(xv));
  }
  if (out.times.empty()) throw horizon_error("lamperti_time_change: clock shorter than first grid time");
  return out;
}

// Conditioned-process transform: accumulate A(s) = Int_0^s Y_u^{-1} du,
// invert on the grid, return the squared values at the transformed clock.
inline PathSample y_uparrow_transform(const PathSample& y) {
  y.validate();
  if (y.times.empty()) throw std::domain_error("y_uparrow_transform: empty path");
  for (double v : y.values)
    if (!(v > 0.0)) throw std::domain_error("y_uparrow_transform: path must be strictly positive");
  std::size_t m = y.times.size();
  std::vector<double> clock(m);
  clock[0] = 0.0;
  for (std::size_t i = 1; i < m; ++i) {
    double dt = y.times[i] - y.times[i - 1];
    clock[i] = clock[i - 1] + 0.5 * dt * (1.0 / y.values[i - 1] + 1.0 / y.values[i]);
  }
  PathSample out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < m; ++j) {
    double t = y.times[j];
    if (!(t < clock.back())) break;
    while (clock[k + 1] <= t) ++k;
    double w = (t - clock[k]) / (clock[k + 1] - clock[k]);
    double s = y.times[k] + w * (y.times[k + 1] - y.times[k]);
    double yv = y.values[k] + (s - y.times[k]) / (y.times[k + 1] - y.times[k]) *
                                  (y.values[k + 1] - y.values[k]);
    out.times.push_back(t);
    out.values.push_back(yv * yv);
  }
  if (out.times.empty()) throw horizon_error("y_uparrow_transform: clock shorter than first grid time");
  return out;
}

// Marginal Y_t with Y_0 = y0, by stepping eta until the exponential clock
// passes t (the path is continued, never redrawn, so the marginal is exact
// up to discretisation).
inline std::vector<double> sample_lamperti_y_marginal(double t, double y0,
                                                      const LampertiSimConfig& cfg,
                                                      RngStream& rng, std::size_t n) {
  cfg.validate();
  if (!(t > 0.0) || !(y0 > 0.0))
    throw std::domain_error("sample_lamperti_y_marginal: t and y0 must be > 0");
  EtaScheme scheme(cfg.jump_cutoff);
  std::vector<double> out(n);
  const double max_time = 64.0 * cfg.horizon;
  for (std::size_t i = 0; i < n; ++i) {
    double xi = std::log(y0);
    double clock = 0.0, s = 0.0;
    double e_prev = std::exp(xi);
    while (true) {
      double xi_next = scheme.step(xi, cfg.step, rng);
      double e_next = std::exp(xi_next);
      double inc = 0.5 * cfg.step * (e_prev + e_next);
      if (clock + inc > t) {
        // linear interpolation of xi inside the crossing step
        double w = (t - clock) / inc;
        out[i] = std::exp(xi + w * (xi_next - xi));
        break;
      }
      clock += inc;
      xi = xi_next;
      e_prev = e_next;
      s += cfg.step;
      if (s > max_time)
        throw horizon_error("sample_lamperti_y_marginal: clock failed to reach target time");
    }
  }
  return out;
}

}  // namespace stabledm
