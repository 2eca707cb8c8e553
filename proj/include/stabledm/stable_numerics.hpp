#pragma once

// Numeric stable densities (Fourier inversion of exp(-|theta|^alpha t) and
// subordination), the stable jump measure, and the principal-value
// quadrature engine.

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "stabledm/onesided_stable.hpp"
#include "stabledm/quadrature.hpp"
#include "stabledm/special.hpp"
#include "stabledm/types.hpp"

namespace stabledm {

// ---------------------------------------------------------------------------
// Principal-value integration

namespace detail {

// Integral of f over [a,b] \ (x0-eps, x0+eps) using Gauss panels that grow
// geometrically away from the excision, plus transformed tails for infinite
// endpoints.  `nodes` panels use boost's runtime Gauss-Legendre.
class ExcisedIntegrator {
 public:
  ExcisedIntegrator(std::function<double(double)> f, double x0, double a, double b)
      : f_(std::move(f)), x0_(x0), a_(a), b_(b) {}

  double side(double eps, bool right) const {
    double edge = right ? b_ : a_;
    if (right && x0_ + eps >= edge) return 0.0;
    if (!right && x0_ - eps <= edge) return 0.0;
    double span_scale = std::max(1.0, std::abs(x0_));
    double total = 0.0;
    double lo = eps;  // distance from x0
    bool infinite = std::isinf(edge);
    double reach = infinite ? 64.0 * span_scale : std::abs(edge - x0_);
    while (lo < reach) {
      double hi = std::min(2.0 * lo, reach);
      // the panel that touches a finite domain edge may see an integrable
      // endpoint singularity of f there; give it tanh-sinh
      total += (hi == reach && !infinite) ? panel_edge(lo, hi, right) : panel(lo, hi, right);
      lo = hi;
    }
    if (infinite) {
      double s = right ? 1.0 : -1.0;
      double start = x0_ + s * reach;
      auto tail = [&](double u) { return f_(u); };
      total += right ? integrate_tail(tail, start)
                     : integrate_tail([&](double u) { return f_(-u); }, -start);
    }
    return total;
  }

  double whole(double eps) const { return side(eps, false) + side(eps, true); }

 private:
  // adaptive inside each geometric panel: integrands may be smooth but not
  // analytic (mollifier support edges), where fixed Gauss stalls
  double panel(double lo, double hi, bool right) const {
    double s = right ? 1.0 : -1.0;
    double ua = x0_ + s * lo, ub = x0_ + s * hi;
    if (!right) std::swap(ua, ub);
    return integrate(f_, ua, ub, 1e-12);
  }

  double panel_edge(double lo, double hi, bool right) const {
    double s = right ? 1.0 : -1.0;
    double ua = x0_ + s * lo, ub = x0_ + s * hi;
    if (!right) std::swap(ua, ub);
    return integrate_ts(f_, ua, ub, 1e-12);
  }

  std::function<double(double)> f_;
  double x0_, a_, b_;
};

// Neville polynomial extrapolation to eps = 0 through (eps_k, I_k).
inline double neville_to_zero(const std::vector<double>& eps, const std::vector<double>& val,
                              double* est_err) {
  std::vector<double> p = val;
  double prev = p.back();
  *est_err = std::numeric_limits<double>::infinity();
  for (std::size_t m = 1; m < p.size(); ++m) {
    for (std::size_t i = 0; i + m < p.size(); ++i)
      p[i] = (eps[i + m] * p[i] - eps[i] * p[i + 1]) / (eps[i + m] - eps[i]);
    *est_err = std::abs(p[0] - prev);
    prev = p[0];
  }
  return p[0];
}

}  // namespace detail

// (PV) integral of f over [a,b] through one interior singularity, as the
// limit of symmetrically excised integrals accelerated by extrapolation
// over halved excisions.  a and/or b may be infinite.  A singularity placed
// at a domain endpoint degenerates to an ordinary improper integral.
inline double pv_integral(const std::function<double(double)>& f, double singularity,
                          double a, double b, const PvConfig& cfg = {}) {
  if (!(cfg.excision > 0.0)) throw config_error("pv_integral: excision must be > 0");
  if (cfg.richardson_levels < 0) throw config_error("pv_integral: negative richardson_levels");
  detail::ExcisedIntegrator ex(f, singularity, a, b);

  int levels = cfg.richardson_levels;
  std::vector<double> epses, vals;
  // level k integrates the excision-eps_k region; reuse the level-0 outer
  // integral and add the uncovered shells as the excision shrinks
  double eps = cfg.excision;
  double acc = ex.whole(eps);
  epses.push_back(eps);
  vals.push_back(acc);
  for (int k = 1; k <= levels; ++k) {
    double eps_next = eps / 2.0;
    // uncovered shells, clipped to the domain (empty for edge singularities)
    if (singularity + eps_next < b)
      acc += gauss_panel<16>(f, singularity + eps_next, std::min(singularity + eps, b));
    if (singularity - eps_next > a)
      acc += gauss_panel<16>(f, std::max(singularity - eps, a), singularity - eps_next);
    eps = eps_next;
    epses.push_back(eps);
    vals.push_back(acc);
  }
  double err = 0.0;
  double result = detail::neville_to_zero(epses, vals, &err);
  double scale = std::max(std::abs(result), 1.0);
  if (!(err < 1e-7 * scale))
    throw accuracy_error("pv_integral: excision extrapolation did not converge", err);
  return result;
}

// ---------------------------------------------------------------------------
// One-dimensional symmetric stable density, exp(-|theta|^alpha t)

namespace detail {

inline double stable_cutoff(double alpha, double t) {
  return std::pow(39.0 / t, 1.0 / alpha);  // exp(-39) ~ 1e-17
}

// Large-|z| power series in u = t |z|^{-alpha}:
//   f_t(z)  = (1/(pi |z|)) sum (-1)^(n-1) Gamma(n a + 1)/n! sin(n pi a/2) u^n
//   f_t'(z) = -(1/(pi z^2)) sum ... (n a + 1) ... u^n        (z > 0)
//   1-F(z)  = (1/pi) sum ... Gamma(n a)/n! ... u^n
// Convergent for alpha < 1, asymptotic for alpha >= 1; accepted only when
// the terms have decayed below 1e-14 of the sum without cancellation blowup.
enum class SeriesKind { Density, Derivative, TailCdf };

inline bool stable_series_tail(double alpha, double t, double z, SeriesKind kind, double* out) {
  double az = std::abs(z);
  if (az <= 0.0) return false;
  double u = t * std::pow(az, -alpha);
  // convergent for alpha < 1 (monotone decay sets in early for u up to ~2);
  // asymptotic for alpha >= 1, where only small u is usable.  The guards
  // below reject divergent or cancelling attempts either way.
  if (!(u < (alpha < 1.0 ? 2.0 : 0.5))) return false;
  double sum = 0.0, max_term = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  bool done = false;
  for (int n = 1; n <= 60; ++n) {
    double sn = std::sin(n * kPi * alpha / 2.0);
    double lg;
    switch (kind) {
      case SeriesKind::Density:
        lg = std::lgamma(n * alpha + 1.0) - std::lgamma(n + 1.0);
        break;
      case SeriesKind::Derivative:
        lg = std::lgamma(n * alpha + 2.0) - std::lgamma(n + 1.0);
        break;
      case SeriesKind::TailCdf:
        lg = std::lgamma(n * alpha) - std::lgamma(n + 1.0);
        break;
    }
    double mag = std::exp(lg + n * std::log(u));
    if (mag > prev && mag < 1e-14 * std::abs(sum)) {
      done = true;
      break;
    }
    if (mag > prev) return false;  // asymptotic divergence before target met
    prev = mag;
    double term = ((n % 2) ? 1.0 : -1.0) * mag * sn;
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    if (mag < 1e-16 * std::max(std::abs(sum), 1e-300)) {
      done = true;
      break;
    }
  }
  if (!done || max_term * 0x1p-50 > 1e-11 * std::abs(sum)) return false;
  switch (kind) {
    case SeriesKind::Density:
      *out = sum / (kPi * az);
      break;
    case SeriesKind::Derivative:
      *out = -sum / (kPi * az * az) * (z >= 0 ? 1.0 : -1.0);
      break;
    case SeriesKind::TailCdf:
      *out = sum / kPi;
      break;
  }
  return true;
}

// Cosine/sine transforms of exp(-theta^alpha t) on [0, cutoff].  Panel
// knots sit at the oscillator's phase zeros theta_k = (k+1/2) pi / freq and
// at the envelope e-folding points theta = (j/t)^{1/alpha}, so each Gauss
// panel sees at most half a wave and one e-fold of decay.  The panel
// touching 0 goes to tanh-sinh, which absorbs the theta^alpha cusp.
template <typename G>
double oscillatory_transform(double alpha, double t, double freq, double cutoff, const G& g) {
  std::vector<double> knots;
  knots.push_back(cutoff);
  for (int j = 1; j < 46; ++j) {
    double th = std::pow(j / t, 1.0 / alpha);
    if (th < cutoff) knots.push_back(th);
  }
  if (freq > 0.0) {
    for (int k = 0;; ++k) {
      double th = (k + 0.5) * kPi / freq;
      if (th >= cutoff) break;
      knots.push_back(th);
    }
  }
  std::sort(knots.begin(), knots.end());
  double first = knots.front();
  double total = integrate_ts(g, 0.0, std::min(first, cutoff), 1e-13);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    total += gauss_panel<16>(g, knots[i], knots[i + 1]);
  return total;
}

}  // namespace detail

inline void validate_fourier_config(const StabilityIndex& alpha, double t,
                                    const FourierInversionConfig& cfg) {
  if (cfg.cutoff > 0.0 && std::exp(-std::pow(cfg.cutoff, alpha.alpha()) * t) >= 1e-16)
    throw config_error("FourierInversionConfig: cutoff too small for (alpha, t)");
}

// Density at z of X_t - X_0 for the symmetric stable normalisation
// E exp(i theta X_t) = exp(-|theta|^alpha t):
//   f_t(z) = (1/pi) Int_0^inf cos(theta z) exp(-theta^alpha t) dtheta.
inline double stable_density_1d(const StabilityIndex& alpha, double t, double z,
                                const FourierInversionConfig& cfg = {}) {
  if (!(t > 0.0)) throw std::domain_error("stable_density_1d: t must be > 0");
  validate_fourier_config(alpha, t, cfg);
  double a = alpha.alpha();
  double az = std::abs(z);
  double v;
  if (detail::stable_series_tail(a, t, az, detail::SeriesKind::Density, &v)) return std::max(v, 0.0);
  double cutoff = cfg.cutoff > 0.0 ? cfg.cutoff : detail::stable_cutoff(a, t);
  auto g = [&](double th) { return std::cos(th * az) * std::exp(-std::pow(th, a) * t); };
  v = detail::oscillatory_transform(a, t, az, cutoff, g) / kPi;
  if (v < 0.0) {
    if (v > -1e-12) return 0.0;
    throw accuracy_error("stable_density_1d: negative density beyond clipping threshold", -v);
  }
  return v;
}

// d/dz of the density above (odd in z).
inline double stable_density_1d_dz(const StabilityIndex& alpha, double t, double z,
                                   const FourierInversionConfig& cfg = {}) {
  if (!(t > 0.0)) throw std::domain_error("stable_density_1d_dz: t must be > 0");
  double a = alpha.alpha();
  double v;
  if (detail::stable_series_tail(a, t, z, detail::SeriesKind::Derivative, &v)) return v;
  double az = std::abs(z);
  double cutoff = cfg.cutoff > 0.0 ? cfg.cutoff : detail::stable_cutoff(a, t);
  auto g = [&](double th) { return th * std::sin(th * az) * std::exp(-std::pow(th, a) * t); };
  double mag = -detail::oscillatory_transform(a, t, az, cutoff, g) / kPi;
  return z >= 0.0 ? mag : -mag;
}

// CDF by the Gil-Pelaez inversion
//   F(z) = 1/2 + (1/pi) Int_0^inf sin(theta z)/theta exp(-theta^alpha t) dtheta.
inline double stable_cdf_1d(const StabilityIndex& alpha, double t, double z,
                            const FourierInversionConfig& cfg = {}) {
  if (!(t > 0.0)) throw std::domain_error("stable_cdf_1d: t must be > 0");
  double a = alpha.alpha();
  double az = std::abs(z);
  double tail;
  if (detail::stable_series_tail(a, t, az, detail::SeriesKind::TailCdf, &tail))
    return z >= 0.0 ? 1.0 - tail : tail;
  double cutoff = cfg.cutoff > 0.0 ? cfg.cutoff : detail::stable_cutoff(a, t);
  auto g = [&](double th) {
    double base = std::exp(-std::pow(th, a) * t);
    return th < 1e-300 ? az * base : std::sin(th * az) / th * base;
  };
  double i = detail::oscillatory_transform(a, t, az, cutoff, g) / kPi;
  double f = 0.5 + (z >= 0.0 ? i : -i);
  return std::min(std::max(f, 0.0), 1.0);
}

// ---------------------------------------------------------------------------
// Subordination-side densities

// Isotropic d-dimensional stable density at displacement |z| = r, via
//   P_t(z) = Int gamma_t(s) (4 pi s)^{-d/2} exp(-r^2/(4s)) ds
// (closed Poisson form for alpha = 1, Gaussian for alpha = 2).
inline double isotropic_stable_density_nd(int d, const StabilityIndex& alpha, double t, double r,
                                          const detail::SubordinatorRule* rule = nullptr) {
  if (!(t > 0.0)) throw std::domain_error("isotropic_stable_density_nd: t must be > 0");
  if (d < 1) throw std::domain_error("isotropic_stable_density_nd: d must be >= 1");
  double a = alpha.alpha();
  if (a == 1.0) {
    double c = std::exp(std::lgamma((d + 1.0) / 2.0)) / std::pow(kPi, (d + 1.0) / 2.0);
    return c * t / std::pow(t * t + r * r, (d + 1.0) / 2.0);
  }
  if (a == 2.0) return std::pow(4.0 * kPi * t, -d / 2.0) * std::exp(-r * r / (4.0 * t));
  auto body = [&](double s) {
    return std::pow(4.0 * kPi * s, -d / 2.0) * std::exp(-r * r / (4.0 * s));
  };
  if (rule) return rule->apply(body);
  auto r2 = detail::make_subordinator_rule_checked(a / 2.0, t);
  return r2.apply(body);
}

// Density in r of the radial part |sqrt(2) B^(d)_{Lambda_t}| started from
// radius x, i.e. the subordination integral against the noncentral radial
// Gaussian with covariance 2s.
inline double isotropic_stable_radial_density(int d, const StabilityIndex& alpha, double t,
                                              double x, double r,
                                              const detail::SubordinatorRule* rule = nullptr) {
  if (!(t > 0.0)) throw std::domain_error("isotropic_stable_radial_density: t must be > 0");
  if (x < 0.0 || r < 0.0)
    throw std::domain_error("isotropic_stable_radial_density: x, r must be >= 0");
  if (d < 1 || d > 3) throw std::domain_error("isotropic_stable_radial_density: d in {1,2,3}");
  double a = alpha.alpha();
  if (a == 2.0) return radial_gauss_density(d, x, 2.0 * t, r);
  auto body = [&](double s) { return radial_gauss_density(d, x, 2.0 * s, r); };
  if (rule) return rule->apply(body);
  auto r2 = detail::make_subordinator_rule_checked(a / 2.0, t);
  return r2.apply(body);
}

// CDF companion for d = 3 (the Monte Carlo reference distribution).
inline double isotropic_stable_radial_cdf3(const StabilityIndex& alpha, double t, double x,
                                           double r, const detail::SubordinatorRule* rule = nullptr) {
  if (!(t > 0.0)) throw std::domain_error("isotropic_stable_radial_cdf3: t must be > 0");
  if (r <= 0.0) return 0.0;
  double a = alpha.alpha();
  if (a == 2.0) return radial_gauss_cdf3(x, 2.0 * t, r);
  auto body = [&](double s) { return radial_gauss_cdf3(x, 2.0 * s, r); };
  if (rule) return rule->apply(body);
  auto r2 = detail::make_subordinator_rule_checked(a / 2.0, t);
  return r2.apply(body);
}

// ---------------------------------------------------------------------------
// Stable jump measure

// Levy density Pi(z) = 2^alpha pi^{-d/2} Gamma((d+alpha)/2)/|Gamma(-alpha/2)| |z|^{-alpha-d}.
inline double stable_jump_measure(int d, const StabilityIndex& alpha, std::span<const double> z) {
  if (!(alpha.alpha() < 2.0))
    throw std::domain_error("stable_jump_measure: requires alpha in (0,2)");
  if (static_cast<int>(z.size()) != d)
    throw std::domain_error("stable_jump_measure: z must have d components");
  double norm2 = 0.0;
  for (double zi : z) norm2 += zi * zi;
  if (norm2 == 0.0) throw std::domain_error("stable_jump_measure: z must be nonzero");
  double a = alpha.alpha();
  // |Gamma(-a/2)| = 2 Gamma(1 - a/2) / a
  double abs_gamma = 2.0 * std::tgamma(1.0 - a / 2.0) / a;
  double c = std::pow(2.0, a) * std::pow(kPi, -d / 2.0) * std::tgamma((d + a) / 2.0) / abs_gamma;
  return c * std::pow(norm2, -(a + d) / 2.0);
}

}  // namespace stabledm
