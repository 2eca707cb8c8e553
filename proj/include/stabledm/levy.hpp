#pragma once

// Levy layer of the radial 3-d Cauchy process: the characteristic exponent
// Psi in closed, Gamma-ratio and Levy-Khintchine forms, the Levy density mu,
// and the halved-frequency relation of the conditioned process.

#include <cmath>
#include <complex>

#include "stabledm/quadrature.hpp"
#include "stabledm/special.hpp"
#include "stabledm/types.hpp"

namespace stabledm {

using complex_t = std::complex<double>;

// Psi(z) = (z - i) tanh(pi z / 2).
inline complex_t psi_closed(double z) {
  return complex_t(z, -1.0) * std::tanh(kPi * z / 2.0);
}

// Psi(z) = 2 G((1-iz)/2)/G(-iz/2) * G((3+iz)/2)/G((2+iz)/2); equals
// psi_closed pointwise on the real line.  Near z = 0 the lone Gamma pole is
// removable and the closed-form Maclaurin expansion is substituted.
inline complex_t psi_gamma_form(double z) {
  if (std::abs(z) < 1e-10) {
    double w = kPi * z / 2.0;
    return complex_t(z, -1.0) * (w - w * w * w / 3.0);
  }
  complex_t iz(0.0, z);
  complex_t v = 2.0 * detail::cgamma((1.0 - iz) / 2.0) / detail::cgamma(-iz / 2.0) *
                detail::cgamma((3.0 + iz) / 2.0) / detail::cgamma((2.0 + iz) / 2.0);
  return v;
}

// Levy density mu(x) = (4/pi) e^{3x} / (e^{2x} - 1)^2, x != 0.  Written with
// expm1 so both tails evaluate without overflow or cancellation.
inline double levy_density_mu(double x) {
  if (x == 0.0) throw std::domain_error("levy_density_mu: x = 0 is a non-integrable point");
  if (x > 0.0) {
    double e = std::expm1(-2.0 * x);  // -(1 - e^{-2x})
    return 4.0 / kPi * std::exp(-x) / (e * e);
  }
  double e = std::expm1(2.0 * x);
  return 4.0 / kPi * std::exp(3.0 * x) / (e * e);
}

// x^2 mu(x), extended by continuity to 1/pi at x = 0.
inline double levy_density_mu_xx(double x) {
  if (x == 0.0) return 1.0 / kPi;
  double r = x / std::expm1(-2.0 * x);
  return 4.0 / kPi * r * r * std::exp(-x);
}

// Levy density of the process underlying the Cauchy process conditioned to
// stay positive: 2 mu^(x) = mu(x/2).
inline double levy_density_mu_uparrow(double x) { return 0.5 * levy_density_mu(x / 2.0); }

// Psi^(z) = Psi(2z).
inline complex_t psi_uparrow(double z) { return psi_closed(2.0 * z); }

namespace detail {

// 1 - e^{iw} + iw, series-safe for small |w|.
inline complex_t one_minus_exp_plus(double w) {
  if (std::abs(w) < 0.5) {
    complex_t iw(0.0, w), term = iw * iw / 2.0, sum = 0.0;
    for (int k = 2; k <= 24; ++k) {
      sum -= term;  // -(iw)^k / k!
      term *= iw / static_cast<double>(k + 1);
      if (std::abs(term) < 1e-19 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
  }
  return 1.0 - std::exp(complex_t(0.0, w)) + complex_t(0.0, w);
}

}  // namespace detail

// Levy-Khintchine evaluation
//   Psi(z) = -(pi/2) i z + Int_R (1 - e^{izx} + izx) mu(x) dx,
// truncated at |x| = 40 with the exponential tails of mu added in closed
// form against the polynomial part of the integrand.
inline complex_t psi_from_levy_khintchine(double z, double quad_tol = 1e-9) {
  const double big_x = 40.0;
  auto integrand = [&](double x, bool re_part) {
    // regular across 0: (1 - e^{izx} + izx) mu(x) -> z^2/(2 pi)
    complex_t v;
    if (std::abs(x) < 1e-6) {
      v = complex_t(z * z / 2.0, z * z * z * x / 6.0) * levy_density_mu_xx(x);
    } else {
      v = detail::one_minus_exp_plus(z * x) * levy_density_mu(x);
    }
    return re_part ? v.real() : v.imag();
  };
  auto piece = [&](bool re_part) {
    auto f = [&](double x) { return integrand(x, re_part); };
    return integrate(f, -big_x, -1.0, quad_tol) + integrate(f, -1.0, -1e-3, quad_tol) +
           integrate_ts(f, -1e-3, 1e-3, quad_tol) + integrate(f, 1e-3, 1.0, quad_tol) +
           integrate(f, 1.0, big_x, quad_tol);
  };
  complex_t body(piece(true), piece(false));
  // tails: mu ~ (4/pi) e^{-x} on the right, (4/pi) e^{3x} on the left; the
  // oscillatory e^{izx} part of the integrand there is below 1e-17 already
  complex_t iz(0.0, z);
  double c = 4.0 / kPi;
  complex_t tail_r = c * std::exp(-big_x) * (1.0 + iz * (big_x + 1.0));
  complex_t tail_l = c * std::exp(-3.0 * big_x) / 3.0 * (1.0 - iz * (big_x + 1.0 / 3.0));
  return -kPi / 2.0 * iz + body + tail_r + tail_l;
}

// ---------------------------------------------------------------------------
// Closed-form functionals of mu used by the eta simulator.  With
// y(eps) = 1/(e^{2 eps} - 1),
//   Int_eps^inf mu(x) dx    = (2/pi) H(y),  H(y) = sqrt(y(y+1)) + asinh(sqrt(y)),
//   Int_eps^inf mu(-x) dx   = (2/pi) G(y),  G(y) = sqrt(y(y+1)) - asinh(sqrt(y)).

namespace detail {

inline double mu_sub_y(double eps) { return 1.0 / std::expm1(2.0 * eps); }
inline double mu_h(double y) { return std::sqrt(y * (y + 1.0)) + std::asinh(std::sqrt(y)); }
inline double mu_g(double y) { return std::sqrt(y * (y + 1.0)) - std::asinh(std::sqrt(y)); }
inline double mu_h_prime(double y) { return std::sqrt((y + 1.0) / y); }
inline double mu_g_prime(double y) { return std::sqrt(y / (y + 1.0)); }

// invert a monotone increasing F on (0, inf) by guarded Newton
template <typename F, typename DF>
double invert_monotone(const F& f, const DF& df, double target, double y0) {
  double y = std::max(y0, 1e-300);
  for (int it = 0; it < 80; ++it) {
    double r = f(y) - target;
    if (std::abs(r) < 1e-14 * (std::abs(target) + 1e-12)) return y;
    double step = r / df(y);
    double next = y - step;
    while (next <= 0.0) {
      step *= 0.5;
      next = y - step;
    }
    y = next;
  }
  return y;
}

}  // namespace detail

// Mass of mu on [eps, inf).
inline double mu_tail_mass_positive(double eps) {
  if (!(eps > 0.0)) throw std::domain_error("mu_tail_mass_positive: eps must be > 0");
  return 2.0 / kPi * detail::mu_h(detail::mu_sub_y(eps));
}

// Mass of mu on (-inf, -eps].
inline double mu_tail_mass_negative(double eps) {
  if (!(eps > 0.0)) throw std::domain_error("mu_tail_mass_negative: eps must be > 0");
  return 2.0 / kPi * detail::mu_g(detail::mu_sub_y(eps));
}

// Total jump intensity outside (-eps, eps).
inline double mu_jump_intensity(double eps) {
  return mu_tail_mass_positive(eps) + mu_tail_mass_negative(eps);
}

// Quantiles of the truncated jump distribution: the positive-jump size X
// with P(X > x) proportional to Int_x mu, sampled by mass inversion.
// `mass` is uniform on (0, tail mass).
inline double mu_positive_jump_quantile(double eps, double mass) {
  double y_eps = detail::mu_sub_y(eps);
  double target = detail::mu_h(y_eps) - kPi / 2.0 * mass;  // H(y) at the jump
  target = std::max(target, 1e-15);                        // cap the far tail
  double y0 = target < 2.0 ? target * target / 4.0 : target;
  double y = detail::invert_monotone(detail::mu_h, detail::mu_h_prime, target, y0);
  return 0.5 * std::log1p(1.0 / y);
}

inline double mu_negative_jump_quantile(double eps, double mass) {
  double y_eps = detail::mu_sub_y(eps);
  double target = detail::mu_g(y_eps) - kPi / 2.0 * mass;
  target = std::max(target, 1e-15);
  double y0 = target < 1.0 ? std::pow(1.5 * target, 2.0 / 3.0) : target;
  double y = detail::invert_monotone(detail::mu_g, detail::mu_g_prime, target, y0);
  return -0.5 * std::log1p(1.0 / y);
}

// sigma^2(eps) = Int_{|x|<eps} x^2 mu(x) dx (small-jump variance rate).
inline double mu_small_jump_variance(double eps) {
  if (!(eps > 0.0)) throw std::domain_error("mu_small_jump_variance: eps must be > 0");
  return integrate(levy_density_mu_xx, -eps, eps, 1e-13);
}

// Mean of the truncated jump part, Int_{|x|>=eps} x mu(x) dx
//   = (4/pi) Int_eps^inf x e^{-x} / (1 - e^{-2x}) dx;
// converges to the full mean pi/2 as eps -> 0.
inline double mu_truncated_mean(double eps) {
  if (!(eps > 0.0)) throw std::domain_error("mu_truncated_mean: eps must be > 0");
  auto f = [](double x) { return x * std::exp(-x) / -std::expm1(-2.0 * x); };
  return 4.0 / kPi * (integrate(f, eps, 42.0, 1e-13) + std::exp(-42.0) * 43.0);
}

}  // namespace stabledm
