#pragma once

// Closed-form transition densities and their h-transformed kernels.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "stabledm/onesided_stable.hpp"
#include "stabledm/special.hpp"
#include "stabledm/stable_numerics.hpp"
#include "stabledm/types.hpp"

namespace stabledm {

// Standard Brownian transition density in R^d: (2 pi s)^{-d/2} exp(-|y-x|^2 / 2s).
inline double gauss_heat_kernel(int d, double s, std::span<const double> x,
                                std::span<const double> y) {
  if (!(s > 0.0)) throw std::domain_error("gauss_heat_kernel: s must be > 0");
  if (d < 1 || static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::domain_error("gauss_heat_kernel: dimension mismatch");
  double r2 = 0.0;
  for (int i = 0; i < d; ++i) r2 += (y[i] - x[i]) * (y[i] - x[i]);
  return std::pow(2.0 * kPi * s, -d / 2.0) * std::exp(-r2 / (2.0 * s));
}

inline double gauss_heat_kernel(int d, double s, double x, double y) {
  double xv[1] = {x}, yv[1] = {y};
  if (d != 1) throw std::domain_error("gauss_heat_kernel: scalar overload is d = 1");
  return gauss_heat_kernel(1, s, xv, yv);
}

// Cauchy transition density q_t(x,y) = (1/pi) t / ((y-x)^2 + t^2).
inline double cauchy_density(const KernelQuery& q) {
  if (!(q.t > 0.0)) throw std::domain_error("cauchy_density: t must be > 0");
  double d = q.y - q.x;
  return q.t / (kPi * (d * d + q.t * q.t));
}

// Bessel-3 kernel p_t^up(x,y) = (y/x)(p_t(x,y) - p_t(x,-y)) on the half
// line, with the entrance limit 2 y^2/t (2 pi t)^{-1/2} exp(-y^2/2t) at x = 0.
inline double bessel3_density(const KernelQuery& q) {
  if (!(q.t > 0.0)) throw std::domain_error("bessel3_density: t must be > 0");
  if (q.x < 0.0 || q.y < 0.0) throw std::domain_error("bessel3_density: x, y must be >= 0");
  return radial_gauss_density(3, q.x, q.t, q.y);
}

// Transition density of the stable subordinator with Laplace exponent
// lambda^{alpha/2}; the paper's alternating series with a Zolotarev-integral
// fallback where the series loses precision.
inline double subordinator_density(const StabilityIndex& alpha, double t, double s) {
  if (!alpha.pure_jump())
    throw std::domain_error("subordinator_density: requires alpha in (0,2)");
  if (!(t > 0.0) || !(s > 0.0))
    throw std::domain_error("subordinator_density: t and s must be > 0");
  double beta = alpha.alpha() / 2.0;
  double scale = std::pow(t, 1.0 / beta);
  return detail::onesided_density_std(beta, s / scale) / scale;
}

inline double subordinator_cdf(const StabilityIndex& alpha, double t, double s) {
  if (!alpha.pure_jump()) throw std::domain_error("subordinator_cdf: requires alpha in (0,2)");
  if (!(t > 0.0)) throw std::domain_error("subordinator_cdf: t must be > 0");
  if (s <= 0.0) return 0.0;
  double beta = alpha.alpha() / 2.0;
  return detail::onesided_cdf_std(beta, s * std::pow(t, -1.0 / beta));
}

// Explicit radial density of the 3-d Cauchy process (the alpha = 1 kernel):
//   q*_t(x,y) = (1/pi) 4 y^2 t / ((y^2-x^2)^2 + 2 t^2 (y^2+x^2) + t^4).
inline double cauchy_radial3_density(const KernelQuery& q) {
  if (!(q.t > 0.0)) throw std::domain_error("cauchy_radial3_density: t must be > 0");
  if (q.x < 0.0 || q.y < 0.0)
    throw std::domain_error("cauchy_radial3_density: x, y must be >= 0");
  double t2 = q.t * q.t;
  double dm = q.y - q.x, dp = q.y + q.x;
  // (y^2-x^2)^2 + 2t^2(y^2+x^2) + t^4 = ((y-x)^2 + t^2)((y+x)^2 + t^2)
  double den = (dm * dm + t2) * (dp * dp + t2);
  return 4.0 * q.y * q.y * q.t / (kPi * den);
}

// Closed-form CDF companion.
inline double cauchy_radial3_cdf(double t, double x, double y) {
  if (!(t > 0.0)) throw std::domain_error("cauchy_radial3_cdf: t must be > 0");
  if (y <= 0.0) return 0.0;
  if (x < 0.0) throw std::domain_error("cauchy_radial3_cdf: x must be >= 0");
  double atsum = std::atan((y - x) / t) + std::atan((y + x) / t);
  if (x == 0.0) {
    double v = atsum / kPi - 2.0 * t * y / (kPi * (y * y + t * t));
    return std::min(std::max(v, 0.0), 1.0);
  }
  double dm = (y - x) * (y - x) + t * t, dp = (y + x) * (y + x) + t * t;
  double v = t / (2.0 * kPi * x) * std::log(dm / dp) + atsum / kPi;
  return std::min(std::max(v, 0.0), 1.0);
}

// Doob-McKean kernel q*_t(x,y) = (y/x)(q_t(x,y) - q_t(x,-y)) for the
// symmetric alpha-stable process; closed forms for alpha = 1, Fourier
// inversion otherwise, analytic x -> 0 entrance limit.
inline double doob_mckean_kernel(const StabilityIndex& alpha, const KernelQuery& q) {
  if (!alpha.pure_jump())
    throw std::domain_error("doob_mckean_kernel: requires alpha in (0,2)");
  if (!(q.t > 0.0)) throw std::domain_error("doob_mckean_kernel: t must be > 0");
  if (q.x < 0.0 || q.y < 0.0)
    throw std::domain_error("doob_mckean_kernel: x, y must be >= 0");
  double a = alpha.alpha();
  if (a == 1.0) return cauchy_radial3_density(q);
  if (q.y == 0.0) return 0.0;
  double scale = q.y + std::pow(q.t, 1.0 / a);
  if (q.x < 1e-4 * scale) {
    // entrance limit -2 y f_t'(y); quadratic error in x
    return -2.0 * q.y * stable_density_1d_dz(alpha, q.t, q.y);
  }
  double diff = stable_density_1d(alpha, q.t, q.y - q.x) -
                stable_density_1d(alpha, q.t, q.y + q.x);
  return q.y / q.x * diff;
}

// Elliot-Feller interval kernel: method-of-images sum
//   p_t(x,y) = sum_n [ q_t(x, 2an + y) - q_t(x, 2an - y) ]
// truncated at |n| <= n_images.
inline double elliot_feller_kernel(const KernelQuery& q, const IntervalSpec& spec) {
  if (!(q.t > 0.0)) throw std::domain_error("elliot_feller_kernel: t must be > 0");
  if (q.x < 0.0 || q.x > spec.a || q.y < 0.0 || q.y > spec.a)
    throw std::domain_error("elliot_feller_kernel: x and y must lie in [0,a]");
  double sum = 0.0;
  for (int n = -spec.n_images; n <= spec.n_images; ++n) {
    double base = 2.0 * spec.a * n;
    sum += cauchy_density({q.t, q.x, base + q.y}) - cauchy_density({q.t, q.x, base - q.y});
  }
  return sum;
}

// A-posteriori bound on the discarded image tail: 2 Int_{2aN}^inf q_t(0,u) du.
inline double elliot_feller_tail_bound(double t, const IntervalSpec& spec) {
  return 2.0 / kPi * std::atan(t / (2.0 * spec.a * spec.n_images));
}

// Vandermonde h(x) = prod_{i<j} (x_i - x_j); positive inside the chamber.
inline double vandermonde(std::span<const double> coords) {
  double h = 1.0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j) h *= coords[i] - coords[j];
  return h;
}

inline double vandermonde(const ChamberPoint& x) { return vandermonde(x.coords()); }

// Dyson-type kernel for the stable process conditioned to the Weyl chamber:
//   D_t(x,y) = h(x)^{-1} h(y) sum_sigma sgn(sigma) P_t(x, sigma y),
// with P_t the isotropic n-dimensional stable density.  Desk scale n <= 3.
inline double dyson_stable_kernel(const StabilityIndex& alpha, double t, const ChamberPoint& x,
                                  const ChamberPoint& y,
                                  const detail::SubordinatorRule* rule = nullptr) {
  if (!(t > 0.0)) throw std::domain_error("dyson_stable_kernel: t must be > 0");
  const auto n = x.n();
  if (n != y.n()) throw std::domain_error("dyson_stable_kernel: dimension mismatch");
  if (n > 3) throw std::domain_error("dyson_stable_kernel: n <= 3 only");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double signed_sum = 0.0;
  do {
    // permutation sign by counting inversions
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double d = x[i] - y[perm[i]];
      r2 += d * d;
    }
    double p = isotropic_stable_density_nd(static_cast<int>(n), alpha, t, std::sqrt(r2), rule);
    signed_sum += (inversions % 2 ? -1.0 : 1.0) * p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return vandermonde(y) / vandermonde(x) * signed_sum;
}

}  // namespace stabledm
