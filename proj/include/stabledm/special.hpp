#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace stabledm {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt2Pi = 2.50662827463100050242;

inline double norm_pdf(double z) { return std::exp(-0.5 * z * z) / kSqrt2Pi; }
inline double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// exp(-w) * I_0(w) for w >= 0, overflow-free.
inline double bessel_i0_scaled(double w) {
  if (w < 600.0) return std::exp(-w) * std::cyl_bessel_i(0.0, w);
  // Abramowitz-Stegun 9.7.1 asymptotic expansion.
  double inv8w = 1.0 / (8.0 * w);
  double s = 1.0, term = 1.0;
  for (int k = 1; k <= 6; ++k) {
    double num = 2.0 * k - 1.0;
    term *= num * num * inv8w / k;
    s += term;
  }
  return s / std::sqrt(2.0 * kPi * w);
}

// Density in r of |Z| where Z ~ N(center, sigma2 * I_d), |center| = x.
// d = 3 is the Bessel-3-type kernel (y/x)(phi(y-x) - phi(y+x)); d = 2 is
// the Rice density; d = 1 folds the line onto [0, inf).
inline double radial_gauss_density(int d, double x, double sigma2, double r) {
  if (!(sigma2 > 0.0)) throw std::domain_error("radial_gauss_density: sigma2 must be > 0");
  if (x < 0.0 || r < 0.0) throw std::domain_error("radial_gauss_density: x, r must be >= 0");
  double sigma = std::sqrt(sigma2);
  switch (d) {
    case 1:
      return norm_pdf((r - x) / sigma) / sigma + norm_pdf((r + x) / sigma) / sigma;
    case 2: {
      double w = r * x / sigma2;
      return r / sigma2 * std::exp(-(r - x) * (r - x) / (2.0 * sigma2)) * bessel_i0_scaled(w);
    }
    case 3: {
      double xr = x * r / sigma2;
      if (xr < 1.0) {
        // sinh form avoids cancellation when the two exponentials are close
        if (x == 0.0 || r == 0.0)
          return r * r * std::sqrt(2.0 / kPi) * std::exp(-(r * r + x * x) / (2.0 * sigma2)) / (sigma2 * sigma);
        return (r / (x * sigma * kSqrt2Pi)) * std::exp(-(r * r + x * x) / (2.0 * sigma2)) *
               2.0 * std::sinh(xr);
      }
      return (r / (x * sigma * kSqrt2Pi)) *
             (std::exp(-(r - x) * (r - x) / (2.0 * sigma2)) -
              std::exp(-(r + x) * (r + x) / (2.0 * sigma2)));
    }
    default:
      throw std::domain_error("radial_gauss_density: d must be 1, 2 or 3");
  }
}

// P(|Z| <= r) for Z ~ N(center, sigma2 * I_3), |center| = x.
inline double radial_gauss_cdf3(double x, double sigma2, double r) {
  if (!(sigma2 > 0.0)) throw std::domain_error("radial_gauss_cdf3: sigma2 must be > 0");
  if (r <= 0.0) return 0.0;
  double sigma = std::sqrt(sigma2);
  if (x == 0.0) {
    double u = r / sigma;
    return std::erf(u / std::sqrt(2.0)) - std::sqrt(2.0 / kPi) * u * std::exp(-0.5 * u * u);
  }
  double a = (r - x) / sigma, b = (r + x) / sigma;
  double v = norm_cdf(a) - norm_cdf(-b) -
             (sigma / (x * kSqrt2Pi)) * (std::exp(-0.5 * a * a) - std::exp(-0.5 * b * b));
  return std::min(std::max(v, 0.0), 1.0);
}

namespace detail {

// Lanczos approximation (g = 7, n = 9) for the complex Gamma function,
// with the reflection formula for Re(z) < 0.5.
inline std::complex<double> cgamma(std::complex<double> z) {
  static const double g = 7.0;
  static const double c[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * cgamma(1.0 - z));
  }
  z -= 1.0;
  std::complex<double> x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + g + 0.5;
  return kSqrt2Pi * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace detail

}  // namespace stabledm
