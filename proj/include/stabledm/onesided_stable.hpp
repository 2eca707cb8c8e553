#pragma once

// One-sided (totally skewed) stable toolkit for index beta in (0,1), in the
// normalisation E exp(-lambda S) = exp(-lambda^beta).  The subordinator with
// Laplace exponent lambda^beta at time t is t^{1/beta} S, so everything is
// done on the standard variable and rescaled at the interface.

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "stabledm/quadrature.hpp"
#include "stabledm/special.hpp"
#include "stabledm/types.hpp"

namespace stabledm {

namespace detail {

// Zolotarev's auxiliary function
//   A(phi) = [ sin(beta phi)^beta sin((1-beta) phi)^(1-beta) / sin(phi) ]^(1/(1-beta))
// on (0, pi); increasing, with A(0+) = beta^{beta/(1-beta)} (1-beta).
inline double kanter_a(double beta, double phi) {
  double lg = (beta * std::log(std::sin(beta * phi)) +
               (1.0 - beta) * std::log(std::sin((1.0 - beta) * phi)) -
               std::log(std::sin(phi))) /
              (1.0 - beta);
  return std::exp(lg);
}

inline double kanter_a0(double beta) {
  return std::exp((beta * std::log(beta) + (1.0 - beta) * std::log(1.0 - beta)) / (1.0 - beta));
}

// Convergent series of Pollard/Humbert type for the standard density,
//   g(x) = (1/pi) sum_{n>=1} (-1)^(n-1) Gamma(1+beta n)/n! sin(n pi beta) x^(-beta n - 1).
// Returns false when truncation or floating-point cancellation would leave
// more than `rel_budget` relative error.
inline bool onesided_series_std(double beta, double x, double rel_budget, double* out) {
  const int nmax = 200;
  double sum = 0.0, max_term = 0.0;
  double log_x = std::log(x);
  int tiny_run = 0;
  bool converged = false;
  for (int n = 1; n <= nmax; ++n) {
    double s = std::sin(n * kPi * beta);
    if (s == 0.0) continue;
    double lg = std::lgamma(1.0 + beta * n) - std::lgamma(n + 1.0) - (beta * n + 1.0) * log_x;
    if (lg > 700.0) return false;  // term overflow: series useless here
    double term = ((n % 2) ? 1.0 : -1.0) * std::exp(lg) * s;
    sum += term;
    max_term = std::max(max_term, std::abs(term));
    if (std::abs(term) < 1e-17 * std::max(std::abs(sum), 1e-300)) {
      if (++tiny_run >= 2) {
        converged = true;
        break;
      }
    } else {
      tiny_run = 0;
    }
  }
  if (!converged) return false;
  if (sum <= 0.0) return false;
  // cancellation: roundoff of the largest term relative to the result
  if (max_term * 0x1p-52 > rel_budget * sum) return false;
  *out = sum / kPi;
  return true;
}

// Zolotarev integral representation (exact for all x > 0):
//   g(x) = (beta/(1-beta)) x^{-1/(1-beta)} (1/pi) Int_0^pi A(phi) exp(-c A(phi)) dphi,
// with c = x^{-beta/(1-beta)}.  The integrand rises to a single peak and
// dies off at both ends, which adaptive Gauss-Kronrod handles directly.
inline double onesided_zolotarev_std(double beta, double x) {
  double c = std::pow(x, -beta / (1.0 - beta));
  auto h = [&](double phi) {
    double a = kanter_a(beta, phi);
    if (!(a < 1e300)) return 0.0;  // A -> inf near pi; exp(-cA) wins
    double e = c * a;
    return (e > 700.0) ? 0.0 : a * std::exp(-e);
  };
  double i = integrate(h, 0.0, kPi * 0.5, 1e-12) + integrate(h, kPi * 0.5, kPi, 1e-12);
  if (!(i > 0.0)) return 0.0;  // density underflows before the prefactor can blow up
  return beta / (1.0 - beta) * std::pow(x, -1.0 / (1.0 - beta)) * i / kPi;
}

// CDF of the standard variable, from the Kanter representation
//   P(S <= x) = (1/pi) Int_0^pi exp(-x^{-beta/(1-beta)} A(phi)) dphi.
inline double onesided_cdf_std(double beta, double x) {
  if (!(x > 0.0)) return 0.0;
  double c = std::pow(x, -beta / (1.0 - beta));
  auto h = [&](double phi) {
    double e = c * kanter_a(beta, phi);
    return (e > 700.0) ? 0.0 : std::exp(-e);
  };
  double i = integrate(h, 0.0, kPi * 0.5, 1e-12) + integrate(h, kPi * 0.5, kPi, 1e-12);
  return std::min(i / kPi, 1.0);
}

inline double onesided_density_std(double beta, double x) {
  if (!(x > 0.0)) return 0.0;
  double v;
  if (onesided_series_std(beta, x, 1e-13, &v)) return v;
  return onesided_zolotarev_std(beta, x);
}

// Quadrature rule for integrals Int_0^inf f(s) gamma_t(s) ds against the
// subordinator density: nodes s_i and weights w_i with sum w_i f(s_i).
// Built once per (beta, t) and reused across many f.
struct SubordinatorRule {
  std::vector<double> s;
  std::vector<double> w;

  template <typename F>
  double apply(const F& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) acc += w[i] * f(s[i]);
    return acc;
  }
  double mass() const {
    double acc = 0.0;
    for (double wi : w) acc += wi;
    return acc;
  }
};

// Construction: left of sigma = 1 a log substitution captures the
// essential-singularity bump; the tail uses u = sigma^{-beta}, whose
// Jacobian turns the power tail into an entire function of u, with the
// panel nearest u = 0 kept separate so slowly-varying integrands with
// structure far out in the tail stay resolved.
inline SubordinatorRule make_subordinator_rule(double beta, double t, int reps = 6) {
  SubordinatorRule rule;
  const double scale = std::pow(t, 1.0 / beta);
  const auto& absc = boost::math::quadrature::gauss<double, 32>::abscissa();
  const auto& wts = boost::math::quadrature::gauss<double, 32>::weights();

  auto add_panels = [&](auto&& map, double a, double b, int nrep) {
    for (int r = 0; r < nrep; ++r) {
      double lo = a + (b - a) * r / nrep, hi = a + (b - a) * (r + 1) / nrep;
      double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
      for (std::size_t k = 0; k < absc.size(); ++k) {
        for (double sgn : {-1.0, 1.0}) {
          if (absc[k] == 0.0 && sgn > 0) break;
          double u = mid + sgn * half * absc[k];
          auto [sigma, jac] = map(u);
          rule.s.push_back(sigma * scale);
          rule.w.push_back(wts[k] * half * jac * onesided_density_std(beta, sigma));
        }
      }
    }
  };

  // density falls below ~1e-18 for sigma < sigma_lo
  double big_k = (1.0 - beta) * std::pow(beta, beta / (1.0 - beta));
  double sigma_lo = std::pow(big_k / 46.0, (1.0 - beta) / beta);
  auto log_map = [](double u) { return std::pair(std::exp(u), std::exp(u)); };
  auto tail_map = [beta](double u) {
    double sigma = std::pow(u, -1.0 / beta);
    return std::pair(sigma, std::pow(u, -1.0 / beta - 1.0) / beta);
  };
  add_panels(log_map, std::log(sigma_lo), 0.0, reps);
  add_panels(tail_map, 0.02, 1.0, reps);
  add_panels(tail_map, 0.0, 0.02, reps);
  return rule;
}

// Mass-validated rule.  Refines once before giving up.
inline SubordinatorRule make_subordinator_rule_checked(double beta, double t) {
  for (int reps : {6, 12}) {
    SubordinatorRule r = make_subordinator_rule(beta, t, reps);
    if (std::abs(r.mass() - 1.0) < 5e-8) return r;
  }
  throw accuracy_error("subordinator quadrature rule failed mass validation",
                       std::abs(make_subordinator_rule(beta, t, 12).mass() - 1.0));
}

}  // namespace detail

}  // namespace stabledm
