#include <catch_amalgamated.hpp>

#include <cmath>

#include "stabledm/levy.hpp"
#include "stabledm/samplers.hpp"

using namespace stabledm;

TEST_CASE("psi_closed values and the pi/2 mean") {
  CHECK(std::abs(psi_closed(0.0)) == 0.0);
  complex_t v = psi_closed(1.0);
  double th = std::tanh(kPi / 2.0);  // 0.91715233566727
  CHECK(std::abs(v - complex_t(th, -th)) < 1e-14);

  double h = 1e-5;
  complex_t mean = complex_t(0.0, 1.0) * (psi_closed(h) - psi_closed(-h)) / (2.0 * h);
  CHECK(std::abs(mean - complex_t(kPi / 2.0, 0.0)) < 1e-6);
}

TEST_CASE("psi_gamma_form equals the closed form") {
  for (double z : {1.0, -2.5, 0.5, 5.0, -5.0, 2.0}) {
    CHECK(std::abs(psi_gamma_form(z) - psi_closed(z)) < 1e-10);
  }
  // removable point at z = 0
  CHECK(std::abs(psi_gamma_form(1e-12)) < 1e-11);

  // conjugation symmetry of a real Levy exponent
  RngStream rng(RngSeed{3, 0});
  for (int i = 0; i < 100; ++i) {
    double z = 6.0 * (rng.u01() - 0.5);
    CHECK(std::abs(psi_gamma_form(-z) - std::conj(psi_gamma_form(z))) < 1e-12);
  }
}

TEST_CASE("levy_density_mu frozen value and asymptotic laws") {
  // (4/pi) e^3 / (e^2 - 1)^2, evaluated to 14 digits before the build
  CHECK(std::abs(levy_density_mu(1.0) - 0.62649868162876) < 1e-13);
  CHECK_THROWS_AS(levy_density_mu(0.0), std::domain_error);

  // small-x law x^2 mu(x) -> 1/pi
  for (double x : {1e-4, -1e-4})
    CHECK(std::abs(x * x * levy_density_mu(x) - 1.0 / kPi) < 1e-3 / kPi);
  CHECK(levy_density_mu_xx(0.0) == 1.0 / kPi);

  // tail constants: mu(x) e^x -> 4/pi and mu(-x) e^{3x} -> 4/pi
  CHECK(std::abs(levy_density_mu(20.0) * std::exp(20.0) - 4.0 / kPi) < 1e-8);
  CHECK(std::abs(levy_density_mu(-20.0) * std::exp(60.0) - 4.0 / kPi) < 1e-8);

  // no overflow deep in either tail
  CHECK(levy_density_mu(500.0) >= 0.0);
  CHECK(levy_density_mu(-500.0) >= 0.0);
}

TEST_CASE("psi_from_levy_khintchine agrees with the closed form") {
  CHECK(std::abs(psi_from_levy_khintchine(1.0) - psi_closed(1.0)) < 1e-5);
  CHECK(std::abs(psi_from_levy_khintchine(0.0)) < 1e-10);

  // the linear coefficient -(pi/2) i recovered by differencing the LK form
  double h = 1e-4;
  complex_t d = (psi_from_levy_khintchine(h) - psi_from_levy_khintchine(-h)) / (2.0 * h);
  CHECK(std::abs(d - complex_t(0.0, -kPi / 2.0)) < 1e-5);
}

TEST_CASE("three-way agreement, hermitian symmetry, nonnegative real part") {
  for (double z : {-5.0, -2.0, -0.5, 0.5, 2.0, 5.0}) {
    complex_t pc = psi_closed(z);
    CHECK(std::abs(pc - psi_gamma_form(z)) < 1e-10);
    CHECK(std::abs(pc - psi_from_levy_khintchine(z)) < 1e-5);
    CHECK(std::abs(psi_closed(-z) - std::conj(pc)) < 1e-14);
    CHECK(pc.real() >= 0.0);
  }
}

TEST_CASE("psi_uparrow is the doubled-frequency exponent") {
  CHECK(std::abs(psi_uparrow(0.5) - psi_closed(1.0)) < 1e-15);
  CHECK(std::abs(psi_uparrow(0.0)) == 0.0);
  for (double x : {-2.0, -0.5, 0.5, 2.0})
    CHECK(std::abs(2.0 * levy_density_mu_uparrow(x) - levy_density_mu(x / 2.0)) < 1e-15);
}

TEST_CASE("closed-form jump tails match quadrature of mu") {
  double eps = 0.1;
  auto pos = integrate(static_cast<double (*)(double)>(levy_density_mu), eps, 1.0, 1e-12) +
             integrate_tail(static_cast<double (*)(double)>(levy_density_mu), 1.0, 1e-12);
  auto negf = [](double x) { return levy_density_mu(-x); };
  auto neg = integrate(negf, eps, 1.0, 1e-12) + integrate_tail(negf, 1.0, 1e-12);
  CHECK(std::abs(mu_tail_mass_positive(eps) - pos) < 1e-8);
  CHECK(std::abs(mu_tail_mass_negative(eps) - neg) < 1e-8);
  CHECK(std::abs(mu_jump_intensity(eps) - (pos + neg)) < 1e-8);
}

TEST_CASE("small-jump variance scales like (2/pi) eps") {
  double eps = 1e-3;
  CHECK(std::abs(mu_small_jump_variance(eps) / eps - 2.0 / kPi) < 1e-3);
  // and the truncated mean approaches pi/2 from below as eps -> 0
  CHECK(std::abs(mu_truncated_mean(1e-6) - kPi / 2.0) < 1e-5);
  CHECK(mu_truncated_mean(0.5) < kPi / 2.0);
}

TEST_CASE("jump quantiles invert the tail masses") {
  double eps = 1e-3;
  double tp = mu_tail_mass_positive(eps);
  for (double u : {0.01, 0.3, 0.7, 0.999}) {
    double x = mu_positive_jump_quantile(eps, u * tp);
    CHECK(x >= eps * 0.999999);
    // mass above x should be (1-u) tp
    CHECK(std::abs(mu_tail_mass_positive(x) - (1.0 - u) * tp) < 1e-10 * tp + 1e-14);
  }
  double tn = mu_tail_mass_negative(eps);
  for (double u : {0.01, 0.5, 0.99}) {
    double x = mu_negative_jump_quantile(eps, u * tn);
    CHECK(x <= -eps * 0.999999);
    CHECK(std::abs(mu_tail_mass_negative(-x) - (1.0 - u) * tn) < 1e-10 * tn + 1e-14);
  }
}
