#include <catch_amalgamated.hpp>

#include <cmath>

#include "stabledm/kernels.hpp"
#include "stabledm/samplers.hpp"
#include "stabledm/stable_numerics.hpp"

using namespace stabledm;

TEST_CASE("pv_integral reproduces the pi^2/8 benchmark") {
  auto f = [](double u) {
    double d = u * u - 1.0;
    return u * u * std::log(u) / (d * d);
  };
  double v = pv_integral(f, 1.0, 0.0, INFINITY);
  CHECK(std::abs(v - kPi * kPi / 8.0) < 1e-8);
}

TEST_CASE("pv_integral normalisation identity of the generator lemma proof") {
  for (double x : {0.5, 1.0, 2.0}) {
    auto f = [x](double y) { return 2.0 * x * y / ((y - x) * (y + x) * (y + x)); };
    CHECK(std::abs(pv_integral(f, x, 0.0, INFINITY) - 1.0) < 1e-8);
  }
}

TEST_CASE("pv_integral sanity path without singularity: x/sinh") {
  auto f = [](double x) {
    double s = std::sinh(x);
    return std::isinf(s) ? 0.0 : x / s;
  };
  CHECK(std::abs(pv_integral(f, 0.0, 0.0, INFINITY) - kPi * kPi / 4.0) < 1e-8);
}

TEST_CASE("pv_integral rejects a genuinely divergent double pole") {
  // residue of the 1/(u-1)^2 part does not vanish: no principal value exists
  auto f = [](double u) {
    double d = u - 1.0;
    return 1.0 / (d * d);
  };
  CHECK_THROWS_AS(pv_integral(f, 1.0, 0.0, 4.0), accuracy_error);
}

TEST_CASE("pv_integral validates its config") {
  auto f = [](double u) { return u; };
  PvConfig bad;
  bad.excision = 0.0;
  CHECK_THROWS_AS(pv_integral(f, 1.0, 0.0, 2.0, bad), config_error);
}

TEST_CASE("stable_density_1d matches closed forms") {
  StabilityIndex a1(1.0), a2(2.0);
  CHECK(std::abs(stable_density_1d(a1, 1.0, 0.0) - 1.0 / kPi) < 1e-8);
  CHECK(std::abs(stable_density_1d(a2, 1.0, 0.0) - 1.0 / std::sqrt(4.0 * kPi)) < 1e-8);

  // grid agreement with the Cauchy density and the variance-2t Gaussian
  for (double t : {0.5, 1.0, 2.0}) {
    for (double z : {0.0, 0.3, 1.0, 4.0, 20.0}) {
      double c = t / (kPi * (z * z + t * t));
      CHECK(std::abs(stable_density_1d(a1, t, z) - c) < 1e-8);
      double g = std::exp(-z * z / (4.0 * t)) / std::sqrt(4.0 * kPi * t);
      CHECK(std::abs(stable_density_1d(a2, t, z) - g) < 1e-8);
    }
  }
}

TEST_CASE("stable_density_1d is symmetric and agrees with subordination") {
  StabilityIndex a(0.5);
  CHECK(stable_density_1d(a, 1.0, 0.7) == stable_density_1d(a, 1.0, -0.7));

  // independent route: integrate the alpha/2 subordinator against the
  // variance-2s Gaussian
  for (double alpha : {0.5, 1.0, 1.5}) {
    StabilityIndex ai(alpha);
    for (double z : {0.0, 0.7, 2.5}) {
      auto g = [&](double s) {
        return subordinator_density(ai, 1.0, s) * std::exp(-z * z / (4.0 * s)) /
               std::sqrt(4.0 * kPi * s);
      };
      double v = integrate(g, 0.0, 8.0 + z * z, 1e-10) + integrate_tail(g, 8.0 + z * z, 1e-10);
      CHECK(std::abs(stable_density_1d(ai, 1.0, z) - v) < 1e-6);
    }
  }
}

TEST_CASE("stable_density_1d rejects bad config and bad domain") {
  StabilityIndex a(0.8);
  CHECK_THROWS_AS(stable_density_1d(a, 0.0, 1.0), std::domain_error);
  FourierInversionConfig cfg;
  cfg.cutoff = 1.0;  // exp(-1) >> 1e-16
  CHECK_THROWS_AS(stable_density_1d(a, 1.0, 0.3, cfg), config_error);
}

TEST_CASE("stable_cdf_1d inverts to the arctan law at alpha = 1") {
  StabilityIndex a1(1.0);
  for (double z : {-5.0, -0.5, 0.0, 1.0, 3.0, 100.0}) {
    double want = 0.5 + std::atan(z / 2.0) / kPi;
    CHECK(std::abs(stable_cdf_1d(a1, 2.0, z) - want) < 1e-9);
  }
}

TEST_CASE("stable_density_1d derivative is consistent with differencing") {
  StabilityIndex a(1.3);
  for (double z : {0.4, 1.1, 3.0}) {
    double h = 1e-5;
    double fd = (stable_density_1d(a, 1.0, z + h) - stable_density_1d(a, 1.0, z - h)) / (2 * h);
    CHECK(std::abs(stable_density_1d_dz(a, 1.0, z) - fd) < 1e-7);
  }
}

TEST_CASE("isotropic radial density reproduces the radial 3-d Cauchy values") {
  StabilityIndex a1(1.0);
  CHECK(std::abs(isotropic_stable_radial_density(3, a1, 1.0, 1.0, 1.0) - 4.0 / (5.0 * kPi)) <
        1e-5);
  CHECK(std::abs(isotropic_stable_radial_density(3, a1, 1.0, 0.0, 1.0) - 1.0 / kPi) < 1e-5);
}

TEST_CASE("isotropic radial density integrates to one") {
  StabilityIndex a(0.7);
  auto rule = detail::make_subordinator_rule_checked(0.35, 1.0);
  auto f = [&](double r) { return isotropic_stable_radial_density(3, a, 1.0, 1.0, r, &rule); };
  double mass = integrate(f, 0.0, 40.0, 1e-9) + integrate_tail(f, 40.0, 1e-9);
  CHECK(std::abs(mass - 1.0) < 1e-4);
}

TEST_CASE("stable_jump_measure values and homogeneity") {
  StabilityIndex a1(1.0);
  double z1[1] = {1.0}, z2[1] = {2.0}, z3[3] = {0.0, 0.0, 1.0};
  CHECK(std::abs(stable_jump_measure(1, a1, z1) - 1.0 / kPi) < 1e-14);
  CHECK(std::abs(stable_jump_measure(1, a1, z2) - 1.0 / (4.0 * kPi)) < 1e-14);
  CHECK(std::abs(stable_jump_measure(3, a1, z3) - 1.0 / (kPi * kPi)) < 1e-14);

  RngStream rng(RngSeed{7, 0});
  for (double alpha : {0.5, 1.2, 1.9}) {
    StabilityIndex a(alpha);
    for (double c : {0.5, 2.0, 10.0}) {
      for (int rep = 0; rep < 20; ++rep) {
        double z[2] = {rng.normal(), rng.normal()};
        double cz[2] = {c * z[0], c * z[1]};
        double lhs = stable_jump_measure(2, a, cz);
        double rhs = std::pow(c, -(alpha + 2.0)) * stable_jump_measure(2, a, z);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
      }
    }
  }
  double z0[1] = {0.0};
  CHECK_THROWS_AS(stable_jump_measure(1, a1, z0), std::domain_error);
  StabilityIndex a2(2.0);
  CHECK_THROWS_AS(stable_jump_measure(1, a2, z1), std::domain_error);
}

TEST_CASE("StabilityIndex validates its range") {
  CHECK_THROWS_AS(StabilityIndex(0.0), std::domain_error);
  CHECK_THROWS_AS(StabilityIndex(2.1), std::domain_error);
  CHECK(StabilityIndex(2.0).pure_jump() == false);
  CHECK(StabilityIndex(1.3).pure_jump() == true);
}
