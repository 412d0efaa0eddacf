#include <cmath>
#include <numbers>

#include <doctest.h>

#include "nda/quadrature.hpp"
#include "nda/random.hpp"
#include "nda/sampling.hpp"
#include "nda/state_catalog.hpp"

using namespace nda;

TEST_CASE("chain streams are reproducible and distinct") {
  ChainRng a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  const auto x = a.bits();
  CHECK(x == b.bits());
  CHECK(x != c.bits());
  CHECK(x != d.bits());
}

TEST_CASE("random variates have the right first two moments") {
  ChainRng rng(1, 0);
  const int n = 200000;
  double su = 0, sn = 0, sn2 = 0, se = 0, sg = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK((u >= 0.0 && u < 1.0));
    su += u;
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
    se += rng.exponential(2.0);
    sg += rng.gamma_int(3, 0.5);
  }
  CHECK(su / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(sn / n == doctest::Approx(0.0).scale(1.0).epsilon(0.01));
  CHECK(sn2 / n == doctest::Approx(1.0).epsilon(0.01));
  CHECK(se / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(sg / n == doctest::Approx(6.0).epsilon(0.01));
  const Vec3 v = rng.unit_vector();
  CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("reference densities are normalized") {
  const auto rule = composite_gauss_legendre(0.0, 200.0, 100, 16);
  const double four_pi = 4.0 * std::numbers::pi;
  for (double rate : {0.5, 1.0}) {
    const auto g = ReferenceDensity::exponential(1, rate);
    const double norm = rule.integrate([&](double r) { return four_pi * r * r * g.density(Configuration(1, {r, 0, 0})); });
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  }
  const auto h = ReferenceDensity::gaussian(1, 0.25);
  const auto rule_g = composite_gauss_legendre(0.0, 40.0, 40, 16);
  const double norm = rule_g.integrate([&](double r) { return four_pi * r * r * h.density(Configuration(1, {0, r, 0})); });
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reference density samples match the radial moments") {
  ChainRng rng(2, 0);
  const auto g = ReferenceDensity::exponential(2, 0.5);
  Configuration R(2);
  double sum_r = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    g.sample(rng, R);
    sum_r += R.position(1).norm();
    CHECK(g.log_density(R) == doctest::Approx(std::log(g.density(R))));
  }
  CHECK(sum_r / n == doctest::Approx(6.0).epsilon(0.01));  // Gamma(3, 1/2)
}

TEST_CASE("Metropolis walk samples |Psi| of the 2p orbital") {
  const auto state = catalog_lookup("2P_2p");
  ChainRng rng(3, 0);
  const auto g = reference_density(state);
  MetropolisWalker walker(state.wave_function(), 1.0, state.default_step, starting_configuration(state.wave_function(), g, rng));
  for (int i = 0; i < 5000; ++i) walker.sweep(rng);
  double sum_r = 0;
  const int n = 400000;
  for (int i = 0; i < n; ++i) {
    walker.sweep(rng);
    sum_r += walker.configuration().position(0).norm();
  }
  // |Psi| radial density r^3 exp(-r/2): mean 8
  CHECK(sum_r / n == doctest::Approx(8.0).epsilon(0.02));
  CHECK(walker.acceptance_rate() > 0.3);
  CHECK(walker.acceptance_rate() < 0.8);
  CHECK(walker.psi() == state.wave_function().value(walker.configuration()));
}

TEST_CASE("walkers reject bad settings") {
  const auto state = catalog_lookup("2P_2p");
  CHECK_THROWS(MetropolisWalker(state.wave_function(), 1.0, 0.0, Configuration(1, {0, 0, 1})));
  CHECK_THROWS(MetropolisWalker(state.wave_function(), 1.0, 1.0, Configuration(1, {0, 1, 0})));
}
