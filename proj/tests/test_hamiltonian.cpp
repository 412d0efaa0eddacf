#include <cmath>

#include <doctest.h>

#include "nda/errors.hpp"
#include "nda/hamiltonian.hpp"
#include "nda/state_catalog.hpp"
#include "support.hpp"

using namespace nda;

TEST_CASE("Coulomb potential sums nuclear attraction and optional repulsion") {
  const Configuration R(2, {1, 0, 0, 0, 2, 0});
  CHECK(potential(HamiltonianSpec::coulomb(2.0, false), R) == doctest::Approx(-2.0 - 1.0));
  CHECK(potential(HamiltonianSpec::coulomb(2.0, true), R) == doctest::Approx(-3.0 + 1.0 / std::sqrt(5.0)));
}

TEST_CASE("harmonic potential is omega^2 r^2 / 2 per particle plus g0 / r12") {
  const Configuration R(2, {1, 0, 0, 0, 0, 2});
  const double omega = 0.25;
  CHECK(potential(HamiltonianSpec::harmonic(omega, 0.0), R) == doctest::Approx(0.5 * omega * omega * 5.0));
  CHECK(potential(HamiltonianSpec::harmonic(omega, 1.0), R) ==
        doctest::Approx(0.5 * omega * omega * 5.0 + 1.0 / std::sqrt(5.0)));
}

TEST_CASE("coincident singular points raise SingularConfiguration") {
  CHECK_THROWS_AS(potential(HamiltonianSpec::coulomb(1.0, false), Configuration(1, {0, 0, 0})), SingularConfiguration);
  CHECK_THROWS_AS(potential(HamiltonianSpec::harmonic(0.25, 1.0), Configuration(2, {1, 1, 1, 1, 1, 1})),
                  SingularConfiguration);
  // without interaction, coincident particles are harmless
  CHECK_NOTHROW(potential(HamiltonianSpec::harmonic(0.25, 0.0), Configuration(2, {1, 1, 1, 1, 1, 1})));
}

TEST_CASE("local energy is constant at the exact total for every catalog eigenstate") {
  ChainRng rng(11, 0);
  for (const auto& state : catalog_list()) {
    if (!state.eigenstate) continue;
    const double E = state.exact_total->value;
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 0; i < 1000; ++i) {
      const Configuration R = test::random_configuration(rng, state.wave_function().n_particles(), 4.0);
      const double e = local_energy(state.hamiltonian, state.wave_function(), R);
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    CAPTURE(state.name);
    CHECK(hi - lo < 1e-8);
    CHECK(lo == doctest::Approx(E).epsilon(1e-10));
  }
}

TEST_CASE("local energy of the mixed trap state varies") {
  const auto state = catalog_lookup("harmonic_mixed");
  ChainRng rng(12, 0);
  double lo = INFINITY, hi = -INFINITY;
  for (int i = 0; i < 200; ++i) {
    const double e =
        local_energy(state.hamiltonian, state.wave_function(), test::random_configuration(rng, 2, 4.0));
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  CHECK(hi - lo > 0.1);
}

TEST_CASE("local energy refuses points on the node") {
  const auto state = catalog_lookup("2P_2p");
  CHECK_THROWS_AS(local_energy(state.hamiltonian, state.wave_function(), Configuration(1, {1, 0.5, 0})),
                  NodeProximity);
  const auto triplet = catalog_lookup("3S_1s2s");
  CHECK_THROWS_AS(local_energy(triplet.hamiltonian, triplet.wave_function(), Configuration(2, {1, 0, 0, 0, 1, 0})),
                  NodeProximity);
}
