#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "nda/errors.hpp"
#include "nda/state_catalog.hpp"

using namespace nda;

TEST_CASE("every listed name resolves and unknown names are rejected") {
  const auto names = catalog_names();
  CHECK(names.size() == 11);
  for (const auto& n : names) CHECK(catalog_lookup(n).name == n);
  CHECK_THROWS_AS(catalog_lookup("4F_3d"), UnknownState);
  CHECK_THROWS_AS(catalog_lookup("2P_2p", 0.0), InvalidArgument);
  CHECK_THROWS_AS(catalog_lookup("harmonic_mixed", 1.0, -1.0), InvalidArgument);
}

TEST_CASE("nda pieces add up to the eigenvalue as exact rationals") {
  for (const auto& s : catalog_list()) {
    if (s.parameters.family != StateParameters::Family::coulomb) continue;
    CAPTURE(s.name);
    REQUIRE(s.exact_nda);
    REQUIRE(s.exact_nda->kin.exact);
    REQUIRE(s.exact_total->exact);
    CHECK(*s.exact_nda->kin.exact + *s.exact_nda->pot.exact == *s.exact_total->exact);
    CHECK(*s.exact_standard->kin.exact + *s.exact_standard->pot.exact == *s.exact_total->exact);
    CHECK(*s.exact_standard->pot.exact == *s.exact_total->exact * 2);
  }
}

TEST_CASE("harmonic eigenstates satisfy the same sum rule in floating point") {
  for (const auto& name : {"harmonic_noninteracting", "harmonic_exact"}) {
    const auto s = catalog_lookup(name);
    CHECK(s.eigenstate);
    CHECK(s.exact_nda->kin.value + s.exact_nda->pot.value == doctest::Approx(s.exact_total->value).epsilon(1e-14));
  }
  const auto mixed = catalog_lookup("harmonic_mixed");
  CHECK_FALSE(mixed.eigenstate);
  CHECK(mixed.comparison_total->value == 1.25);
}

TEST_CASE("Coulomb references scale as Z^2") {
  for (const auto& name : {"2P_2p", "3S_1s2s", "1S_1s2_2p2", "1D_2p2"}) {
    const auto a = catalog_lookup(name, 1.0);
    const auto b = catalog_lookup(name, 3.0);
    CAPTURE(name);
    CHECK(b.exact_nda->kin.value == doctest::Approx(9.0 * a.exact_nda->kin.value).epsilon(1e-14));
    CHECK(b.exact_nda->pot.value == doctest::Approx(9.0 * a.exact_nda->pot.value).epsilon(1e-14));
    CHECK(b.default_step == doctest::Approx(a.default_step / 3.0));
  }
}

TEST_CASE("the exactly solvable trap state exists only at its analytic point") {
  CHECK_NOTHROW(catalog_lookup("harmonic_exact", 1.0, 0.25));
  CHECK_THROWS_AS(catalog_lookup("harmonic_exact", 1.0, 0.5), InvalidArgument);
  CHECK_THROWS_AS(catalog_lookup("harmonic_exact", 1.0, 0.25, 2.0), InvalidArgument);
  CHECK_THROWS_AS(catalog_lookup("harmonic_noninteracting", 1.0, 0.25, 1.0), InvalidArgument);
  // away from the analytic point the mixed state has no closed form
  CHECK_FALSE(catalog_lookup("harmonic_mixed", 1.0, 0.5).exact_nda.has_value());
}

TEST_CASE("parametrized node points lie on the node") {
  ChainRng rng(5, 0);
  for (const auto& s : catalog_list()) {
    const auto param = node_parametrization(s);
    if (!param.explicit_form()) continue;
    CAPTURE(s.name);
    for (int i = 0; i < 200; ++i) {
      const auto p = param.sample(rng);
      const auto d = s.wave_function().evaluate(p.R);
      CHECK(std::abs(d.value) <= 1e-12 * std::max(1e-300, d.gradient_norm()));
      CHECK(p.weight > 0.0);
    }
  }
}

TEST_CASE("nodes without a parametrization report the implicit kind") {
  for (const auto& name : {"3P_1s2p", "1S_1s2_2s2", "1S_1s2_2p2"}) {
    const auto param = node_parametrization(catalog_lookup(name));
    CHECK_FALSE(param.explicit_form());
    CHECK(param.kind() == NodeKind::determinant_zero);
  }
}

TEST_CASE("subshell family formula states") {
  const auto s = subshell_family(3, 2, 2.0);
  CHECK_FALSE(s.model.has_value());
  CHECK_THROWS_AS(s.wave_function(), InvalidArgument);
  CHECK(s.exact_nda->kin.value == doctest::Approx(4.0 * 3.0 * 2.0 / (2.0 * 9.0 * 4.0)));
  CHECK(s.exact_total->value == doctest::Approx(4.0 * -3.0 / 18.0));
  CHECK(subshell_family(1, 1).name == "2P_2p");
  CHECK(subshell_family(2, 1).name == "3P_2p2");
  CHECK_THROWS_AS(subshell_family(7, 1), InvalidArgument);
}

TEST_CASE("default proposal steps are positive") {
  for (const auto& s : catalog_list()) {
    CHECK(s.default_step > 0.0);
    CHECK(s.default_step_squared > 0.0);
    CHECK(s.default_step_squared <= s.default_step);
  }
}
