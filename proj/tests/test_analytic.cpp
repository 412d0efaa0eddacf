#include <doctest.h>

#include "nda/analytic_reference.hpp"
#include "nda/errors.hpp"

using namespace nda;

TEST_CASE("subshell coefficients for small cases") {
  CHECK(subshell_kin_nda_coefficient(1, 1) == Rational(1, 24));
  CHECK(subshell_pot_nda_coefficient(1, 1) == Rational(-1, 6));
  CHECK(subshell_kin_nda_coefficient(2, 1) == Rational(1, 12));
  CHECK(subshell_kin_nda_coefficient(1, 0) == Rational(0));
  CHECK(subshell_pot_nda_coefficient(2, 0) == Rational(-1));
  CHECK(subshell_kin_nda_coefficient(10, 2) == Rational(10 * 2, 2 * 9 * 4));
  CHECK(subshell_total_coefficient(1, 2) == Rational(-1, 18));
}

TEST_CASE("kinetic and potential nda coefficients add to the subshell energy") {
  for (int l = 0; l <= 100; ++l) {
    for (int k : {1, 2, 2 * (2 * l + 1)}) {
      CAPTURE(l);
      CHECK(subshell_kin_nda_coefficient(k, l) + subshell_pot_nda_coefficient(k, l) ==
            subshell_total_coefficient(k, l));
    }
  }
}

TEST_CASE("nda values scale with Z^2") {
  CHECK(subshell_kin_nda({2, 1, 3.0}) == doctest::Approx(9.0 / 12.0));
  CHECK(subshell_pot_nda({2, 1, 3.0}) == doctest::Approx(-3.0));
}

TEST_CASE("quasiclassical ratios increase towards one") {
  double prev_kin = -1.0, prev_pot = -1.0;
  for (int l = 0; l <= 60; ++l) {
    const auto gap = quasiclassical_gap({1, l, 1.0});
    CHECK(gap.kin_ratio == doctest::Approx(static_cast<double>(l) / (l + 2)));
    CHECK(gap.pot_ratio == doctest::Approx(static_cast<double>(l + 1) / (l + 2)));
    CHECK(gap.kin_ratio > prev_kin);
    CHECK(gap.pot_ratio > prev_pot);
    prev_kin = gap.kin_ratio;
    prev_pot = gap.pot_ratio;
  }
  const auto far = quasiclassical_gap({1, 60, 1.0});
  CHECK(1.0 - far.kin_ratio < 0.05);
  CHECK(1.0 - far.pot_ratio < 0.05);
}

TEST_CASE("subshell parameters are validated") {
  CHECK_THROWS_AS(validate({0, 1, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(validate({7, 1, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(validate({1, -1, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(validate({1, 1, 0.0}), InvalidArgument);
  CHECK_NOTHROW(validate({6, 1, 1.0}));
}

TEST_CASE("harmonic trap closed forms") {
  const auto a = harmonic_reference(HarmonicCase::a_noninteracting, 0.5, 0.0);
  CHECK(a.pot_nda == doctest::Approx(1.75));
  CHECK(a.kin_nda == doctest::Approx(0.25));
  CHECK(a.total == doctest::Approx(2.0));

  const auto b = harmonic_reference(HarmonicCase::b_exact, 0.25, 1.0);
  CHECK(b.total == doctest::Approx(1.25));
  CHECK(b.pot_nda == doctest::Approx(1.148778913173).epsilon(1e-11));
  CHECK(b.kin_nda == doctest::Approx(0.101221086827).epsilon(1e-10));

  const auto c = harmonic_reference(HarmonicCase::c_mixed, 0.25, 1.0);
  CHECK(c.kin_nda == doctest::Approx(0.125));
  CHECK(c.total == doctest::Approx(1.2215567).epsilon(1e-7));
  CHECK(c.total < 1.25);
}

TEST_CASE("harmonic cases reject parameters outside their domain") {
  CHECK_THROWS_AS(harmonic_reference(HarmonicCase::a_noninteracting, 0.25, 1.0), InvalidArgument);
  CHECK_THROWS_AS(harmonic_reference(HarmonicCase::b_exact, 0.5, 1.0), InvalidArgument);
  CHECK_THROWS_AS(harmonic_reference(HarmonicCase::c_mixed, 0.25, 0.5), InvalidArgument);
  CHECK_THROWS_AS(harmonic_reference(HarmonicCase::a_noninteracting, -1.0, 0.0), InvalidArgument);
}
