#include <cmath>
#include <limits>

#include <doctest.h>

#include "nda/configuration.hpp"
#include "nda/errors.hpp"

using nda::Configuration;

TEST_CASE("configuration stores particles as consecutive coordinate triples") {
  Configuration R(2, {1, 2, 3, 4, 5, 6});
  CHECK(R.n_particles() == 2);
  CHECK(R.dimension() == 6);
  CHECK(R.position(1).isApprox(nda::Vec3(4, 5, 6)));
  R.set_position(0, {-1, 0, 7});
  CHECK(R[2] == 7.0);
  CHECK(R.all_finite());
}

TEST_CASE("configuration rejects wrong lengths and non-finite coordinates") {
  CHECK_THROWS_AS(Configuration(2, {1, 2, 3}), nda::DimensionMismatch);
  CHECK_THROWS_AS(Configuration(1, {0, std::numeric_limits<double>::quiet_NaN(), 0}), nda::NonFiniteInput);
  CHECK_THROWS_AS(Configuration(1, {0, INFINITY, 0}), nda::NonFiniteInput);

  Configuration R(1);
  R[0] = std::numeric_limits<double>::infinity();
  CHECK_FALSE(R.all_finite());
  CHECK_THROWS_AS(nda::check_configuration(R, 1), nda::NonFiniteInput);
  CHECK_THROWS_AS(nda::check_configuration(Configuration(2), 1), nda::DimensionMismatch);
}
