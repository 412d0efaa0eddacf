#include <cmath>

#include <doctest.h>

#include "nda/errors.hpp"
#include "nda/orbital.hpp"
#include "nda/state_catalog.hpp"
#include "nda/wavefunction.hpp"
#include "support.hpp"

using namespace nda;

namespace {

std::vector<Orbital> all_orbitals() {
  std::vector<Orbital> out{Orbital::hydrogenic_1s(1.3), Orbital::hydrogenic_2s(0.8),
                           Orbital::hydrogenic_2p(1.0, Axis::x), Orbital::hydrogenic_2p(2.0, Axis::z),
                           Orbital::gaussian_s(0.25), Orbital::gaussian_p(0.7, Axis::y)};
  for (int m = -2; m <= 2; ++m) out.push_back(Orbital::hydrogenic_general(3, 2, m, 1.0));
  return out;
}

}  // namespace

TEST_CASE("orbital gradients and Laplacians match finite differences") {
  ChainRng rng(3, 0);
  for (const auto& orb : all_orbitals()) {
    for (int trial = 0; trial < 20; ++trial) {
      const Configuration R = test::random_configuration(rng, 1, 3.0);
      const auto v = orb.evaluate(R.position(0));
      const auto fd = test::finite_difference([&](const Configuration& S) { return orb.value(S.position(0)); }, R, 1e-3);
      CAPTURE(orb.name());
      CHECK(v.value == doctest::Approx(orb.value(R.position(0))).epsilon(1e-14));
      for (int d = 0; d < 3; ++d) CHECK(v.gradient[d] == doctest::Approx(fd.gradient[d]).epsilon(1e-7).scale(1e-6));
      CHECK(v.laplacian == doctest::Approx(fd.laplacian).epsilon(1e-5).scale(1e-5));
    }
  }
}

TEST_CASE("solid harmonics of degree two are harmonic and their gradients are exact") {
  ChainRng rng(4, 0);
  for (int m = -2; m <= 2; ++m) {
    const Configuration R = test::random_configuration(rng, 1, 2.0);
    const auto fd =
        test::finite_difference([&](const Configuration& S) { return solid_harmonic(2, m, S.position(0)).value; }, R, 1e-3);
    const auto s = solid_harmonic(2, m, R.position(0));
    CHECK(std::abs(fd.laplacian) < 1e-6);
    for (int d = 0; d < 3; ++d) CHECK(s.gradient[d] == doctest::Approx(fd.gradient[d]).epsilon(1e-8));
  }
}

TEST_CASE("every catalog model's derivatives match finite differences") {
  ChainRng rng(5, 0);
  for (const auto& state : catalog_list()) {
    const auto& model = state.wave_function();
    for (int trial = 0; trial < 10; ++trial) {
      const Configuration R = test::random_configuration(rng, model.n_particles(), 2.5);
      const Derivatives d = model.evaluate(R);
      const auto fd = test::finite_difference([&](const Configuration& S) { return model.value(S); }, R, 1e-3);
      const double scale = std::abs(d.value) + d.gradient_norm();
      CAPTURE(state.name);
      CHECK(d.value == model.value(R));
      for (std::size_t k = 0; k < d.gradient.size(); ++k) {
        CHECK(d.gradient[k] == doctest::Approx(fd.gradient[k]).scale(scale).epsilon(1e-7));
      }
      CHECK(d.laplacian == doctest::Approx(fd.laplacian).scale(scale).epsilon(1e-5));
    }
  }
}

TEST_CASE("exchanging same-spin particles flips the sign of a determinant bit for bit") {
  ChainRng rng(6, 0);
  for (const char* name : {"3S_1s2s", "3P_1s2p", "1S_1s2_2s2", "1S_1s2_2p2", "harmonic_noninteracting"}) {
    const auto state = catalog_lookup(name);
    const auto& model = state.wave_function();
    for (int trial = 0; trial < 50; ++trial) {
      const Configuration R = test::random_configuration(rng, model.n_particles(), 3.0);
      Configuration S = R;
      S.set_position(0, R.position(1));
      S.set_position(1, R.position(0));
      CAPTURE(name);
      CHECK(model.value(S) == -model.value(R));
    }
  }
}

TEST_CASE("opposite-spin pairs and the correlated trap state are symmetric under exchange") {
  ChainRng rng(7, 0);
  for (const std::string name : {"1S_2p2", "1D_2p2", "3P_2p2", "harmonic_exact"}) {
    const auto state = catalog_lookup(name);
    const auto& model = state.wave_function();
    const double sign = name == "3P_2p2" || name == "harmonic_exact" ? -1.0 : 1.0;
    for (int trial = 0; trial < 50; ++trial) {
      const Configuration R = test::random_configuration(rng, 2, 3.0);
      Configuration S = R;
      S.set_position(0, R.position(1));
      S.set_position(1, R.position(0));
      CAPTURE(name);
      CHECK(model.value(S) == doctest::Approx(sign * model.value(R)).epsilon(1e-14));
    }
  }
}

TEST_CASE("the 2p^2 bilinear forms have the stated closed forms") {
  ChainRng rng(8, 0);
  const Configuration R = test::random_configuration(rng, 2, 2.0);
  const Vec3 a = R.position(0), b = R.position(1);
  const double env = std::exp(-0.5 * a.norm()) * std::exp(-0.5 * b.norm());
  CHECK(catalog_lookup("3P_2p2").wave_function().value(R) == doctest::Approx((a.x() * b.y() - a.y() * b.x()) * env));
  CHECK(catalog_lookup("1D_2p2").wave_function().value(R) == doctest::Approx((a.x() * b.y() + a.y() * b.x()) * env));
  CHECK(catalog_lookup("1S_2p2").wave_function().value(R) == doctest::Approx(a.dot(b) * env));
}

TEST_CASE("scaling a model scales value, gradient and Laplacian") {
  const auto state = catalog_lookup("3S_1s2s");
  const auto& model = state.wave_function();
  const auto scaled = model.scaled(4.0);
  ChainRng rng(9, 0);
  const Configuration R = test::random_configuration(rng, 2, 2.0);
  const auto d = model.evaluate(R), s = scaled.evaluate(R);
  CHECK(s.value == 4.0 * d.value);
  CHECK(s.laplacian == 4.0 * d.laplacian);
  for (std::size_t k = 0; k < d.gradient.size(); ++k) CHECK(s.gradient[k] == 4.0 * d.gradient[k]);
}

TEST_CASE("model construction and evaluation validate their inputs") {
  Eigen::Matrix3d symmetric = Eigen::Matrix3d::Identity();
  CHECK_THROWS_AS(WaveFunctionModel::bilinear_pair(symmetric, RadialFactor{}, true), InvalidArgument);
  const auto state = catalog_lookup("3S_1s2s");
  const auto& model = state.wave_function();
  CHECK_THROWS_AS(model.value(Configuration(3)), DimensionMismatch);
  CHECK_THROWS_AS(evaluate(model, Configuration(1)), DimensionMismatch);
}

TEST_CASE("free-function evaluators agree with the model") {
  const auto state = catalog_lookup("harmonic_exact");
  const auto& model = state.wave_function();
  ChainRng rng(10, 0);
  const Configuration R = test::random_configuration(rng, 2, 2.0);
  const auto d = model.evaluate(R);
  CHECK(evaluate(model, R) == d.value);
  CHECK(laplacian(model, R) == d.laplacian);
  CHECK(gradient(model, R) == d.gradient);
}
