#include "nda/hamiltonian.hpp"

#include <cmath>

#include "nda/errors.hpp"

namespace nda {

namespace {

constexpr double kSingularDistance = 1e-300;

double inverse_distance(double r) {
  if (r < kSingularDistance) throw SingularConfiguration("particle at a Coulomb singularity");
  return 1.0 / r;
}

}  // namespace

HamiltonianSpec HamiltonianSpec::coulomb(double Z, bool electron_repulsion) {
  if (!(Z > 0.0)) throw InvalidArgument("Z must be positive");
  HamiltonianSpec h;
  h.kind = Kind::coulomb_atom;
  h.Z = Z;
  h.electron_repulsion = electron_repulsion;
  return h;
}

HamiltonianSpec HamiltonianSpec::harmonic(double omega, double g0) {
  if (!(omega > 0.0)) throw InvalidArgument("omega must be positive");
  if (g0 < 0.0) throw InvalidArgument("g0 must be nonnegative");
  HamiltonianSpec h;
  h.kind = Kind::harmonic_pair;
  h.omega = omega;
  h.g0 = g0;
  return h;
}

double potential(const HamiltonianSpec& h, const Configuration& R) {
  if (!R.all_finite()) throw NonFiniteInput("configuration has non-finite coordinates");
  const std::size_t n = R.n_particles();
  double v = 0.0;
  if (h.kind == HamiltonianSpec::Kind::coulomb_atom) {
    for (std::size_t i = 0; i < n; ++i) v -= h.Z * inverse_distance(R.position(i).norm());
    if (h.electron_repulsion) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          v += inverse_distance((R.position(i) - R.position(j)).norm());
        }
      }
    }
    return v;
  }
  if (n != 2) throw DimensionMismatch("harmonic_pair Hamiltonian acts on two particles");
  double r2 = 0.0;
  for (double c : R.coords()) r2 += c * c;
  v = 0.5 * h.omega * h.omega * r2;
  if (h.g0 > 0.0) v += h.g0 * inverse_distance((R.position(0) - R.position(1)).norm());
  return v;
}

double local_energy(const HamiltonianSpec& h, const Derivatives& d, const Configuration& R) {
  if (!(std::abs(d.value) >= 1e-14 * d.gradient_norm()) || d.value == 0.0) {
    throw NodeProximity("local energy requested on the node");
  }
  return -0.5 * d.laplacian / d.value + potential(h, R);
}

double local_energy(const HamiltonianSpec& h, const WaveFunctionModel& model, const Configuration& R) {
  return local_energy(h, model.evaluate(R), R);
}

}  // namespace nda
