#include "nda/configuration.hpp"

#include <cmath>
#include <string>

#include "nda/errors.hpp"

namespace nda {

Configuration::Configuration(std::size_t n_particles)
    : n_particles_(n_particles), coords_(3 * n_particles, 0.0) {
  if (n_particles == 0) throw DimensionMismatch("configuration needs at least one particle");
}

Configuration::Configuration(std::size_t n_particles, std::vector<double> coords)
    : n_particles_(n_particles), coords_(std::move(coords)) {
  if (n_particles == 0) throw DimensionMismatch("configuration needs at least one particle");
  if (coords_.size() != 3 * n_particles) {
    throw DimensionMismatch("expected " + std::to_string(3 * n_particles) + " coordinates, got " +
                            std::to_string(coords_.size()));
  }
  if (!all_finite()) throw NonFiniteInput("configuration has non-finite coordinates");
}

bool Configuration::all_finite() const {
  for (double c : coords_) {
    if (!std::isfinite(c)) return false;
  }
  return true;
}

void check_configuration(const Configuration& R, std::size_t n_particles) {
  if (R.n_particles() != n_particles) {
    throw DimensionMismatch("model expects " + std::to_string(n_particles) +
                            " particles, configuration has " + std::to_string(R.n_particles()));
  }
  if (!R.all_finite()) throw NonFiniteInput("configuration has non-finite coordinates");
}

}  // namespace nda
