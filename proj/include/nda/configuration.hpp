#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace nda {

using Vec3 = Eigen::Vector3d;

/// A point in 3N-dimensional electron coordinate space (atomic units).
/// Coordinates are stored flat: x0 y0 z0 x1 y1 z1 ...
class Configuration {
 public:
  explicit Configuration(std::size_t n_particles);
  /// Throws DimensionMismatch if coords.size() != 3 * n_particles and
  /// NonFiniteInput if any entry is not finite.
  Configuration(std::size_t n_particles, std::vector<double> coords);

  std::size_t n_particles() const { return n_particles_; }
  std::size_t dimension() const { return coords_.size(); }

  std::span<const double> coords() const { return coords_; }
  std::span<double> coords() { return coords_; }

  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }

  Vec3 position(std::size_t particle) const {
    return {coords_[3 * particle], coords_[3 * particle + 1], coords_[3 * particle + 2]};
  }
  void set_position(std::size_t particle, const Vec3& r) {
    coords_[3 * particle] = r.x();
    coords_[3 * particle + 1] = r.y();
    coords_[3 * particle + 2] = r.z();
  }

  bool all_finite() const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::size_t n_particles_;
  std::vector<double> coords_;
};

/// Throws unless R has exactly n_particles particles and finite coordinates.
void check_configuration(const Configuration& R, std::size_t n_particles);

}  // namespace nda
