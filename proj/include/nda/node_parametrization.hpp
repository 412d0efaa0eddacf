#pragma once

#include <cstddef>
#include <span>

#include <Eigen/Core>

#include "nda/configuration.hpp"
#include "nda/orbital.hpp"
#include "nda/random.hpp"

namespace nda {

enum class NodeKind {
  coordinate_plane,  // one particle, z_p = 0 style plane through the origin
  equal_radii,       // r_1 = r_2
  relative_plane,    // z_1 = z_2
  bilinear_plane,    // r_1^T M r_2 = 0: particle 2 confined to a plane set by particle 1
  determinant_zero,  // implicit only, no parametrization
};

const char* to_string(NodeKind kind);

/// A configuration on the node with the local weight of the surface element.
/// From `map` the weight is the surface measure per unit parameter volume;
/// from `sample` it is that measure divided by the sampling density, so the
/// mean of h(R) * weight estimates the surface integral of h.
struct NodePoint {
  Configuration R;
  double weight;
};

/// Exact parametrization of a known nodal hypersurface of dimension 3N - 1.
class NodeParametrization {
 public:
  static NodeParametrization coordinate_plane(Axis axis, double rate);
  static NodeParametrization equal_radii(double rate);
  static NodeParametrization relative_plane(Axis axis, double omega);
  static NodeParametrization bilinear_plane(const Eigen::Matrix3d& coupling, double rate);
  static NodeParametrization implicit(std::size_t n_particles);

  NodeKind kind() const { return kind_; }
  std::size_t n_particles() const { return n_particles_; }
  /// Number of parameters (3N - 1).
  std::size_t dimension() const { return 3 * n_particles_ - 1; }
  bool explicit_form() const { return kind_ != NodeKind::determinant_zero; }

  /// Parameters per kind: coordinate_plane (a, b) in-plane coordinates;
  /// equal_radii (r, theta1, phi1, theta2, phi2); relative_plane
  /// (four transverse coordinates, common height); bilinear_plane
  /// (r_1, a, b) with r_2 = a e1 + b e2 spanning the plane orthogonal to M^T r_1.
  NodePoint map(std::span<const double> u) const;
  NodePoint sample(ChainRng& rng) const;

 private:
  NodeParametrization(NodeKind kind, std::size_t n);

  void plane_basis(const Vec3& r1, Vec3& e1, Vec3& e2, double& normal_norm) const;

  NodeKind kind_;
  std::size_t n_particles_;
  int axis_ = 2;
  double rate_ = 1.0;
  Eigen::Matrix3d coupling_ = Eigen::Matrix3d::Zero();
  bool degenerate_ = false;         // coupling has rank 2
  Eigen::Matrix3d frame_ = Eigen::Matrix3d::Identity();  // columns p, q, v with v spanning ker M^T
};

}  // namespace nda
