#include "nda/node_parametrization.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "nda/errors.hpp"

namespace nda {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 spherical(double r, double theta, double phi) {
  return {r * std::sin(theta) * std::cos(phi), r * std::sin(theta) * std::sin(phi), r * std::cos(theta)};
}

double laplace(ChainRng& rng, double rate) {
  const double x = rng.exponential(rate);
  return rng.uniform() < 0.5 ? -x : x;
}

}  // namespace

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::coordinate_plane: return "coordinate_plane";
    case NodeKind::equal_radii: return "equal_radii";
    case NodeKind::relative_plane: return "relative_plane";
    case NodeKind::bilinear_plane: return "bilinear_plane";
    case NodeKind::determinant_zero: return "determinant_zero";
  }
  return "?";
}

NodeParametrization::NodeParametrization(NodeKind kind, std::size_t n) : kind_(kind), n_particles_(n) {}

NodeParametrization NodeParametrization::coordinate_plane(Axis axis, double rate) {
  NodeParametrization p(NodeKind::coordinate_plane, 1);
  p.axis_ = static_cast<int>(axis);
  p.rate_ = rate;
  return p;
}

NodeParametrization NodeParametrization::equal_radii(double rate) {
  NodeParametrization p(NodeKind::equal_radii, 2);
  p.rate_ = rate;
  return p;
}

NodeParametrization NodeParametrization::relative_plane(Axis axis, double omega) {
  NodeParametrization p(NodeKind::relative_plane, 2);
  p.axis_ = static_cast<int>(axis);
  p.rate_ = omega;
  return p;
}

NodeParametrization NodeParametrization::bilinear_plane(const Eigen::Matrix3d& coupling, double rate) {
  NodeParametrization p(NodeKind::bilinear_plane, 2);
  p.coupling_ = coupling;
  p.rate_ = rate;
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(coupling.transpose(), Eigen::ComputeFullU);
  const auto& s = svd.singularValues();
  if (s(0) == 0.0) throw InvalidArgument("coupling matrix is zero");
  if (s(1) < 1e-12 * s(0)) throw InvalidArgument("bilinear node needs rank >= 2");
  if (s(2) < 1e-12 * s(0)) {
    // ker M^T is the last left singular vector; radial sampling around it
    p.degenerate_ = true;
    const Vec3 v = svd.matrixU().col(2);
    Vec3 helper = std::abs(v.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
    const Vec3 a = (helper - helper.dot(v) * v).normalized();
    p.frame_.col(0) = a;
    p.frame_.col(1) = v.cross(a);
    p.frame_.col(2) = v;
  }
  return p;
}

NodeParametrization NodeParametrization::implicit(std::size_t n_particles) {
  return {NodeKind::determinant_zero, n_particles};
}

void NodeParametrization::plane_basis(const Vec3& r1, Vec3& e1, Vec3& e2, double& normal_norm) const {
  const Vec3 m = coupling_.transpose() * r1;
  normal_norm = m.norm();
  const Vec3 n = m / normal_norm;
  const Vec3 helper = std::abs(n.x()) < 0.9 ? Vec3(1, 0, 0) : Vec3(0, 1, 0);
  e1 = (helper - helper.dot(n) * n).normalized();
  e2 = n.cross(e1);
}

NodePoint NodeParametrization::map(std::span<const double> u) const {
  if (kind_ == NodeKind::determinant_zero) throw NoKnownNode("node is only known implicitly");
  if (u.size() != dimension()) throw DimensionMismatch("wrong number of node parameters");
  Configuration R(n_particles_);
  switch (kind_) {
    case NodeKind::coordinate_plane: {
      Vec3 r = Vec3::Zero();
      r((axis_ + 1) % 3) = u[0];
      r((axis_ + 2) % 3) = u[1];
      R.set_position(0, r);
      return {R, 1.0};
    }
    case NodeKind::equal_radii: {
      R.set_position(0, spherical(u[0], u[1], u[2]));
      R.set_position(1, spherical(u[0], u[3], u[4]));
      // co-area with f = r1 - r2: dS = sqrt(2) r^4 dr dOmega1 dOmega2
      const double r2 = u[0] * u[0];
      return {R, std::sqrt(2.0) * r2 * r2 * std::sin(u[1]) * std::sin(u[3])};
    }
    case NodeKind::relative_plane: {
      const int a = (axis_ + 1) % 3, b = (axis_ + 2) % 3;
      Vec3 r1 = Vec3::Zero(), r2 = Vec3::Zero();
      r1(a) = u[0];
      r1(b) = u[1];
      r2(a) = u[2];
      r2(b) = u[3];
      r1(axis_) = r2(axis_) = u[4];
      R.set_position(0, r1);
      R.set_position(1, r2);
      return {R, std::sqrt(2.0)};
    }
    case NodeKind::bilinear_plane: {
      const Vec3 r1(u[0], u[1], u[2]);
      Vec3 e1, e2;
      double mnorm;
      plane_basis(r1, e1, e2, mnorm);
      const Vec3 r2 = u[3] * e1 + u[4] * e2;
      R.set_position(0, r1);
      R.set_position(1, r2);
      // g = n . r2 with |grad_2 g| = 1 and grad_1 g = M r2 / |M^T r1| on the node
      const double t = (coupling_ * r2).norm() / mnorm;
      return {R, std::sqrt(1.0 + t * t)};
    }
    default:
      break;
  }
  throw NoKnownNode("node is only known implicitly");
}

NodePoint NodeParametrization::sample(ChainRng& rng) const {
  switch (kind_) {
    case NodeKind::coordinate_plane: {
      // polar radius ~ Gamma(2, rate): density rate^2 exp(-rate s) / (2 pi)
      const double s = rng.gamma_int(2, rate_);
      const double phi = 2.0 * kPi * rng.uniform();
      const double u[2] = {s * std::cos(phi), s * std::sin(phi)};
      NodePoint p = map(u);
      p.weight *= 2.0 * kPi * std::exp(rate_ * s) / (rate_ * rate_);
      return p;
    }
    case NodeKind::equal_radii: {
      // r ~ Gamma(5, rate), directions uniform
      const double r = rng.gamma_int(5, rate_);
      Configuration R(2);
      R.set_position(0, r * rng.unit_vector());
      R.set_position(1, r * rng.unit_vector());
      const double density_r = std::pow(rate_, 5) * std::pow(r, 4) * std::exp(-rate_ * r) / 24.0;
      const double measure = std::sqrt(2.0) * std::pow(r, 4);
      return {R, measure * 16.0 * kPi * kPi / density_r};
    }
    case NodeKind::relative_plane: {
      const double s_t = 1.0 / std::sqrt(rate_);
      const double s_c = 1.0 / std::sqrt(2.0 * rate_);
      double u[5];
      double log_density = 0.0;
      for (int k = 0; k < 5; ++k) {
        const double sigma = k < 4 ? s_t : s_c;
        u[k] = sigma * rng.normal();
        log_density += -0.5 * u[k] * u[k] / (sigma * sigma) - std::log(sigma * std::sqrt(2.0 * kPi));
      }
      NodePoint p = map(u);
      p.weight /= std::exp(log_density);
      return p;
    }
    case NodeKind::bilinear_plane: {
      Vec3 r1;
      double density1;
      if (degenerate_) {
        // cylindrical about ker M^T: s ~ Exp(rate), height ~ Laplace(rate)
        const double s = rng.exponential(rate_);
        const double phi = 2.0 * kPi * rng.uniform();
        const double h = laplace(rng, rate_);
        r1 = frame_ * Vec3(s * std::cos(phi), s * std::sin(phi), h);
        density1 = rate_ * std::exp(-rate_ * s) / (2.0 * kPi * s) * 0.5 * rate_ * std::exp(-rate_ * std::abs(h));
      } else {
        const double r = rng.gamma_int(2, rate_);
        r1 = r * rng.unit_vector();
        density1 = rate_ * rate_ * std::exp(-rate_ * r) / (4.0 * kPi * r);
      }
      const double a = laplace(rng, rate_);
      const double b = laplace(rng, rate_);
      const double density2 = 0.25 * rate_ * rate_ * std::exp(-rate_ * (std::abs(a) + std::abs(b)));
      const double u[5] = {r1.x(), r1.y(), r1.z(), a, b};
      NodePoint p = map(u);
      p.weight /= density1 * density2;
      return p;
    }
    default:
      break;
  }
  throw NoKnownNode("node is only known implicitly");
}

}  // namespace nda
