#include "nda/orbital.hpp"

#include <cmath>

#include "nda/errors.hpp"

namespace nda {

namespace {

int axis_to_m(Axis axis) {
  switch (axis) {
    case Axis::x: return 1;
    case Axis::y: return -1;
    case Axis::z: return 0;
  }
  return 0;
}

void require_positive(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw InvalidArgument("orbital scale must be positive");
}

}  // namespace

RadialFactor::Value RadialFactor::at(double r) const {
  if (kind == Kind::gaussian) {
    const double f = std::exp(-0.5 * rate * r * r);
    return {f, -rate * f, (rate * rate * r * r - rate) * f};
  }
  const double e = std::exp(-rate * r);
  // f = (1 - c r) e, f' = (-c - rate (1 - c r)) e, f'' = (2 c rate + rate^2 (1 - c r)) e
  const double poly = 1.0 - linear * r;
  const double d1 = (-linear - rate * poly) * e;
  const double d2 = (2.0 * linear * rate + rate * rate * poly) * e;
  // the cusp at r = 0 has no finite f'/r; return the regular part
  const double g = r > 0.0 ? d1 / r : 0.0;
  return {poly * e, g, d2};
}

double RadialFactor::value(double r) const {
  if (kind == Kind::gaussian) return std::exp(-0.5 * rate * r * r);
  return (1.0 - linear * r) * std::exp(-rate * r);
}

SolidHarmonic solid_harmonic(int l, int m, const Vec3& r) {
  const double x = r.x(), y = r.y(), z = r.z();
  switch (l) {
    case 0:
      return {1.0, Vec3::Zero()};
    case 1:
      if (m == 1) return {x, Vec3(1, 0, 0)};
      if (m == -1) return {y, Vec3(0, 1, 0)};
      return {z, Vec3(0, 0, 1)};
    case 2:
      switch (m) {
        case -2: return {x * y, Vec3(y, x, 0)};
        case -1: return {y * z, Vec3(0, z, y)};
        case 0: return {2 * z * z - x * x - y * y, Vec3(-2 * x, -2 * y, 4 * z)};
        case 1: return {x * z, Vec3(z, 0, x)};
        default: return {x * x - y * y, Vec3(2 * x, -2 * y, 0)};
      }
    default:
      throw InvalidArgument("solid harmonics implemented for l <= 2");
  }
}

Orbital::Orbital(Kind kind, double scale, int n, int l, int m, RadialFactor radial)
    : kind_(kind), scale_(scale), n_(n), l_(l), m_(m), radial_(radial) {}

Orbital Orbital::hydrogenic_1s(double Z) {
  require_positive(Z);
  return {Kind::hydrogenic_1s, Z, 1, 0, 0, {RadialFactor::Kind::exponential, Z, 0.0}};
}

Orbital Orbital::hydrogenic_2s(double Z) {
  require_positive(Z);
  return {Kind::hydrogenic_2s, Z, 2, 0, 0, {RadialFactor::Kind::exponential, Z / 2, Z / 2}};
}

Orbital Orbital::hydrogenic_2p(double Z, Axis axis) {
  require_positive(Z);
  return {Kind::hydrogenic_2p, Z, 2, 1, axis_to_m(axis), {RadialFactor::Kind::exponential, Z / 2, 0.0}};
}

Orbital Orbital::hydrogenic_general(int n, int l, int m, double Z) {
  require_positive(Z);
  if (l != n - 1) throw InvalidArgument("hydrogenic_general requires l = n - 1");
  if (l < 0 || l > 2) throw InvalidArgument("hydrogenic_general evaluable for l <= 2 only");
  if (m < -l || m > l) throw InvalidArgument("|m| must not exceed l");
  return {Kind::hydrogenic_general, Z, n, l, m,
          {RadialFactor::Kind::exponential, Z / n, 0.0}};
}

Orbital Orbital::gaussian_s(double omega) {
  require_positive(omega);
  return {Kind::gaussian_s, omega, 1, 0, 0, {RadialFactor::Kind::gaussian, omega, 0.0}};
}

Orbital Orbital::gaussian_p(double omega, Axis axis) {
  require_positive(omega);
  return {Kind::gaussian_p, omega, 2, 1, axis_to_m(axis), {RadialFactor::Kind::gaussian, omega, 0.0}};
}

std::string Orbital::name() const {
  static const char* p_axes[] = {"y", "z", "x"};
  switch (kind_) {
    case Kind::hydrogenic_1s: return "1s";
    case Kind::hydrogenic_2s: return "2s";
    case Kind::hydrogenic_2p: return std::string("2p") + p_axes[m_ + 1];
    case Kind::hydrogenic_general:
      return std::to_string(n_) + "lspd"[l_] + "(m=" + std::to_string(m_) + ")";
    case Kind::gaussian_s: return "gs";
    case Kind::gaussian_p: return std::string("gp") + p_axes[m_ + 1];
  }
  return "?";
}

double Orbital::value(const Vec3& r) const {
  return solid_harmonic(l_, m_, r).value * radial_.value(r.norm());
}

// psi = P f:  grad = f grad P + P (f'/r) r,
//             lap  = 2 (f'/r) (r . grad P) + P (f'' + 2 f'/r)    (lap P = 0)
OrbitalValue Orbital::evaluate(const Vec3& r) const {
  const double rr = r.norm();
  const SolidHarmonic P = solid_harmonic(l_, m_, r);
  const RadialFactor::Value f = radial_.at(rr);
  OrbitalValue out;
  out.value = P.value * f.f;
  out.gradient = f.f * P.gradient + (P.value * f.g) * r;
  out.laplacian = 2.0 * f.g * r.dot(P.gradient) + P.value * (f.f2 + 2.0 * f.g);
  return out;
}

}  // namespace nda
