// Deterministic reference integrals. The integrands are written out here
// from the closed-form orbitals, independently of the wave-function evaluators.

#include <cmath>
#include <numbers>

#include "nda/errors.hpp"
#include "nda/estimators.hpp"
#include "nda/quadrature.hpp"

namespace nda {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kPoints = 20;

struct Integrals {
  double abs_norm = 0.0;
  double pot_numerator = 0.0;
  double kin_numerator = NAN;  // NaN: no kinetic reduction
};

// [0, L] in panels of width <= 3 / rate
CompositeRule radial_rule(double lo, double hi, double rate) {
  const double width = 3.0 / rate;
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil((hi - lo) / width)));
  return composite_gauss_legendre(lo, hi, panels, kPoints);
}

// integral of |cos t| sin t over [0, pi], by 2 x 64 points
double polar_abs_cos() {
  const auto upper = composite_gauss_legendre(0.0, kPi / 2, 4, 16);
  const auto lower = composite_gauss_legendre(kPi / 2, kPi, 4, 16);
  auto f = [](double t) { return std::abs(std::cos(t)) * std::sin(t); };
  return upper.integrate(f) + lower.integrate(f);
}

// 2D integral over r1, r2 in [0, L]^2 split along r1 = r2 where the
// integrands have their kink.
template <class F>
double radial_pair(double L, double rate, F&& f) {
  const auto outer = radial_rule(0.0, L, rate);
  double total = 0.0;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const double r1 = outer.nodes[i];
    const auto inner_lo = radial_rule(0.0, r1, rate);
    const auto inner_hi = radial_rule(r1, L, rate);
    const double s = inner_lo.integrate([&](double r2) { return f(r1, r2); }) +
                     inner_hi.integrate([&](double r2) { return f(r1, r2); });
    total += outer.weights[i] * s;
  }
  return total;
}

Integrals single_p(double Z) {
  const double L = 90.0 / Z;
  const auto rule = radial_rule(0.0, L, Z / 2);
  const double ang = 2.0 * kPi * polar_abs_cos();
  auto rho = [&](double r) { return std::exp(-0.5 * Z * r); };
  Integrals out;
  out.abs_norm = ang * rule.integrate([&](double r) { return r * r * r * rho(r); });
  out.pot_numerator = ang * rule.integrate([&](double r) { return -Z * r * r * rho(r); });
  // on z = 0, |grad (z rho)| = rho; plane integral in polar coordinates
  out.kin_numerator = 2.0 * kPi * rule.integrate([&](double s) { return s * rho(s); });
  return out;
}

Integrals triplet_1s2s(double Z) {
  const double L = 90.0 / Z;
  auto phi1 = [&](double r) { return std::exp(-Z * r); };
  auto phi2 = [&](double r) { return (1.0 - 0.5 * Z * r) * std::exp(-0.5 * Z * r); };
  auto dphi1 = [&](double r) { return -Z * std::exp(-Z * r); };
  auto dphi2 = [&](double r) { return (-Z + 0.25 * Z * Z * r) * std::exp(-0.5 * Z * r); };
  auto absA = [&](double r1, double r2) { return std::abs(phi1(r1) * phi2(r2) - phi1(r2) * phi2(r1)); };
  const double solid = 16.0 * kPi * kPi;
  Integrals out;
  out.abs_norm = solid * radial_pair(L, Z / 2, [&](double r1, double r2) { return r1 * r1 * r2 * r2 * absA(r1, r2); });
  out.pot_numerator = solid * radial_pair(L, Z / 2, [&](double r1, double r2) {
                        return (-Z * r2 - Z * r1) * r1 * r2 * absA(r1, r2);
                      });
  // node r1 = r2 = r: |grad Psi| = sqrt(2) |W|, dS = sqrt(2) r^4 dr dOmega1 dOmega2
  const auto rule = radial_rule(0.0, L, Z / 2);
  out.kin_numerator = 2.0 * solid * rule.integrate([&](double r) {
    const double W = dphi1(r) * phi2(r) - phi1(r) * dphi2(r);
    return r * r * r * r * std::abs(W);
  });
  return out;
}

// integral over mu1, mu2 in [-1, 1] of |a mu2 - b mu1| for a, b >= 0
double abs_linear_angular(double a, double b) {
  const double hi = std::max(a, b), lo = std::min(a, b);
  if (hi == 0.0) return 0.0;
  return 2.0 * hi + 2.0 * lo * lo / (3.0 * hi);
}

Integrals triplet_1s2p(double Z) {
  const double L = 90.0 / Z;
  auto angular = [&](double r1, double r2) {
    const double a = std::exp(-Z * r1) * r2 * std::exp(-0.5 * Z * r2);
    const double b = std::exp(-Z * r2) * r1 * std::exp(-0.5 * Z * r1);
    return 4.0 * kPi * kPi * abs_linear_angular(a, b);
  };
  Integrals out;
  out.abs_norm = radial_pair(L, Z / 2, [&](double r1, double r2) { return r1 * r1 * r2 * r2 * angular(r1, r2); });
  out.pot_numerator = radial_pair(L, Z / 2, [&](double r1, double r2) {
    return (-Z * r2 - Z * r1) * r1 * r2 * angular(r1, r2);
  });
  return out;
}

Integrals core_pair(double Z) {
  const Integrals t = triplet_1s2s(Z);
  Integrals out;
  out.abs_norm = t.abs_norm * t.abs_norm;
  out.pot_numerator = 2.0 * t.pot_numerator * t.abs_norm;
  out.kin_numerator = 2.0 * t.kin_numerator * t.abs_norm;
  return out;
}

// |Psi| = exp(-omega R^2) exp(-omega r^2 / 4) |z| (1 + c r) in centre-of-mass
// R = (r1 + r2) / 2 and relative r = r1 - r2 coordinates (unit Jacobian).
Integrals harmonic_relative(double omega, double g0, double c) {
  const double a = omega / 4.0;
  const double L_cm = std::sqrt(80.0 / omega);
  const double L_rel = std::sqrt(80.0 / a);
  const auto cm = composite_gauss_legendre(0.0, L_cm, 20, kPoints);
  const auto rel = composite_gauss_legendre(0.0, L_rel, 20, kPoints);
  const double cm0 = 4.0 * kPi * cm.integrate([&](double R) { return R * R * std::exp(-omega * R * R); });
  const double cm2 = 4.0 * kPi * cm.integrate([&](double R) { return R * R * R * R * std::exp(-omega * R * R); });
  const double ang = 2.0 * kPi * polar_abs_cos();
  auto rel_moment = [&](int n) {
    return ang * rel.integrate([&](double r) {
      return std::pow(r, 3 + n) * std::exp(-a * r * r) * (1.0 + c * r);
    });
  };
  const double k0 = rel_moment(0), k2 = rel_moment(2), km1 = rel_moment(-1);
  Integrals out;
  out.abs_norm = cm0 * k0;
  // V = omega^2 (r1^2 + r2^2) / 2 + g0 / r12 = omega^2 (R^2 + r^2 / 4) + g0 / r
  out.pot_numerator = omega * omega * (cm2 * k0 + 0.25 * cm0 * k2) + g0 * cm0 * km1;
  // node z1 = z2: |grad Psi| = sqrt(2) exp(-omega R^2) exp(-a s^2) (1 + c s), dS = sqrt(2) dR^3 dx dy
  out.kin_numerator =
      2.0 * cm0 * 2.0 * kPi * rel.integrate([&](double s) { return s * std::exp(-a * s * s) * (1.0 + c * s); });
  return out;
}

Integrals reduce(const StateSpec& state) {
  const double Z = state.parameters.Z;
  switch (state.reduction) {
    case Reduction::single_p_orbital: return single_p(Z);
    case Reduction::triplet_1s2s: return triplet_1s2s(Z);
    case Reduction::triplet_1s2p: return triplet_1s2p(Z);
    case Reduction::core_pair_1s2s: return core_pair(Z);
    case Reduction::harmonic_relative: {
      double c = 0.0;
      if (const auto* corr = std::get_if<Correlated>(&state.wave_function().structure())) c = corr->factor.strength;
      return harmonic_relative(state.parameters.omega, state.parameters.g0, c);
    }
    case Reduction::none: break;
  }
  throw NotReducible("state " + state.name + " has no quadrature reduction");
}

}  // namespace

double quadrature_oracle(const StateSpec& state, QuadratureTarget target) {
  const Integrals I = reduce(state);
  switch (target) {
    case QuadratureTarget::abs_norm: return I.abs_norm;
    case QuadratureTarget::pot_nda: return I.pot_numerator / I.abs_norm;
    case QuadratureTarget::kin_nda:
      if (std::isnan(I.kin_numerator)) throw NotReducible("state " + state.name + " has no kinetic reduction");
      return I.kin_numerator / I.abs_norm;
  }
  throw NotReducible("unknown quadrature target");
}

}  // namespace nda
