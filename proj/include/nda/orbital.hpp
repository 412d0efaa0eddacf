#pragma once

#include <string>

#include "nda/configuration.hpp"

namespace nda {

enum class Axis { x = 0, y = 1, z = 2 };

/// Spherically symmetric envelope f(r). Exponential: exp(-rate r),
/// gaussian: exp(-rate r^2 / 2). `linear` adds a (1 - linear * r) prefactor,
/// used for the 2s radial function.
struct RadialFactor {
  enum class Kind { exponential, gaussian };
  Kind kind = Kind::exponential;
  double rate = 1.0;
  double linear = 0.0;

  struct Value {
    double f;         // f(r)
    double g;         // f'(r) / r, zero at r = 0 for the exponential family
    double f2;        // f''(r)
  };
  Value at(double r) const;
  double value(double r) const;
};

struct OrbitalValue {
  double value = 0.0;
  Vec3 gradient = Vec3::Zero();
  double laplacian = 0.0;
};

/// One-particle function P(r) f(|r|) where P is a real solid harmonic of
/// degree l <= 2. Hydrogenic forms are left unnormalized (the 2p orbital is
/// z exp(-Zr/2)); every quantity computed from them is a ratio.
class Orbital {
 public:
  enum class Kind {
    hydrogenic_1s,
    hydrogenic_2s,
    hydrogenic_2p,
    hydrogenic_general,
    gaussian_s,
    gaussian_p,
  };

  static Orbital hydrogenic_1s(double Z);
  static Orbital hydrogenic_2s(double Z);
  static Orbital hydrogenic_2p(double Z, Axis axis);
  /// n, l = n - 1, real harmonic index m in [-l, l]; supports l <= 2.
  static Orbital hydrogenic_general(int n, int l, int m, double Z);
  static Orbital gaussian_s(double omega);
  static Orbital gaussian_p(double omega, Axis axis);

  Kind kind() const { return kind_; }
  double scale() const { return scale_; }
  int l() const { return l_; }
  int m() const { return m_; }
  const RadialFactor& radial() const { return radial_; }
  std::string name() const;

  double value(const Vec3& r) const;
  OrbitalValue evaluate(const Vec3& r) const;

 private:
  Orbital(Kind kind, double scale, int n, int l, int m, RadialFactor radial);

  Kind kind_;
  double scale_;
  int n_;
  int l_;
  int m_;  // real solid harmonic index; for l = 1: -1 -> y, 0 -> z, 1 -> x
  RadialFactor radial_;
};

/// Real solid harmonic r^l Y_lm (unnormalized) with gradient; all are harmonic.
struct SolidHarmonic {
  double value;
  Vec3 gradient;
};
SolidHarmonic solid_harmonic(int l, int m, const Vec3& r);

}  // namespace nda
