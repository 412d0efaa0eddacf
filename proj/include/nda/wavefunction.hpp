#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "nda/configuration.hpp"
#include "nda/orbital.hpp"

namespace nda {

/// c * det_up[orbitals_up] * det_down[orbitals_down]. Particles 0..n_up-1 are
/// spin up, the rest spin down.
struct DeterminantTerm {
  double coefficient = 1.0;
  std::vector<Orbital> up;
  std::vector<Orbital> down;
};

/// Sum of spin-factorized determinant products sharing one orbital count
/// per spin channel.
struct SlaterExpansion {
  std::vector<DeterminantTerm> terms;
};

/// Two-particle closed form f(r1) f(r2) r1^T M r2.
struct BilinearPair {
  Eigen::Matrix3d coupling;
  RadialFactor envelope;
};

/// Positive pair factor 1 + strength * r_ij.
struct PairFactor {
  std::size_t i = 0;
  std::size_t j = 1;
  double strength = 0.0;
};

class WaveFunctionModel;

struct Correlated {
  std::shared_ptr<const WaveFunctionModel> base;
  PairFactor factor;
};

struct Derivatives {
  double value = 0.0;
  std::vector<double> gradient;  // 3N
  double laplacian = 0.0;

  double gradient_norm() const;
};

/// Immutable evaluator for Psi, its gradient and its Laplacian. Evaluation is
/// a pure function of (model, R) and safe to share between threads.
class WaveFunctionModel {
 public:
  using Structure = std::variant<SlaterExpansion, BilinearPair, Correlated>;

  static WaveFunctionModel determinant(std::vector<Orbital> up, std::vector<Orbital> down = {});
  static WaveFunctionModel expansion(std::vector<DeterminantTerm> terms);
  /// same_spin marks a triplet pair (antisymmetric coupling); otherwise the
  /// two particles occupy opposite spin channels.
  static WaveFunctionModel bilinear_pair(const Eigen::Matrix3d& coupling, RadialFactor envelope,
                                         bool same_spin);
  static WaveFunctionModel with_pair_factor(WaveFunctionModel base, PairFactor factor);

  std::size_t n_particles() const { return n_particles_; }
  /// Particles [0, n_up) share one spin, [n_up, N) the other.
  std::size_t n_up() const { return n_up_; }
  const Structure& structure() const { return structure_; }

  /// Same model multiplied by a constant (used for scale-invariance checks).
  WaveFunctionModel scaled(double factor) const;
  double overall_scale() const { return scale_; }

  double value(const Configuration& R) const;
  void evaluate(const Configuration& R, Derivatives& out) const;
  Derivatives evaluate(const Configuration& R) const;

 private:
  WaveFunctionModel(Structure s, std::size_t n, std::size_t n_up);

  double raw_value(const Configuration& R) const;
  void raw_evaluate(const Configuration& R, Derivatives& out) const;

  Structure structure_;
  std::size_t n_particles_;
  std::size_t n_up_;
  double scale_ = 1.0;
};

double evaluate(const WaveFunctionModel& model, const Configuration& R);
std::vector<double> gradient(const WaveFunctionModel& model, const Configuration& R);
double laplacian(const WaveFunctionModel& model, const Configuration& R);

}  // namespace nda
