#pragma once

#include <cstddef>
#include <cstdint>

#include "nda/configuration.hpp"
#include "nda/random.hpp"
#include "nda/wavefunction.hpp"

namespace nda {

/// Analytically normalized product density used for importance sampling:
/// per particle (a^3 / 8 pi) exp(-a r) or the isotropic Gaussian
/// (omega / 2 pi)^(3/2) exp(-omega r^2 / 2).
class ReferenceDensity {
 public:
  enum class Kind { exponential, gaussian };

  static ReferenceDensity exponential(std::size_t n_particles, double rate);
  static ReferenceDensity gaussian(std::size_t n_particles, double omega);

  Kind kind() const { return kind_; }
  double parameter() const { return parameter_; }
  std::size_t n_particles() const { return n_; }

  void sample(ChainRng& rng, Configuration& R) const;
  double log_density(const Configuration& R) const;
  double density(const Configuration& R) const;

 private:
  ReferenceDensity(Kind kind, std::size_t n, double parameter);

  Kind kind_;
  std::size_t n_;
  double parameter_;
};

/// Single-particle Metropolis walk with stationary density |Psi|^power.
/// Each sweep proposes one uniform cube displacement (side `step`) per particle.
class MetropolisWalker {
 public:
  MetropolisWalker(const WaveFunctionModel& model, double power, double step, Configuration start);

  void sweep(ChainRng& rng);

  const Configuration& configuration() const { return R_; }
  double psi() const { return psi_; }
  std::uint64_t proposed() const { return proposed_; }
  std::uint64_t accepted() const { return accepted_; }
  double acceptance_rate() const;

 private:
  const WaveFunctionModel* model_;
  double power_;
  double step_;
  Configuration R_;
  double psi_;
  std::uint64_t proposed_ = 0;
  std::uint64_t accepted_ = 0;
};

/// Draws from `g` until the model is nonzero, for use as a chain start.
Configuration starting_configuration(const WaveFunctionModel& model, const ReferenceDensity& g, ChainRng& rng);

}  // namespace nda
