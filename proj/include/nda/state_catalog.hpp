#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nda/hamiltonian.hpp"
#include "nda/node_parametrization.hpp"
#include "nda/rational.hpp"
#include "nda/sampling.hpp"
#include "nda/wavefunction.hpp"

namespace nda {

/// An exact reference number at the state's parameters; `exact` holds the
/// rational form whenever the value is rational there.
struct ReferenceValue {
  double value = 0.0;
  std::optional<Rational> exact;
  std::string formula;
};

struct EnergyPair {
  ReferenceValue kin;
  ReferenceValue pot;
};

struct StateParameters {
  enum class Family { coulomb, harmonic };
  Family family = Family::coulomb;
  double Z = 1.0;
  double omega = 0.25;
  double g0 = 0.0;
};

/// How the deterministic quadrature oracle reduces the state, if at all.
enum class Reduction {
  none,
  single_p_orbital,   // 2P(2p)
  triplet_1s2s,       // 3S(1s2s)
  triplet_1s2p,       // 3P(1s2p), no kinetic reduction
  core_pair_1s2s,     // 1S(1s^2 2s^2) = product of two 1s2s triplets
  harmonic_relative,  // harmonic pair in centre-of-mass and relative coordinates
};

struct StateSpec {
  std::string name;
  std::string description;
  std::optional<WaveFunctionModel> model;  // absent for formula-only subshell states
  StateParameters parameters;
  HamiltonianSpec hamiltonian;
  bool eigenstate = true;  // of `hamiltonian`
  std::optional<ReferenceValue> exact_total;
  std::optional<EnergyPair> exact_standard;
  std::optional<EnergyPair> exact_nda;
  /// Eigenvalue the nda sum is compared with when the state is not an eigenstate.
  std::optional<ReferenceValue> comparison_total;
  NodeKind node_kind = NodeKind::determinant_zero;
  Reduction reduction = Reduction::none;
  /// Metropolis proposal cube sides for |Psi| and Psi^2 walks, bohr.
  double default_step = 0.5;
  double default_step_squared = 0.5;

  const WaveFunctionModel& wave_function() const;
};

/// Names accepted by catalog_lookup.
std::vector<std::string> catalog_names();

/// Every named state at the default parameters (Z = 1, omega = 1/4).
std::vector<StateSpec> catalog_list();

/// Builds a named state. For Coulomb states only Z is used; harmonic states
/// take omega, and g0 is fixed by the state (0 for harmonic_noninteracting,
/// 1 for harmonic_exact and harmonic_mixed) unless given explicitly.
StateSpec catalog_lookup(const std::string& name, double Z = 1.0, double omega = 0.25,
                         std::optional<double> g0 = std::nullopt);

/// k electrons in subshell l = n - 1. Evaluable only where it coincides with
/// a catalog model (k = 1, l = 1 and k = 2, l = 1); otherwise formula-only.
StateSpec subshell_family(int k, int l, double Z = 1.0);

/// Exact node parametrization; returns the implicit marker for states whose
/// node is only known as {Psi = 0}.
NodeParametrization node_parametrization(const StateSpec& state);

/// Importance density used by ratio, shell and domain estimators: product
/// exponentials with rate Z/2 for atoms, product Gaussians for the trap.
ReferenceDensity reference_density(const StateSpec& state);

}  // namespace nda
