#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nda/hamiltonian.hpp"
#include "nda/parallel.hpp"
#include "nda/state_catalog.hpp"

namespace nda {

enum class EstimateMethod {
  metropolis_abs_psi,
  metropolis_psi_squared,
  reference_ratio,
  surface_param,
  delta_shell,
  quadrature,
};

enum class EstimateStatus {
  ok,
  acceptance_warning,  // Metropolis acceptance outside [0.1, 0.9]
  unconverged,         // too few shell hits at the smallest epsilon
};

/// Level function whose thin shell approximates the node in the delta-shell
/// estimator. `distance` uses |Psi| / |grad Psi|, a first-order distance to the
/// node, so the shell is a slab of half-width eps. `value` uses |Psi| itself.
enum class ShellLevel { distance, value };

const char* to_string(EstimateMethod m);
const char* to_string(ShellLevel s);
ShellLevel parse_shell_level(const std::string& text);
const char* to_string(EstimateStatus s);
EstimateMethod parse_method(const std::string& text);
EstimateStatus parse_status(const std::string& text);

struct SamplerConfig {
  std::size_t n_chains = 8;
  std::size_t steps_per_chain = 200000;  // sweeps (Metropolis) or independent draws per chain
  std::size_t burn_in = 20000;           // Metropolis only
  double proposal_step = 0.5;            // side of the uniform proposal cube for |Psi| walks, bohr
  double proposal_step_squared = 0.5;    // the same for Psi^2 walks
  std::uint64_t seed = 1;
  std::vector<double> epsilon_ladder;  // delta-shell widths; empty selects the automatic ladder
  ShellLevel shell_level = ShellLevel::distance;
  std::size_t blocks_per_chain = 50;

  /// Throws InvalidArgument on inconsistent settings.
  void validate() const;

  /// Defaults for a state: its proposal step and 10% burn-in.
  static SamplerConfig for_state(const StateSpec& state, std::size_t steps_per_chain = 200000,
                                 std::uint64_t seed = 1, std::size_t n_chains = 8);

  friend bool operator==(const SamplerConfig&, const SamplerConfig&) = default;
};

struct NdaEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::size_t n_chains = 0;
  std::uint64_t seed = 0;
  EstimateMethod method = EstimateMethod::quadrature;
  EstimateStatus status = EstimateStatus::ok;
  std::uint64_t rejected = 0;  // singular or node-proximal samples dropped
  double acceptance = 0.0;     // Metropolis only
  // delta-shell diagnostics
  std::vector<double> ladder;
  std::vector<double> ladder_values;
  std::vector<std::uint64_t> ladder_hits;

  friend bool operator==(const NdaEstimate&, const NdaEstimate&) = default;
};

struct StandardExpectations {
  NdaEstimate kin;
  NdaEstimate pot;
};

/// |Psi|-weighted average of V by Metropolis sampling of |Psi|.
NdaEstimate estimate_pot_nda(const StateSpec& state, const HamiltonianSpec& h, const SamplerConfig& cfg,
                             Execution exec = Execution::parallel);

/// Surface integral of |grad Psi| over the parametrized node divided by the
/// integral of |Psi|; errors of both parts combined in quadrature.
NdaEstimate estimate_kin_nda_surface(const StateSpec& state, const SamplerConfig& cfg,
                                     Execution exec = Execution::parallel);

/// Level-set estimate of the node integral over E_g[|Psi| / g], extrapolated
/// linearly in eps^2 to zero. Per epsilon the node integral is
///   distance: E_g[1{|Psi| < eps |grad Psi|} |grad Psi| / (2 eps g)]
///   value:    E_g[1{|Psi| < eps} |grad Psi|^2 / (2 eps g)]
/// The value form is exact in the limit but its shell is dominated by the
/// far field where |Psi| is small everywhere, so it converges poorly for
/// exponentially decaying states.
NdaEstimate estimate_kin_nda_shell(const StateSpec& state, const SamplerConfig& cfg,
                                   Execution exec = Execution::parallel);

/// Integral of |Psi| as E_g[|Psi| / g] with the state's reference density.
NdaEstimate estimate_abs_norm(const StateSpec& state, const SamplerConfig& cfg,
                              Execution exec = Execution::parallel);

/// <V> and <-lap Psi / (2 Psi)> under Psi^2 by Metropolis sampling.
StandardExpectations estimate_standard_expectations(const StateSpec& state, const HamiltonianSpec& h,
                                                    const SamplerConfig& cfg,
                                                    Execution exec = Execution::parallel);

/// Automatic delta-shell ladder: eps_0 is the 1% quantile of the level
/// function under the reference density, followed by eps_0 / 2, / 4, / 8.
std::vector<double> default_epsilon_ladder(const StateSpec& state, std::uint64_t seed,
                                           ShellLevel level = ShellLevel::distance);

enum class QuadratureTarget { pot_nda, kin_nda, abs_norm };

/// Deterministic composite Gauss-Legendre evaluation after analytic angular
/// reduction. Throws NotReducible for states (or targets) without a reduction.
double quadrature_oracle(const StateSpec& state, QuadratureTarget target);

/// Wraps a quadrature value as an estimate with zero error.
NdaEstimate quadrature_estimate(const StateSpec& state, QuadratureTarget target);

}  // namespace nda
