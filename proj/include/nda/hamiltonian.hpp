#pragma once

#include "nda/configuration.hpp"
#include "nda/wavefunction.hpp"

namespace nda {

struct HamiltonianSpec {
  enum class Kind { coulomb_atom, harmonic_pair };

  Kind kind = Kind::coulomb_atom;
  double Z = 1.0;
  bool electron_repulsion = false;  // coulomb_atom only; never inferred
  double omega = 0.25;
  double g0 = 0.0;

  static HamiltonianSpec coulomb(double Z, bool electron_repulsion);
  static HamiltonianSpec harmonic(double omega, double g0);
};

/// V(R). Throws SingularConfiguration when a Coulomb distance underflows 1e-300.
double potential(const HamiltonianSpec& h, const Configuration& R);

/// (-1/2 lap Psi + V Psi) / Psi. Throws NodeProximity when
/// |Psi| < 1e-14 |grad Psi|.
double local_energy(const HamiltonianSpec& h, const WaveFunctionModel& model, const Configuration& R);

/// Same, reusing an already evaluated Derivatives block.
double local_energy(const HamiltonianSpec& h, const Derivatives& d, const Configuration& R);

}  // namespace nda
