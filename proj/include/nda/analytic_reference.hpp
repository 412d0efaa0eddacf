#pragma once

#include "nda/rational.hpp"

namespace nda {

/// k electrons in the hydrogenic subshell l = n - 1, noninteracting.
struct SubshellParams {
  int k = 1;
  int l = 1;
  double Z = 1.0;
};

/// Throws InvalidArgument unless 1 <= k <= 2(2l+1) and l >= 0, Z > 0.
void validate(const SubshellParams& p);

/// E_kin^nda / Z^2 = k l / (2 (l+1)^2 (l+2)).
Rational subshell_kin_nda_coefficient(int k, int l);
/// E_pot^nda / Z^2 = -k / ((l+1)(l+2)).
Rational subshell_pot_nda_coefficient(int k, int l);
/// Standard hydrogenic expectations per subshell, in units of Z^2:
/// total -k / (2 n^2), kinetic = -total, potential = 2 total.
Rational subshell_total_coefficient(int k, int l);

double subshell_kin_nda(const SubshellParams& p);
double subshell_pot_nda(const SubshellParams& p);

struct QuasiclassicalGap {
  double kin_ratio;  // E_kin^nda / E_kin = l / (l + 2)
  double pot_ratio;  // E_pot^nda / E_pot = (l + 1) / (l + 2)
};
QuasiclassicalGap quasiclassical_gap(const SubshellParams& p);

enum class HarmonicCase { a_noninteracting, b_exact, c_mixed };

struct HarmonicReference {
  double pot_nda;
  double kin_nda;
  double total;
};

/// Closed-form nda values for the two-particle harmonic trap. Cases b and c
/// are defined only at omega = 1/4, g0 = 1.
HarmonicReference harmonic_reference(HarmonicCase c, double omega, double g0);

}  // namespace nda
