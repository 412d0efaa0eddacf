#include "nda/state_catalog.hpp"

#include <cmath>
#include <sstream>

#include "nda/analytic_reference.hpp"
#include "nda/errors.hpp"

namespace nda {

namespace {

ReferenceValue coulomb_value(const Rational& coefficient, double Z) {
  ReferenceValue v;
  v.value = to_double(coefficient) * Z * Z;
  v.formula = "(" + to_string(coefficient) + ") Z^2";
  if (auto z = exact_rational(Z, 4096)) v.exact = coefficient * (*z) * (*z);
  return v;
}

ReferenceValue plain_value(double value, std::string formula) {
  ReferenceValue v;
  v.value = value;
  v.exact = exact_rational(value, 4096);
  v.formula = std::move(formula);
  return v;
}

EnergyPair coulomb_pair(Rational kin, Rational pot, double Z) {
  return {coulomb_value(kin, Z), coulomb_value(pot, Z)};
}

// Proposal steps at Z = 1, chosen by measuring the autocorrelation time of V.
// A 1s core needs smaller moves than a pure 2p shell, and Psi^2 walks smaller
// moves than |Psi| walks.
struct Steps {
  double abs_psi;
  double psi_squared;
};
constexpr Steps kCoreStep{4.0, 2.0};
constexpr Steps kShellStep{8.0, 6.0};

StateSpec coulomb_state(std::string name, std::string description, WaveFunctionModel model, double Z,
                        Steps step = kCoreStep) {
  StateSpec s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.model = std::move(model);
  s.parameters.family = StateParameters::Family::coulomb;
  s.parameters.Z = Z;
  s.hamiltonian = HamiltonianSpec::coulomb(Z, false);
  s.default_step = step.abs_psi / Z;
  s.default_step_squared = step.psi_squared / Z;
  return s;
}

void set_coulomb_energies(StateSpec& s, Rational total, std::optional<Rational> kin_nda,
                          std::optional<Rational> pot_nda) {
  const double Z = s.parameters.Z;
  s.exact_total = coulomb_value(total, Z);
  s.exact_standard = coulomb_pair(-total, total * 2, Z);
  if (kin_nda && pot_nda) s.exact_nda = coulomb_pair(*kin_nda, *pot_nda, Z);
}

Eigen::Matrix3d coupling_matrix(const std::string& name) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  if (name == "3P_2p2") {
    m(0, 1) = 1.0;   // x1 y2
    m(1, 0) = -1.0;  // - y1 x2
  } else if (name == "1D_2p2") {
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
  } else {
    m = Eigen::Matrix3d::Identity();
  }
  return m;
}

WaveFunctionModel harmonic_base(double omega) {
  // det[p_z, s] = exp(-omega (r1^2 + r2^2) / 2) (z1 - z2)
  return WaveFunctionModel::determinant({Orbital::gaussian_p(omega, Axis::z), Orbital::gaussian_s(omega)});
}

StateSpec harmonic_state(std::string name, std::string description, WaveFunctionModel model, double omega,
                         double g0) {
  StateSpec s;
  s.name = std::move(name);
  s.description = std::move(description);
  s.model = std::move(model);
  s.parameters.family = StateParameters::Family::harmonic;
  s.parameters.omega = omega;
  s.parameters.g0 = g0;
  s.hamiltonian = HamiltonianSpec::harmonic(omega, g0);
  s.node_kind = NodeKind::relative_plane;
  s.reduction = Reduction::harmonic_relative;
  s.default_step = 3.0 / std::sqrt(omega);
  s.default_step_squared = 2.0 / std::sqrt(omega);
  return s;
}

}  // namespace

const WaveFunctionModel& StateSpec::wave_function() const {
  if (!model) throw InvalidArgument("state " + name + " has no evaluable model");
  return *model;
}

std::vector<std::string> catalog_names() {
  return {"2P_2p",  "3S_1s2s", "3P_1s2p", "1S_1s2_2s2", "1S_1s2_2p2", "3P_2p2",
          "1S_2p2", "1D_2p2",  "harmonic_noninteracting", "harmonic_exact", "harmonic_mixed"};
}

std::vector<StateSpec> catalog_list() {
  std::vector<StateSpec> out;
  for (const auto& name : catalog_names()) out.push_back(catalog_lookup(name));
  return out;
}

StateSpec catalog_lookup(const std::string& name, double Z, double omega, std::optional<double> g0) {
  if (!(Z > 0.0)) throw InvalidArgument("Z must be positive");
  if (!(omega > 0.0)) throw InvalidArgument("omega must be positive");
  const auto s1 = Orbital::hydrogenic_1s(Z);
  const auto s2 = Orbital::hydrogenic_2s(Z);
  const auto pz = Orbital::hydrogenic_2p(Z, Axis::z);

  if (name == "2P_2p") {
    auto s = coulomb_state(name, "one electron in 2p_z: z exp(-Zr/2)", WaveFunctionModel::determinant({pz}), Z,
                           kShellStep);
    set_coulomb_energies(s, Rational(-1, 8), Rational(1, 24), Rational(-1, 6));
    s.node_kind = NodeKind::coordinate_plane;
    s.reduction = Reduction::single_p_orbital;
    return s;
  }
  if (name == "3S_1s2s") {
    auto s = coulomb_state(name, "triplet det[1s, 2s]", WaveFunctionModel::determinant({s1, s2}), Z);
    set_coulomb_energies(s, Rational(-5, 8), Rational(10, 221), Rational(-1185, 1768));
    s.node_kind = NodeKind::equal_radii;
    s.reduction = Reduction::triplet_1s2s;
    return s;
  }
  if (name == "3P_1s2p") {
    auto s = coulomb_state(name, "triplet det[1s, 2p_z]", WaveFunctionModel::determinant({s1, pz}), Z);
    set_coulomb_energies(s, Rational(-5, 8), Rational(1, 20), Rational(-27, 40));
    s.reduction = Reduction::triplet_1s2p;
    return s;
  }
  if (name == "1S_1s2_2s2") {
    auto s = coulomb_state(name, "det_up[1s, 2s] det_down[1s, 2s]",
                           WaveFunctionModel::determinant({s1, s2}, {s1, s2}), Z);
    set_coulomb_energies(s, Rational(-5, 4), Rational(20, 221), Rational(-1185, 884));
    s.reduction = Reduction::core_pair_1s2s;
    return s;
  }
  if (name == "1S_1s2_2p2") {
    std::vector<DeterminantTerm> terms;
    for (Axis a : {Axis::x, Axis::y, Axis::z}) {
      const auto p = Orbital::hydrogenic_2p(Z, a);
      terms.push_back({1.0, {s1, p}, {s1, p}});
    }
    auto s = coulomb_state(name, "sum over a of det_up[1s, 2p_a] det_down[1s, 2p_a]",
                           WaveFunctionModel::expansion(std::move(terms)), Z);
    set_coulomb_energies(s, Rational(-5, 4), Rational(1, 10), Rational(-27, 20));
    return s;
  }
  if (name == "3P_2p2" || name == "1S_2p2" || name == "1D_2p2") {
    const Eigen::Matrix3d m = coupling_matrix(name);
    const RadialFactor envelope{RadialFactor::Kind::exponential, Z / 2, 0.0};
    const char* form = name == "3P_2p2"   ? "(x1 y2 - x2 y1) rho(r1) rho(r2)"
                       : name == "1D_2p2" ? "(x1 y2 + x2 y1) rho(r1) rho(r2)"
                                          : "(r1 . r2) rho(r1) rho(r2)";
    auto s = coulomb_state(name, form, WaveFunctionModel::bilinear_pair(m, envelope, name == "3P_2p2"), Z,
                           kShellStep);
    set_coulomb_energies(s, Rational(-1, 4), Rational(1, 12), Rational(-1, 3));
    s.node_kind = NodeKind::bilinear_plane;
    return s;
  }
  if (name == "harmonic_noninteracting") {
    const double g = g0.value_or(0.0);
    if (g != 0.0) throw InvalidArgument("harmonic_noninteracting pairs with g0 = 0");
    auto s = harmonic_state(name, "Psi_0 = exp(-omega (r1^2 + r2^2) / 2) (z1 - z2), g0 = 0", harmonic_base(omega),
                            omega, 0.0);
    const auto ref = harmonic_reference(HarmonicCase::a_noninteracting, omega, 0.0);
    s.exact_total = plain_value(ref.total, "4 omega");
    s.exact_nda = EnergyPair{plain_value(ref.kin_nda, "omega / 2"), plain_value(ref.pot_nda, "7 omega / 2")};
    return s;
  }
  if (name == "harmonic_exact") {
    const double g = g0.value_or(1.0);
    if (omega != 0.25 || g != 1.0) throw InvalidArgument("harmonic_exact exists only at omega = 1/4, g0 = 1");
    auto model = WaveFunctionModel::with_pair_factor(harmonic_base(omega), PairFactor{0, 1, 0.25});
    auto s = harmonic_state(name, "Psi_0 (1 + r12 / 4), omega = 1/4, g0 = 1", std::move(model), omega, g);
    const auto ref = harmonic_reference(HarmonicCase::b_exact, omega, g);
    s.exact_total = plain_value(ref.total, "4 omega + 1/4");
    s.exact_nda = EnergyPair{
        plain_value(ref.kin_nda, "E - E_pot^nda"),
        plain_value(ref.pot_nda, "7 omega / 2 + (3/8) sqrt(pi) / (4 + 3 sqrt(pi)) + (1 + sqrt(pi)/2) / (4 + 3 sqrt(pi))")};
    return s;
  }
  if (name == "harmonic_mixed") {
    const double g = g0.value_or(1.0);
    auto s = harmonic_state(name, "Psi_0 under the interacting Hamiltonian", harmonic_base(omega), omega, g);
    s.eigenstate = false;
    if (omega == 0.25 && g == 1.0) {
      const auto ref = harmonic_reference(HarmonicCase::c_mixed, omega, g);
      s.exact_nda = EnergyPair{plain_value(ref.kin_nda, "omega / 2"),
                               plain_value(ref.pot_nda, "7 omega / 2 + sqrt(pi omega) / 4")};
      s.comparison_total = plain_value(1.25, "4 omega + 1/4");
    }
    return s;
  }
  throw UnknownState("unknown state: " + name);
}

StateSpec subshell_family(int k, int l, double Z) {
  validate(SubshellParams{k, l, Z});
  StateSpec s;
  if (l == 1 && k == 1) {
    s = catalog_lookup("2P_2p", Z);
  } else if (l == 1 && k == 2) {
    s = catalog_lookup("3P_2p2", Z);
  } else {
    s.name = "subshell_k" + std::to_string(k) + "_l" + std::to_string(l);
    s.description = std::to_string(k) + " electrons in subshell l = " + std::to_string(l) + ", formula only";
    s.parameters.Z = Z;
    s.hamiltonian = HamiltonianSpec::coulomb(Z, false);
    // orbital radius grows as n^2
    s.default_step = kShellStep.abs_psi * (l + 1) * (l + 1) / (4.0 * Z);
    s.default_step_squared = kShellStep.psi_squared * (l + 1) * (l + 1) / (4.0 * Z);
  }
  s.exact_total = coulomb_value(subshell_total_coefficient(k, l), Z);
  s.exact_standard = coulomb_pair(-subshell_total_coefficient(k, l), subshell_total_coefficient(k, l) * 2, Z);
  s.exact_nda = coulomb_pair(subshell_kin_nda_coefficient(k, l), subshell_pot_nda_coefficient(k, l), Z);
  return s;
}

NodeParametrization node_parametrization(const StateSpec& state) {
  const double Z = state.parameters.Z;
  switch (state.node_kind) {
    case NodeKind::coordinate_plane: return NodeParametrization::coordinate_plane(Axis::z, Z / 2);
    case NodeKind::equal_radii: return NodeParametrization::equal_radii(Z);
    case NodeKind::relative_plane: return NodeParametrization::relative_plane(Axis::z, state.parameters.omega);
    case NodeKind::bilinear_plane: {
      const auto& pair = std::get<BilinearPair>(state.wave_function().structure());
      return NodeParametrization::bilinear_plane(pair.coupling, Z / 2);
    }
    case NodeKind::determinant_zero: break;
  }
  return NodeParametrization::implicit(state.model ? state.model->n_particles() : 0);
}

ReferenceDensity reference_density(const StateSpec& state) {
  const std::size_t n = state.wave_function().n_particles();
  if (state.parameters.family == StateParameters::Family::harmonic) {
    return ReferenceDensity::gaussian(n, state.parameters.omega);
  }
  return ReferenceDensity::exponential(n, state.parameters.Z / 2);
}

}  // namespace nda
