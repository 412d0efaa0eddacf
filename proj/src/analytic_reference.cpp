#include "nda/analytic_reference.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "nda/errors.hpp"

namespace nda {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw InvalidArgument("not a rational: " + text);
  }
}

std::optional<Rational> exact_rational(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  for (std::int64_t q = 1; q <= max_den; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(p) > 9e15) return std::nullopt;
    if (p / static_cast<double>(q) == x) return Rational(static_cast<std::int64_t>(p), q);
  }
  return std::nullopt;
}

void validate(const SubshellParams& p) {
  if (p.l < 0) throw InvalidArgument("l must be nonnegative");
  if (p.k < 1 || p.k > 2 * (2 * p.l + 1)) throw InvalidArgument("occupation k out of range 1..2(2l+1)");
  if (!(p.Z > 0.0)) throw InvalidArgument("Z must be positive");
}

Rational subshell_kin_nda_coefficient(int k, int l) {
  validate({k, l, 1.0});
  const std::int64_t L = l;
  return Rational(k * L, 2 * (L + 1) * (L + 1) * (L + 2));
}

Rational subshell_pot_nda_coefficient(int k, int l) {
  validate({k, l, 1.0});
  const std::int64_t L = l;
  return Rational(-k, (L + 1) * (L + 2));
}

Rational subshell_total_coefficient(int k, int l) {
  validate({k, l, 1.0});
  const std::int64_t n = l + 1;
  return Rational(-k, 2 * n * n);
}

double subshell_kin_nda(const SubshellParams& p) {
  validate(p);
  return to_double(subshell_kin_nda_coefficient(p.k, p.l)) * p.Z * p.Z;
}

double subshell_pot_nda(const SubshellParams& p) {
  validate(p);
  return to_double(subshell_pot_nda_coefficient(p.k, p.l)) * p.Z * p.Z;
}

QuasiclassicalGap quasiclassical_gap(const SubshellParams& p) {
  validate(p);
  const Rational total = subshell_total_coefficient(p.k, p.l);
  const Rational kin = subshell_kin_nda_coefficient(p.k, p.l) / (-total);
  const Rational pot = subshell_pot_nda_coefficient(p.k, p.l) / (total * 2);
  return {to_double(kin), to_double(pot)};
}

HarmonicReference harmonic_reference(HarmonicCase c, double omega, double g0) {
  if (!(omega > 0.0)) throw InvalidArgument("omega must be positive");
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  switch (c) {
    case HarmonicCase::a_noninteracting:
      if (g0 != 0.0) throw InvalidArgument("case a is the noninteracting Hamiltonian (g0 = 0)");
      return {3.5 * omega, 0.5 * omega, 4.0 * omega};
    case HarmonicCase::b_exact: {
      if (omega != 0.25 || g0 != 1.0) throw InvalidArgument("case b is defined at omega = 1/4, g0 = 1");
      const double d = 4.0 + 3.0 * sqrt_pi;
      const double pot = 3.5 * omega + 0.375 * sqrt_pi / d + (1.0 + sqrt_pi / 2.0) / d;
      const double total = 4.0 * omega + 0.25;
      return {pot, total - pot, total};
    }
    case HarmonicCase::c_mixed: {
      if (omega != 0.25 || g0 != 1.0) throw InvalidArgument("case c is defined at omega = 1/4, g0 = 1");
      const double pot = 3.5 * omega + std::sqrt(std::numbers::pi * omega) / 4.0;
      const double kin = 0.5 * omega;
      return {pot, kin, pot + kin};
    }
  }
  throw InvalidArgument("unknown harmonic case");
}

}  // namespace nda
