#include "nda/sampling.hpp"

#include <cmath>
#include <numbers>

#include "nda/errors.hpp"

namespace nda {

ReferenceDensity::ReferenceDensity(Kind kind, std::size_t n, double parameter)
    : kind_(kind), n_(n), parameter_(parameter) {
  if (!(parameter > 0.0)) throw InvalidArgument("reference density parameter must be positive");
}

ReferenceDensity ReferenceDensity::exponential(std::size_t n_particles, double rate) {
  return {Kind::exponential, n_particles, rate};
}

ReferenceDensity ReferenceDensity::gaussian(std::size_t n_particles, double omega) {
  return {Kind::gaussian, n_particles, omega};
}

void ReferenceDensity::sample(ChainRng& rng, Configuration& R) const {
  if (R.n_particles() != n_) throw DimensionMismatch("reference density particle count mismatch");
  if (kind_ == Kind::exponential) {
    // r^2 exp(-a r) radial law is Gamma(3, a)
    for (std::size_t i = 0; i < n_; ++i) {
      const double r = rng.gamma_int(3, parameter_);
      R.set_position(i, r * rng.unit_vector());
    }
    return;
  }
  const double sigma = 1.0 / std::sqrt(parameter_);
  for (double& c : R.coords()) c = sigma * rng.normal();
}

double ReferenceDensity::log_density(const Configuration& R) const {
  if (R.n_particles() != n_) throw DimensionMismatch("reference density particle count mismatch");
  const double a = parameter_;
  if (kind_ == Kind::exponential) {
    double sum_r = 0.0;
    for (std::size_t i = 0; i < n_; ++i) sum_r += R.position(i).norm();
    return static_cast<double>(n_) * std::log(a * a * a / (8.0 * std::numbers::pi)) - a * sum_r;
  }
  double r2 = 0.0;
  for (double c : R.coords()) r2 += c * c;
  return 1.5 * static_cast<double>(n_) * std::log(a / (2.0 * std::numbers::pi)) - 0.5 * a * r2;
}

double ReferenceDensity::density(const Configuration& R) const { return std::exp(log_density(R)); }

MetropolisWalker::MetropolisWalker(const WaveFunctionModel& model, double power, double step, Configuration start)
    : model_(&model), power_(power), step_(step), R_(std::move(start)), psi_(model.value(R_)) {
  if (!(step > 0.0)) throw InvalidArgument("proposal step must be positive");
  if (psi_ == 0.0) throw InvalidArgument("walker must start off the node");
}

void MetropolisWalker::sweep(ChainRng& rng) {
  const std::size_t n = R_.n_particles();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 old = R_.position(i);
    const Vec3 trial = old + step_ * Vec3(rng.uniform() - 0.5, rng.uniform() - 0.5, rng.uniform() - 0.5);
    R_.set_position(i, trial);
    const double psi_new = model_->value(R_);
    const double ratio = std::abs(psi_new / psi_);
    const double accept = power_ == 1.0 ? ratio : (power_ == 2.0 ? ratio * ratio : std::pow(ratio, power_));
    ++proposed_;
    if (psi_new != 0.0 && (accept >= 1.0 || rng.uniform() < accept)) {
      psi_ = psi_new;
      ++accepted_;
    } else {
      R_.set_position(i, old);
    }
  }
}

double MetropolisWalker::acceptance_rate() const {
  return proposed_ == 0 ? 0.0 : static_cast<double>(accepted_) / static_cast<double>(proposed_);
}

Configuration starting_configuration(const WaveFunctionModel& model, const ReferenceDensity& g, ChainRng& rng) {
  Configuration R(model.n_particles());
  for (int attempt = 0; attempt < 1000; ++attempt) {
    g.sample(rng, R);
    if (model.value(R) != 0.0) return R;
  }
  throw InvalidArgument("could not find a starting point off the node");
}

}  // namespace nda
