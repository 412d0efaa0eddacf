#include "nda/random.hpp"

#include <cmath>
#include <numbers>

namespace nda {

ChainRng::ChainRng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x6e6461u};
  engine_.seed(seq);
}

double ChainRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double ChainRng::uniform_open0() { return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; }

double ChainRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u = uniform_open0();
  const double v = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * std::numbers::pi * v;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

double ChainRng::exponential(double rate) { return -std::log(uniform_open0()) / rate; }

double ChainRng::gamma_int(int shape, double rate) {
  double prod = 1.0;
  for (int k = 0; k < shape; ++k) prod *= uniform_open0();
  return -std::log(prod) / rate;
}

Vec3 ChainRng::unit_vector() {
  const double cos_t = 2.0 * uniform() - 1.0;
  const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
  const double phi = 2.0 * std::numbers::pi * uniform();
  return {sin_t * std::cos(phi), sin_t * std::sin(phi), cos_t};
}

}  // namespace nda
