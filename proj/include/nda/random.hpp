#pragma once

#include <cstdint>
#include <random>

#include "nda/configuration.hpp"

namespace nda {

/// Per-chain random stream. The engine is seeded through std::seed_seq from
/// (seed, stream), and every variate is produced by explicit transforms of
/// raw 64-bit draws so results do not depend on the standard library's
/// distribution implementations.
class ChainRng {
 public:
  ChainRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t bits() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on (0, 1].
  double uniform_open0();
  double normal();
  double exponential(double rate);
  /// Gamma(shape, rate) for integer shape, as a sum of exponentials.
  double gamma_int(int shape, double rate);
  Vec3 unit_vector();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace nda
