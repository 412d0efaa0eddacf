#pragma once

#include <cmath>
#include <vector>

#include "nda/configuration.hpp"
#include "nda/random.hpp"
#include "nda/wavefunction.hpp"

namespace test {

// Random configuration with coordinates uniform in [-L, L].
inline nda::Configuration random_configuration(nda::ChainRng& rng, std::size_t n, double L) {
  nda::Configuration R(n);
  for (std::size_t d = 0; d < 3 * n; ++d) R[d] = L * (2.0 * rng.uniform() - 1.0);
  return R;
}

// Central differences of order h^4 for the gradient and Laplacian.
struct FiniteDifference {
  std::vector<double> gradient;
  double laplacian = 0.0;
};

template <class F>
FiniteDifference finite_difference(F&& f, const nda::Configuration& R, double h) {
  FiniteDifference out;
  const double f0 = f(R);
  for (std::size_t d = 0; d < R.dimension(); ++d) {
    auto shifted = [&](double s) {
      nda::Configuration S = R;
      S[d] += s;
      return f(S);
    };
    const double p1 = shifted(h), m1 = shifted(-h), p2 = shifted(2 * h), m2 = shifted(-2 * h);
    out.gradient.push_back((8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * h));
    out.laplacian += (-p2 + 16.0 * p1 - 30.0 * f0 + 16.0 * m1 - m2) / (12.0 * h * h);
  }
  return out;
}

inline double combined_sigma(double a, double b) { return std::sqrt(a * a + b * b); }

}  // namespace test
