#pragma once

#include <cstddef>
#include <vector>

namespace nda {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t n);

/// Composite Gauss-Legendre rule on [a, b]: `panels` equal panels of an
/// n-point rule each, flattened into one node/weight list.
struct CompositeRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

CompositeRule composite_gauss_legendre(double a, double b, std::size_t panels, std::size_t points_per_panel);

}  // namespace nda
