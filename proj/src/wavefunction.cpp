#include "nda/wavefunction.hpp"

#include <array>
#include <cmath>

#include "nda/errors.hpp"

namespace nda {

namespace {

constexpr std::size_t kMaxPerSpin = 4;

using SmallMatrix = std::array<double, kMaxPerSpin * kMaxPerSpin>;

// Laplace expansion along the first row; n <= 4. For n = 2 this is exactly
// a00 a11 - a01 a10, so a row swap flips the sign bit-for-bit.
double small_det(const double* a, std::size_t n, std::size_t stride) {
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[stride + 1] - a[1] * a[stride];
  double det = 0.0;
  std::array<double, kMaxPerSpin * kMaxPerSpin> minor{};
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[(i - 1) * (n - 1) + k++] = a[i * stride + j];
      }
    }
    const double sub = small_det(minor.data(), n - 1, n - 1);
    det += ((col % 2 == 0) ? 1.0 : -1.0) * a[col] * sub;
  }
  return det;
}

// cof[i*n+j] = (-1)^(i+j) det(minor_ij)
void cofactors(const SmallMatrix& a, std::size_t n, SmallMatrix& cof) {
  if (n == 1) {
    cof[0] = 1.0;
    return;
  }
  SmallMatrix minor{};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t r = 0;
      for (std::size_t ii = 0; ii < n; ++ii) {
        if (ii == i) continue;
        std::size_t c = 0;
        for (std::size_t jj = 0; jj < n; ++jj) {
          if (jj == j) continue;
          minor[r * (n - 1) + c++] = a[ii * n + jj];
        }
        ++r;
      }
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      cof[i * n + j] = sign * small_det(minor.data(), n - 1, n - 1);
    }
  }
}

struct BlockResult {
  double det = 1.0;
  std::array<Vec3, kMaxPerSpin> grad{};
  double lap = 0.0;
};

double block_value(const std::vector<Orbital>& orbitals, const Configuration& R, std::size_t first) {
  const std::size_t n = orbitals.size();
  if (n == 0) return 1.0;
  SmallMatrix a{};
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 r = R.position(first + i);
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = orbitals[j].value(r);
  }
  return small_det(a.data(), n, n);
}

// Gradient and Laplacian of a determinant are linear in each row, so they
// follow from the cofactors without inverting the matrix (valid on nodes).
BlockResult block_evaluate(const std::vector<Orbital>& orbitals, const Configuration& R,
                           std::size_t first) {
  BlockResult out;
  const std::size_t n = orbitals.size();
  if (n == 0) return out;
  SmallMatrix a{}, lap{}, cof{};
  std::array<Vec3, kMaxPerSpin * kMaxPerSpin> grad;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 r = R.position(first + i);
    for (std::size_t j = 0; j < n; ++j) {
      const OrbitalValue v = orbitals[j].evaluate(r);
      a[i * n + j] = v.value;
      grad[i * n + j] = v.gradient;
      lap[i * n + j] = v.laplacian;
    }
  }
  out.det = small_det(a.data(), n, n);
  cofactors(a, n, cof);
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 g = Vec3::Zero();
    for (std::size_t j = 0; j < n; ++j) {
      g += cof[i * n + j] * grad[i * n + j];
      out.lap += cof[i * n + j] * lap[i * n + j];
    }
    out.grad[i] = g;
  }
  return out;
}

void put(std::vector<double>& g, std::size_t particle, const Vec3& v) {
  g[3 * particle] = v.x();
  g[3 * particle + 1] = v.y();
  g[3 * particle + 2] = v.z();
}

Vec3 get(const std::vector<double>& g, std::size_t particle) {
  return {g[3 * particle], g[3 * particle + 1], g[3 * particle + 2]};
}

}  // namespace

double Derivatives::gradient_norm() const {
  double s = 0.0;
  for (double g : gradient) s += g * g;
  return std::sqrt(s);
}

WaveFunctionModel::WaveFunctionModel(Structure s, std::size_t n, std::size_t n_up)
    : structure_(std::move(s)), n_particles_(n), n_up_(n_up) {}

WaveFunctionModel WaveFunctionModel::determinant(std::vector<Orbital> up, std::vector<Orbital> down) {
  return expansion({DeterminantTerm{1.0, std::move(up), std::move(down)}});
}

WaveFunctionModel WaveFunctionModel::expansion(std::vector<DeterminantTerm> terms) {
  if (terms.empty()) throw InvalidArgument("expansion needs at least one term");
  const std::size_t n_up = terms.front().up.size();
  const std::size_t n_down = terms.front().down.size();
  if (n_up + n_down == 0) throw InvalidArgument("determinant needs at least one orbital");
  if (n_up > kMaxPerSpin || n_down > kMaxPerSpin) {
    throw InvalidArgument("at most 4 orbitals per spin channel");
  }
  for (const auto& t : terms) {
    if (t.up.size() != n_up || t.down.size() != n_down) {
      throw InvalidArgument("all expansion terms must have equal spin occupations");
    }
  }
  return {SlaterExpansion{std::move(terms)}, n_up + n_down, n_up};
}

WaveFunctionModel WaveFunctionModel::bilinear_pair(const Eigen::Matrix3d& coupling, RadialFactor envelope,
                                                  bool same_spin) {
  if (same_spin && (coupling + coupling.transpose()).norm() != 0.0) {
    throw InvalidArgument("same-spin pair requires an antisymmetric coupling");
  }
  return {BilinearPair{coupling, envelope}, 2, same_spin ? 2u : 1u};
}

WaveFunctionModel WaveFunctionModel::with_pair_factor(WaveFunctionModel base, PairFactor factor) {
  const std::size_t n = base.n_particles();
  const std::size_t n_up = base.n_up();
  if (factor.i >= n || factor.j >= n || factor.i == factor.j) {
    throw InvalidArgument("pair factor particles out of range");
  }
  if (factor.strength < 0.0) throw InvalidArgument("pair factor must stay positive");
  return {Correlated{std::make_shared<const WaveFunctionModel>(std::move(base)), factor}, n, n_up};
}

WaveFunctionModel WaveFunctionModel::scaled(double factor) const {
  WaveFunctionModel copy = *this;
  copy.scale_ *= factor;
  return copy;
}

double WaveFunctionModel::value(const Configuration& R) const {
  check_configuration(R, n_particles_);
  return scale_ * raw_value(R);
}

void WaveFunctionModel::evaluate(const Configuration& R, Derivatives& out) const {
  check_configuration(R, n_particles_);
  raw_evaluate(R, out);
  if (scale_ != 1.0) {
    out.value *= scale_;
    for (double& g : out.gradient) g *= scale_;
    out.laplacian *= scale_;
  }
}

Derivatives WaveFunctionModel::evaluate(const Configuration& R) const {
  Derivatives d;
  evaluate(R, d);
  return d;
}

double WaveFunctionModel::raw_value(const Configuration& R) const {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SlaterExpansion>) {
          double sum = 0.0;
          for (const auto& t : s.terms) {
            sum += t.coefficient * (block_value(t.up, R, 0) * block_value(t.down, R, n_up_));
          }
          return sum;
        } else if constexpr (std::is_same_v<T, BilinearPair>) {
          const Vec3 r1 = R.position(0), r2 = R.position(1);
          const double q = r1.dot(s.coupling * r2);
          return (s.envelope.value(r1.norm()) * s.envelope.value(r2.norm())) * q;
        } else {
          const double r12 = (R.position(s.factor.i) - R.position(s.factor.j)).norm();
          return s.base->value(R) * (1.0 + s.factor.strength * r12);
        }
      },
      structure_);
}

void WaveFunctionModel::raw_evaluate(const Configuration& R, Derivatives& out) const {
  out.gradient.assign(3 * n_particles_, 0.0);
  out.value = 0.0;
  out.laplacian = 0.0;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SlaterExpansion>) {
          const std::size_t n_down = n_particles_ - n_up_;
          for (const auto& t : s.terms) {
            const BlockResult up = block_evaluate(t.up, R, 0);
            const BlockResult dn = block_evaluate(t.down, R, n_up_);
            out.value += t.coefficient * (up.det * dn.det);
            for (std::size_t i = 0; i < n_up_; ++i) {
              for (int k = 0; k < 3; ++k) out.gradient[3 * i + k] += t.coefficient * up.grad[i][k] * dn.det;
            }
            for (std::size_t i = 0; i < n_down; ++i) {
              for (int k = 0; k < 3; ++k) {
                out.gradient[3 * (n_up_ + i) + k] += t.coefficient * up.det * dn.grad[i][k];
              }
            }
            out.laplacian += t.coefficient * (up.lap * dn.det + up.det * dn.lap);
          }
        } else if constexpr (std::is_same_v<T, BilinearPair>) {
          const Vec3 r1 = R.position(0), r2 = R.position(1);
          const Vec3 M2 = s.coupling * r2;                  // grad_1 q
          const Vec3 Mt1 = s.coupling.transpose() * r1;     // grad_2 q
          const double q = r1.dot(M2);
          const auto f1 = s.envelope.at(r1.norm());
          const auto f2 = s.envelope.at(r2.norm());
          const double ff = f1.f * f2.f;
          out.value = ff * q;
          // Psi = F q with F = f(r1) f(r2); grad_1 F = f1.g f2.f r1
          const Vec3 g1 = ff * M2 + (q * f1.g * f2.f) * r1;
          const Vec3 g2 = ff * Mt1 + (q * f1.f * f2.g) * r2;
          put(out.gradient, 0, g1);
          put(out.gradient, 1, g2);
          // lap q = 0; lap F_i = f'' + 2 f'/r
          const double lapF = (f1.f2 + 2.0 * f1.g) * f2.f + f1.f * (f2.f2 + 2.0 * f2.g);
          const double cross = 2.0 * (f1.g * f2.f * r1.dot(M2) + f1.f * f2.g * r2.dot(Mt1));
          out.laplacian = q * lapF + cross;
        } else {
          Derivatives base;
          s.base->evaluate(R, base);
          const std::size_t i = s.factor.i, j = s.factor.j;
          const Vec3 d = R.position(i) - R.position(j);
          const double r = d.norm();
          const double c = s.factor.strength;
          const double F = 1.0 + c * r;
          const Vec3 u = r > 0.0 ? Vec3(d / r) : Vec3::Zero();
          out.value = base.value * F;
          for (std::size_t k = 0; k < out.gradient.size(); ++k) out.gradient[k] = base.gradient[k] * F;
          put(out.gradient, i, get(out.gradient, i) + base.value * c * u);
          put(out.gradient, j, get(out.gradient, j) - base.value * c * u);
          // grad F = c u (particle i), -c u (particle j); lap F = 2 c (2/r)
          const double lapF = r > 0.0 ? 4.0 * c / r : 0.0;
          const double cross = 2.0 * c * (get(base.gradient, i).dot(u) - get(base.gradient, j).dot(u));
          out.laplacian = base.laplacian * F + cross + base.value * lapF;
        }
      },
      structure_);
}

double evaluate(const WaveFunctionModel& model, const Configuration& R) { return model.value(R); }

std::vector<double> gradient(const WaveFunctionModel& model, const Configuration& R) {
  return model.evaluate(R).gradient;
}

double laplacian(const WaveFunctionModel& model, const Configuration& R) {
  return model.evaluate(R).laplacian;
}

}  // namespace nda
