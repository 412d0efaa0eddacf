#include "nda/nodal_topology.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "nda/errors.hpp"
#include "nda/random.hpp"
#include "nda/sampling.hpp"

namespace nda {

namespace {

constexpr std::uint64_t kTopologyStream = 0x746f706f00ull;
constexpr std::size_t kSamplerChains = 8;
constexpr std::size_t kBurnIn = 2000;
constexpr std::size_t kThinning = 5;

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

int axis_index(char c) {
  switch (c) {
    case 'x': return 0;
    case 'y': return 1;
    case 'z': return 2;
    default: throw InvalidArgument(std::string("unknown axis '") + c + "'");
  }
}

// Points from |Psi| by independent Metropolis chains. `accept` may veto a
// point; vetoed points are replaced by continuing the chain and counted.
template <class Accept>
std::vector<Configuration> sample_abs_psi(const StateSpec& state, std::size_t n_points, std::uint64_t seed,
                                          Execution exec, Accept&& accept, std::size_t* rejected) {
  const auto& model = state.wave_function();
  const auto g = reference_density(state);
  std::vector<std::vector<Configuration>> per_chain(kSamplerChains);
  std::vector<std::size_t> vetoed(kSamplerChains, 0);
  for_each_index(kSamplerChains, exec, [&](std::size_t c) {
    const std::size_t quota = n_points / kSamplerChains + (c < n_points % kSamplerChains ? 1 : 0);
    ChainRng rng(seed, kTopologyStream + c);
    MetropolisWalker walker(model, 1.0, state.default_step, starting_configuration(model, g, rng));
    for (std::size_t s = 0; s < kBurnIn; ++s) walker.sweep(rng);
    auto& out = per_chain[c];
    out.reserve(quota);
    while (out.size() < quota) {
      for (std::size_t s = 0; s < kThinning; ++s) walker.sweep(rng);
      if (accept(walker.configuration())) {
        out.push_back(walker.configuration());
      } else {
        ++vetoed[c];
      }
    }
  });
  std::vector<Configuration> points;
  points.reserve(n_points);
  for (auto& chain : per_chain) {
    for (auto& R : chain) points.push_back(std::move(R));
  }
  if (rejected) *rejected = std::accumulate(vetoed.begin(), vetoed.end(), std::size_t{0});
  return points;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size(std::size_t root) const { return size_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Distance from R to the node to first order, |Psi| / |grad Psi|.
double node_distance(const WaveFunctionModel& model, const Configuration& R) {
  const Derivatives d = model.evaluate(R);
  const double g = d.gradient_norm();
  if (g == 0.0) return d.value == 0.0 ? 0.0 : INFINITY;
  return std::abs(d.value) / g;
}

constexpr double kNodeTolerance = 1e-12;

}  // namespace

// ---------------------------------------------------------------- transforms

TransformSpec TransformSpec::identity(std::size_t n_particles) {
  TransformSpec t;
  t.blocks.assign(n_particles, Eigen::Matrix3d::Identity());
  t.permutation.resize(n_particles);
  std::iota(t.permutation.begin(), t.permutation.end(), 0);
  return t;
}

TransformSpec TransformSpec::reflect(std::size_t n_particles, std::size_t particle, int axis) {
  if (particle >= n_particles) throw InvalidArgument("reflection particle out of range");
  if (axis < 0 || axis > 2) throw InvalidArgument("reflection axis out of range");
  TransformSpec t = identity(n_particles);
  t.blocks[particle](axis, axis) = -1.0;
  return t;
}

TransformSpec TransformSpec::parse(const std::string& text, std::size_t n_particles) {
  TransformSpec t = identity(n_particles);
  if (text == "identity" || text.empty()) return t;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon != 1) throw InvalidArgument("bad flip '" + item + "', expected axis:particle such as x:2");
    const int axis = axis_index(item[0]);
    std::size_t particle = 0;
    try {
      particle = std::stoul(item.substr(2));
    } catch (const std::exception&) {
      throw InvalidArgument("bad particle number in '" + item + "'");
    }
    if (particle < 1 || particle > n_particles) throw InvalidArgument("particle number out of range in '" + item + "'");
    t.blocks[particle - 1](axis, axis) *= -1.0;
  }
  return t;
}

Eigen::MatrixXd TransformSpec::matrix() const {
  const std::size_t n = n_particles();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3 * n, 3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m.block<3, 3>(3 * i, 3 * permutation[i]) = blocks[i];
  }
  return m;
}

double TransformSpec::determinant() const { return matrix().determinant() > 0.0 ? 1.0 : -1.0; }

void TransformSpec::validate() const {
  const std::size_t n = n_particles();
  if (permutation.size() != n) throw InvalidArgument("transform permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (auto p : permutation) {
    if (p >= n || seen[p]) throw InvalidArgument("transform permutation is not a bijection");
    seen[p] = true;
  }
  const Eigen::MatrixXd m = matrix();
  const double err = (m * m.transpose() - Eigen::MatrixXd::Identity(3 * n, 3 * n)).cwiseAbs().maxCoeff();
  if (err > 1e-12) throw InvalidArgument("transform is not orthogonal");
}

TransformSpec TransformSpec::inverse() const {
  const std::size_t n = n_particles();
  TransformSpec t;
  t.blocks.resize(n);
  t.permutation.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.permutation[permutation[i]] = i;
    t.blocks[permutation[i]] = blocks[i].transpose();
  }
  return t;
}

Configuration TransformSpec::apply(const Configuration& R) const {
  if (R.n_particles() != n_particles()) throw DimensionMismatch("transform and configuration particle counts differ");
  Configuration out(R.n_particles());
  for (std::size_t i = 0; i < n_particles(); ++i) out.set_position(i, blocks[i] * R.position(permutation[i]));
  return out;
}

std::string TransformSpec::describe() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_particles(); ++i) {
    if (i) out << "; ";
    out << "r" << i + 1 << " -> [";
    for (int r = 0; r < 3; ++r) {
      if (r) out << ";";
      for (int c = 0; c < 3; ++c) out << (c ? "," : "") << blocks[i](r, c);
    }
    out << "] r" << permutation[i] + 1;
  }
  return out.str();
}

// ------------------------------------------------------------------- domains

std::vector<std::vector<std::size_t>> nearest_neighbors(const Eigen::MatrixXd& points, std::size_t k,
                                                        Execution exec) {
  const std::size_t n = static_cast<std::size_t>(points.cols());
  const std::size_t kk = std::min(k, n > 0 ? n - 1 : 0);
  std::vector<std::vector<std::size_t>> result(n);
  for_each_index(n, exec, [&](std::size_t i) {
    std::vector<std::pair<double, std::size_t>> best;
    best.reserve(kk + 1);
    auto worse = [](const auto& a, const auto& b) { return a < b; };  // max-heap on (distance, index)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = (points.col(static_cast<Eigen::Index>(j)) - points.col(static_cast<Eigen::Index>(i))).squaredNorm();
      const std::pair<double, std::size_t> cand{d, j};
      if (best.size() < kk) {
        best.push_back(cand);
        std::push_heap(best.begin(), best.end(), worse);
      } else if (kk > 0 && cand < best.front()) {
        std::pop_heap(best.begin(), best.end(), worse);
        best.back() = cand;
        std::push_heap(best.begin(), best.end(), worse);
      }
    }
    std::sort(best.begin(), best.end());
    auto& row = result[i];
    row.reserve(best.size());
    for (const auto& [d, j] : best) row.push_back(j);
  });
  return result;
}

DomainReport count_nodal_domains(const StateSpec& state, const DomainOptions& options, Execution exec) {
  if (options.n_points < 1000) throw InvalidArgument("domain counting needs at least 1000 points");
  if (options.k_neighbors == 0) throw InvalidArgument("k_neighbors must be positive");
  const auto& model = state.wave_function();
  const std::size_t dim = 3 * model.n_particles();

  const auto points = sample_abs_psi(
      state, options.n_points, options.seed, exec, [&](const Configuration& R) { return model.value(R) != 0.0; },
      nullptr);
  const std::size_t n = points.size();
  Eigen::MatrixXd cloud(dim, n);
  std::vector<int> sign(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < dim; ++d) cloud(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(i)) = points[i][d];
    sign[i] = sign_of(model.value(points[i]));
  }

  const auto neighbors = nearest_neighbors(cloud, options.k_neighbors, exec);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto j : neighbors[i]) edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // Segment tests are independent; the union-find pass below is serial.
  std::vector<char> joined(edges.size(), 0);
  const std::size_t checks = options.segment_checks;
  for_each_index(edges.size(), exec, [&](std::size_t e) {
    const auto [i, j] = edges[e];
    if (sign[i] != sign[j]) return;
    Configuration R(model.n_particles());
    for (std::size_t s = 1; s <= checks; ++s) {
      const double t = static_cast<double>(s) / static_cast<double>(checks + 1);
      for (std::size_t d = 0; d < dim; ++d) R[d] = (1.0 - t) * points[i][d] + t * points[j][d];
      if (sign_of(model.value(R)) != sign[i]) return;
    }
    joined[e] = 1;
  });

  DisjointSets sets(n);
  DomainReport report;
  report.n_points = n;
  report.n_edges_tested = edges.size();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!joined[e]) continue;
    ++report.n_edges_joined;
    sets.unite(edges[e].first, edges[e].second);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (sets.find(i) == i) report.component_sizes.push_back(sets.size(i));
    (sign[i] > 0 ? report.n_positive : report.n_negative) += 1;
  }
  std::sort(report.component_sizes.rbegin(), report.component_sizes.rend());
  report.n_domains = report.component_sizes.size();
  report.unbalanced = std::min(report.n_positive, report.n_negative) * 10 < n;

  std::ostringstream note;
  note << "upper bound from " << n << " points, k = " << options.k_neighbors << ", " << checks
       << " segment checks; largest components";
  for (std::size_t c = 0; c < std::min<std::size_t>(4, report.component_sizes.size()); ++c) {
    note << (c ? ", " : " ") << report.component_sizes[c];
  }
  if (report.unbalanced) note << "; unbalanced: fewer than 10% of points carry one sign";
  report.confidence_note = note.str();
  return report;
}

// --------------------------------------------------------------- equivalence

const char* to_string(Verdict v) { return v == Verdict::equivalent ? "equivalent" : "inequivalent"; }

EquivalenceReport test_node_equivalence(const StateSpec& a, const StateSpec& b, const TransformSpec& t,
                                        std::size_t n_points, std::uint64_t seed, Execution exec) {
  const auto& ma = a.wave_function();
  const auto& mb = b.wave_function();
  if (ma.n_particles() != mb.n_particles()) throw DimensionMismatch("states have different particle counts");
  if (t.n_particles() != ma.n_particles()) throw DimensionMismatch("transform has the wrong particle count");
  t.validate();
  if (n_points == 0) throw InvalidArgument("equivalence test needs at least one point");

  std::size_t resampled = 0;
  const auto points = sample_abs_psi(
      a, n_points, seed, exec,
      [&](const Configuration& R) {
        return node_distance(ma, R) > kNodeTolerance && node_distance(mb, t.apply(R)) > kNodeTolerance;
      },
      &resampled);

  std::vector<int> product(points.size());
  for_each_index(points.size(), exec, [&](std::size_t i) {
    product[i] = sign_of(ma.value(points[i])) * sign_of(mb.value(t.apply(points[i])));
  });
  const auto plus = static_cast<std::size_t>(std::count(product.begin(), product.end(), 1));
  const auto minus = static_cast<std::size_t>(std::count(product.begin(), product.end(), -1));

  EquivalenceReport report;
  report.n_points = points.size();
  report.n_resampled = resampled;
  report.degenerate = resampled * 100 > points.size() + resampled;
  report.agreement_fraction = static_cast<double>(std::max(plus, minus)) / static_cast<double>(points.size());
  report.verdict = (plus == points.size() || minus == points.size()) ? Verdict::equivalent : Verdict::inequivalent;
  report.transform = t.describe();
  return report;
}

namespace {

std::vector<Eigen::Matrix3d> signed_permutations() {
  std::vector<Eigen::Matrix3d> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
      for (int r = 0; r < 3; ++r) m(r, perm[r]) = (signs >> r) & 1 ? -1.0 : 1.0;
      out.push_back(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Cartesian product of block choices for every particle, for one particle permutation.
void for_each_block_choice(std::size_t n, std::size_t choices, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    if (f(idx)) return;
    std::size_t p = 0;
    while (p < n && ++idx[p] == choices) idx[p++] = 0;
    if (p == n) return;
  }
}

}  // namespace

EquivalenceSearch search_node_equivalence(const StateSpec& a, const StateSpec& b, std::size_t n_points,
                                          std::uint64_t seed, Execution exec) {
  const auto& ma = a.wave_function();
  const auto& mb = b.wave_function();
  const std::size_t n = ma.n_particles();
  if (n != mb.n_particles()) throw DimensionMismatch("states have different particle counts");

  constexpr std::size_t kScreen = 400;
  const auto screen = sample_abs_psi(
      a, kScreen, seed ^ 0x5c4ee9ull, exec, [&](const Configuration& R) { return node_distance(ma, R) > 1e-9; }, nullptr);
  std::vector<int> sign_a(screen.size());
  for (std::size_t i = 0; i < screen.size(); ++i) sign_a[i] = sign_of(ma.value(screen[i]));

  const auto blocks = signed_permutations();
  EquivalenceSearch result;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for_each_block_choice(n, blocks.size(), [&](const std::vector<std::size_t>& choice) {
      ++result.candidates_tried;
      TransformSpec t;
      t.permutation = perm;
      for (auto c : choice) t.blocks.push_back(blocks[c]);
      int global = 0;
      for (std::size_t i = 0; i < screen.size(); ++i) {
        const int s = sign_a[i] * sign_of(mb.value(t.apply(screen[i])));
        if (s == 0) continue;
        if (global == 0) global = s;
        if (s != global) return false;
      }
      auto report = test_node_equivalence(a, b, t, n_points, seed, exec);
      if (report.verdict != Verdict::equivalent) return false;
      result.transform = t;
      result.report = std::move(report);
      return true;
    });
    if (result.transform) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

}  // namespace nda
