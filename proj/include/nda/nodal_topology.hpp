#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "nda/configuration.hpp"
#include "nda/parallel.hpp"
#include "nda/state_catalog.hpp"

namespace nda {

/// Orthogonal map of configuration space built from a particle permutation
/// and one 3x3 orthogonal block per particle:
/// (t R)_i = blocks[i] * R_{permutation[i]}.
struct TransformSpec {
  std::vector<Eigen::Matrix3d> blocks;
  std::vector<std::size_t> permutation;

  static TransformSpec identity(std::size_t n_particles);
  /// Negates one Cartesian component of one particle (x_p -> -x_p).
  static TransformSpec reflect(std::size_t n_particles, std::size_t particle, int axis);
  /// Accepts "identity" (or an empty string) or a comma list of flips "axis:particle" with
  /// 1-based particle numbers, e.g. "x:2" or "x:1,z:2".
  static TransformSpec parse(const std::string& text, std::size_t n_particles);

  std::size_t n_particles() const { return blocks.size(); }
  /// Full 3N x 3N matrix.
  Eigen::MatrixXd matrix() const;
  /// +1 or -1.
  double determinant() const;
  /// Throws InvalidArgument unless the matrix is orthogonal to 1e-12 and
  /// the permutation is a bijection.
  void validate() const;
  TransformSpec inverse() const;
  Configuration apply(const Configuration& R) const;
  /// Readable form, e.g. "r1 -> [1,0,0;0,1,0;0,0,1] r1; r2 -> [-1,0,0;0,1,0;0,0,1] r2".
  std::string describe() const;
};

struct DomainOptions {
  std::size_t n_points = 20000;
  std::size_t k_neighbors = 12;
  std::size_t segment_checks = 16;
  std::uint64_t seed = 1;
};

struct DomainReport {
  std::size_t n_domains = 0;
  std::size_t n_points = 0;
  std::size_t n_edges_tested = 0;
  std::size_t n_edges_joined = 0;
  std::size_t n_positive = 0;
  std::size_t n_negative = 0;
  std::vector<std::size_t> component_sizes;  // descending
  bool unbalanced = false;                   // fewer than 10% of points carry one sign
  std::string confidence_note;
};

/// Samples |Psi| by Metropolis, joins k-nearest neighbours whose connecting
/// segment keeps the sign of Psi, and counts connected components. The count
/// is an upper bound on the number of nodal domains.
DomainReport count_nodal_domains(const StateSpec& state, const DomainOptions& options = {},
                                 Execution exec = Execution::parallel);

/// k nearest neighbours (Euclidean, ties by index) of each column of `points`.
/// Row i of the result lists the neighbours of point i, nearest first.
std::vector<std::vector<std::size_t>> nearest_neighbors(const Eigen::MatrixXd& points, std::size_t k,
                                                        Execution exec = Execution::parallel);

enum class Verdict { equivalent, inequivalent };
const char* to_string(Verdict v);

struct EquivalenceReport {
  Verdict verdict = Verdict::inequivalent;
  double agreement_fraction = 0.0;
  std::size_t n_points = 0;
  std::size_t n_resampled = 0;  // samples closer than 1e-12 to either node
  bool degenerate = false;      // more than 1% resampled
  std::string transform;
};

/// Compares sign(Psi_a(R)) with sign(Psi_b(t R)) over samples of |Psi_a|.
EquivalenceReport test_node_equivalence(const StateSpec& a, const StateSpec& b, const TransformSpec& t,
                                        std::size_t n_points = 100000, std::uint64_t seed = 1,
                                        Execution exec = Execution::parallel);

struct EquivalenceSearch {
  std::optional<TransformSpec> transform;  // first transform found, if any
  std::size_t candidates_tried = 0;
  EquivalenceReport report;  // confirmation run of the found transform
};

/// Tries every transform whose blocks are signed permutation matrices,
/// combined with every particle permutation. Candidates are screened on a
/// small sample and confirmed with test_node_equivalence.
EquivalenceSearch search_node_equivalence(const StateSpec& a, const StateSpec& b,
                                          std::size_t n_points = 100000, std::uint64_t seed = 1,
                                          Execution exec = Execution::parallel);

}  // namespace nda
