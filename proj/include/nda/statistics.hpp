#pragma once

#include <cstddef>
#include <vector>

namespace nda {

/// Running mean of one chain split into a fixed number of contiguous blocks.
class BlockAccumulator {
 public:
  /// `expected` is the number of samples the chain will contribute.
  BlockAccumulator(std::size_t expected, std::size_t n_blocks);

  void add(double x);

  std::size_t count() const { return count_; }
  double mean() const;
  std::vector<double> block_means() const;

 private:
  std::size_t block_size_;
  std::size_t n_blocks_;
  std::size_t count_ = 0;
  double sum_ = 0.0;
  std::vector<double> block_sum_;
  std::vector<std::size_t> block_count_;
};

struct CombinedMean {
  double mean = 0.0;
  double stderr_ = 0.0;
};

/// Plain mean of chain means. With at least 8 chains the standard error is
/// the larger of the across-chain scatter and the pooled-block estimate;
/// with fewer chains it comes from the pooled block means alone.
CombinedMean combine_chains(const std::vector<double>& chain_means,
                            const std::vector<std::vector<double>>& chain_blocks);

/// Standard error of the mean of independent values.
double standard_error(const std::vector<double>& values);

/// Least-squares line y = a + b x; returns the intercept weights w with a = sum w_k y_k.
std::vector<double> intercept_weights(const std::vector<double>& x);

}  // namespace nda
