#include "nda/statistics.hpp"

#include <algorithm>
#include <cmath>

#include "nda/errors.hpp"

namespace nda {

BlockAccumulator::BlockAccumulator(std::size_t expected, std::size_t n_blocks)
    : block_size_(std::max<std::size_t>(1, expected / std::max<std::size_t>(1, n_blocks))),
      n_blocks_(std::max<std::size_t>(1, n_blocks)),
      block_sum_(n_blocks_, 0.0),
      block_count_(n_blocks_, 0) {}

void BlockAccumulator::add(double x) {
  const std::size_t b = std::min(count_ / block_size_, n_blocks_ - 1);
  block_sum_[b] += x;
  ++block_count_[b];
  sum_ += x;
  ++count_;
}

double BlockAccumulator::mean() const { return count_ == 0 ? 0.0 : sum_ / static_cast<double>(count_); }

std::vector<double> BlockAccumulator::block_means() const {
  std::vector<double> out;
  for (std::size_t b = 0; b < n_blocks_; ++b) {
    if (block_count_[b] > 0) out.push_back(block_sum_[b] / static_cast<double>(block_count_[b]));
  }
  return out;
}

double standard_error(const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
}

CombinedMean combine_chains(const std::vector<double>& chain_means,
                            const std::vector<std::vector<double>>& chain_blocks) {
  CombinedMean out;
  if (chain_means.empty()) return out;
  for (double m : chain_means) out.mean += m;
  out.mean /= static_cast<double>(chain_means.size());
  std::vector<double> pooled;
  for (const auto& b : chain_blocks) pooled.insert(pooled.end(), b.begin(), b.end());
  const double blocked = pooled.size() >= 2 ? standard_error(pooled) : 0.0;
  if (chain_means.size() < 8) {
    out.stderr_ = blocked;
    return out;
  }
  // Eight chain means give a scatter estimate with only seven degrees of
  // freedom, which now and then comes out far too small; the pooled blocks
  // act as a floor.
  out.stderr_ = std::max(standard_error(chain_means), blocked);
  return out;
}

std::vector<double> intercept_weights(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n < 2) throw InvalidArgument("line fit needs two points");
  double mx = 0.0;
  for (double v : x) mx += v;
  mx /= static_cast<double>(n);
  double sxx = 0.0;
  for (double v : x) sxx += (v - mx) * (v - mx);
  if (sxx <= 0.0) throw InvalidArgument("line fit needs distinct abscissae");
  // a = ybar - b xbar,  b = sum (x_k - mx) y_k / sxx
  std::vector<double> w(n);
  for (std::size_t k = 0; k < n; ++k) {
    w[k] = 1.0 / static_cast<double>(n) - mx * (x[k] - mx) / sxx;
  }
  return w;
}

}  // namespace nda
