#include <cmath>

#include <doctest.h>

#include "nda/statistics.hpp"

using namespace nda;

TEST_CASE("block accumulator splits a chain into contiguous blocks") {
  BlockAccumulator acc(100, 10);
  for (int i = 0; i < 100; ++i) acc.add(i);
  CHECK(acc.count() == 100);
  CHECK(acc.mean() == doctest::Approx(49.5));
  const auto blocks = acc.block_means();
  REQUIRE(blocks.size() == 10);
  CHECK(blocks.front() == doctest::Approx(4.5));
  CHECK(blocks.back() == doctest::Approx(94.5));
}

TEST_CASE("standard error of independent values") {
  CHECK(standard_error({1, 2, 3, 4}) == doctest::Approx(std::sqrt(1.25 * 4 / 3 / 4)));
}

TEST_CASE("chain combination uses scatter across chains from eight chains on") {
  const std::vector<double> means{1, 2, 3, 4, 5, 6, 7, 8};
  const std::vector<std::vector<double>> tight(8, std::vector<double>{4.5, 4.5});
  const auto m = combine_chains(means, tight);
  CHECK(m.mean == doctest::Approx(4.5));
  CHECK(m.stderr_ == doctest::Approx(standard_error(means)));
}

TEST_CASE("pooled blocks put a floor under a small chain scatter") {
  const std::vector<double> means(8, 2.0);
  const std::vector<std::vector<double>> blocks(8, std::vector<double>{0.0, 4.0});
  const auto m = combine_chains(means, blocks);
  CHECK(m.stderr_ > 0.0);
  CHECK(m.stderr_ == doctest::Approx(standard_error(std::vector<double>{0, 4, 0, 4, 0, 4, 0, 4, 0, 4, 0, 4, 0, 4, 0, 4})));
}

TEST_CASE("chain combination falls back to pooled blocks below eight chains") {
  const std::vector<double> means{1, 3};
  const std::vector<std::vector<double>> blocks{{0, 2}, {2, 4}};
  const auto m = combine_chains(means, blocks);
  CHECK(m.mean == doctest::Approx(2.0));
  CHECK(m.stderr_ == doctest::Approx(standard_error({0, 2, 2, 4})));
}

TEST_CASE("intercept weights recover the intercept of an exact line") {
  const std::vector<double> x{1.0, 0.25, 0.0625, 0.015625};
  const auto w = intercept_weights(x);
  double a = 0.0, sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    a += w[k] * (0.3 - 2.0 * x[k]);
    sum += w[k];
  }
  CHECK(a == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}
