#include <cstdlib>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "nda/parallel.hpp"

using namespace nda;

TEST_CASE("serial and parallel index loops fill the same slots") {
  std::vector<double> a(1000), b(1000);
  for_each_index(a.size(), Execution::serial, [&](std::size_t i) { a[i] = static_cast<double>(i * i) / 7.0; });
  for_each_index(b.size(), Execution::parallel, [&](std::size_t i) { b[i] = static_cast<double>(i * i) / 7.0; });
  CHECK(a == b);
}

TEST_CASE("the lowest-index exception is rethrown") {
  auto body = [](std::size_t i) {
    if (i == 3) throw std::runtime_error("three");
    if (i == 7) throw std::runtime_error("seven");
  };
  for (auto exec : {Execution::serial, Execution::parallel}) {
    try {
      for_each_index(10, exec, body);
      FAIL("no exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "three");
    }
  }
}

TEST_CASE("NDA_THREADS sets the worker count") {
  setenv("NDA_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  setenv("NDA_THREADS", "garbage", 1);
  CHECK(worker_count() >= 1);
  unsetenv("NDA_THREADS");
  CHECK(worker_count() >= 1);
}
