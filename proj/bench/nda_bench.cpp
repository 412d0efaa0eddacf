// Times the serial reference against the OpenMP path for the main kernels
// and checks that both produce the same result.

#include <chrono>
#include <cstdio>
#include <functional>

#include "nda/estimators.hpp"
#include "nda/nodal_topology.hpp"
#include "nda/parallel.hpp"
#include "nda/state_catalog.hpp"

using namespace nda;

namespace {

template <class F>
double time_it(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class R>
void compare(const char* label, const std::function<R(Execution)>& run) {
  R serial{}, parallel{};
  const double ts = time_it([&] { serial = run(Execution::serial); });
  const double tp = time_it([&] { parallel = run(Execution::parallel); });
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2f   identical %s\n", label, ts, tp, ts / tp,
              serial == parallel ? "yes" : "NO");
}

}  // namespace

int main() {
  std::printf("workers: %d\n", worker_count());
  const auto s = catalog_lookup("1S_1s2_2p2");
  const auto cfg = SamplerConfig::for_state(s, 100000, 1);
  compare<NdaEstimate>("pot_nda 1S_1s2_2p2", [&](Execution e) { return estimate_pot_nda(s, s.hamiltonian, cfg, e); });
  compare<NdaEstimate>("kin_nda shell 1S_1s2_2p2", [&](Execution e) { return estimate_kin_nda_shell(s, cfg, e); });

  const auto d = catalog_lookup("1D_2p2");
  const auto cfg_d = SamplerConfig::for_state(d, 100000, 1);
  compare<NdaEstimate>("kin_nda surface 1D_2p2", [&](Execution e) { return estimate_kin_nda_surface(d, cfg_d, e); });

  ChainRng rng(1, 0);
  Eigen::MatrixXd pts(6, 20000);
  for (Eigen::Index j = 0; j < pts.cols(); ++j)
    for (Eigen::Index k = 0; k < pts.rows(); ++k) pts(k, j) = rng.normal();
  compare<std::vector<std::vector<std::size_t>>>("kNN 20000 points, k = 12",
                                                 [&](Execution e) { return nearest_neighbors(pts, 12, e); });

  compare<std::size_t>("domains 3P_2p2", [&](Execution e) {
    return count_nodal_domains(catalog_lookup("3P_2p2"), {}, e).n_domains;
  });
  return 0;
}
