#include <doctest.h>
#include <nlohmann/json.hpp>

#include "nda/errors.hpp"
#include "nda/run_record.hpp"

using namespace nda;

namespace {

RunRecord sample_record() {
  const auto s = catalog_lookup("2P_2p");
  RunRecord r = make_run_record("compute", s, SamplerConfig::for_state(s, 1000, 5));
  ComponentResult c;
  c.component = "pot_nda";
  c.estimate.mean = -0.1666;
  c.estimate.std_error = 0.0004;
  c.estimate.n_samples = 7200;
  c.estimate.n_chains = 8;
  c.estimate.seed = 5;
  c.estimate.method = EstimateMethod::metropolis_abs_psi;
  c.estimate.acceptance = 0.55;
  c.exact = -1.0 / 6.0;
  c.exact_rational = "-1/6";
  c.sigma_deviation = 0.17;
  r.results.push_back(c);
  ComponentResult shell;
  shell.component = "kin_nda";
  shell.estimate.method = EstimateMethod::delta_shell;
  shell.estimate.status = EstimateStatus::unconverged;
  shell.estimate.ladder = {0.1, 0.05};
  shell.estimate.ladder_values = {0.04, 0.041};
  shell.estimate.ladder_hits = {1000, 480};
  r.results.push_back(shell);
  r.wall_time_seconds = 1.5;
  r.timestamp = "2026-01-01T00:00:00Z";
  return r;
}

}  // namespace

TEST_CASE("run records survive a JSON round trip") {
  const RunRecord r = sample_record();
  CHECK(run_record_from_json(to_json(r)) == r);
  CHECK(run_record_from_json(to_json(r, -1)) == r);
}

TEST_CASE("records carry the state parameters") {
  const auto r = sample_record();
  CHECK(r.state == "2P_2p");
  CHECK(r.family == "coulomb");
  CHECK(r.version == std::string(kArtifactVersion));
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["results"][0]["exact_rational"] == "-1/6");
  CHECK(j["sampler"]["seed"] == 5);
}

TEST_CASE("timestamps are ISO 8601 UTC") {
  const auto t = utc_timestamp();
  CHECK(t.size() == 20);
  CHECK(t[10] == 'T');
  CHECK(t.back() == 'Z');
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS_AS(run_record_from_json("not json"), InvalidArgument);
  CHECK_THROWS_AS(run_record_from_json("{}"), InvalidArgument);
  auto j = nlohmann::json::parse(to_json(sample_record()));
  j["results"][0]["estimate"]["method"] = "guess";
  CHECK_THROWS_AS(run_record_from_json(j.dump()), InvalidArgument);
}
