#include "nda/run_record.hpp"

#include <chrono>
#include <ctime>

#include <json.hpp>

#include "nda/errors.hpp"

namespace nda {

using nlohmann::json;

namespace {

json estimate_json(const NdaEstimate& e) {
  return json{{"mean", e.mean},
              {"std_error", e.std_error},
              {"n_samples", e.n_samples},
              {"n_chains", e.n_chains},
              {"seed", e.seed},
              {"method", to_string(e.method)},
              {"status", to_string(e.status)},
              {"rejected", e.rejected},
              {"acceptance", e.acceptance},
              {"ladder", e.ladder},
              {"ladder_values", e.ladder_values},
              {"ladder_hits", e.ladder_hits}};
}

NdaEstimate estimate_from(const json& j) {
  NdaEstimate e;
  e.mean = j.at("mean").get<double>();
  e.std_error = j.at("std_error").get<double>();
  e.n_samples = j.at("n_samples").get<std::uint64_t>();
  e.n_chains = j.at("n_chains").get<std::size_t>();
  e.seed = j.at("seed").get<std::uint64_t>();
  e.method = parse_method(j.at("method").get<std::string>());
  e.status = parse_status(j.at("status").get<std::string>());
  e.rejected = j.at("rejected").get<std::uint64_t>();
  e.acceptance = j.at("acceptance").get<double>();
  e.ladder = j.at("ladder").get<std::vector<double>>();
  e.ladder_values = j.at("ladder_values").get<std::vector<double>>();
  e.ladder_hits = j.at("ladder_hits").get<std::vector<std::uint64_t>>();
  return e;
}

json sampler_json(const SamplerConfig& s) {
  return json{{"n_chains", s.n_chains},
              {"steps_per_chain", s.steps_per_chain},
              {"burn_in", s.burn_in},
              {"proposal_step", s.proposal_step},
              {"proposal_step_squared", s.proposal_step_squared},
              {"seed", s.seed},
              {"epsilon_ladder", s.epsilon_ladder},
              {"shell_level", to_string(s.shell_level)},
              {"blocks_per_chain", s.blocks_per_chain}};
}

SamplerConfig sampler_from(const json& j) {
  SamplerConfig s;
  s.n_chains = j.at("n_chains").get<std::size_t>();
  s.steps_per_chain = j.at("steps_per_chain").get<std::size_t>();
  s.burn_in = j.at("burn_in").get<std::size_t>();
  s.proposal_step = j.at("proposal_step").get<double>();
  s.proposal_step_squared = j.at("proposal_step_squared").get<double>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.epsilon_ladder = j.at("epsilon_ladder").get<std::vector<double>>();
  s.shell_level = parse_shell_level(j.at("shell_level").get<std::string>());
  s.blocks_per_chain = j.at("blocks_per_chain").get<std::size_t>();
  return s;
}

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

}  // namespace

RunRecord make_run_record(const std::string& command, const StateSpec& state, const SamplerConfig& sampler) {
  RunRecord r;
  r.command = command;
  r.state = state.name;
  r.family = state.parameters.family == StateParameters::Family::coulomb ? "coulomb" : "harmonic";
  r.Z = state.parameters.Z;
  r.omega = state.parameters.omega;
  r.g0 = state.parameters.g0;
  r.sampler = sampler;
  r.timestamp = utc_timestamp();
  return r;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string to_json(const RunRecord& record, int indent) {
  json results = json::array();
  for (const auto& c : record.results) {
    json item{{"component", c.component}, {"estimate", estimate_json(c.estimate)}};
    put_optional(item, "exact", c.exact);
    put_optional(item, "exact_rational", c.exact_rational);
    put_optional(item, "sigma_deviation", c.sigma_deviation);
    results.push_back(std::move(item));
  }
  const json j{{"command", record.command},
               {"state", record.state},
               {"parameters", {{"family", record.family}, {"Z", record.Z}, {"omega", record.omega}, {"g0", record.g0}}},
               {"sampler", sampler_json(record.sampler)},
               {"results", std::move(results)},
               {"wall_time_seconds", record.wall_time_seconds},
               {"version", record.version},
               {"timestamp", record.timestamp}};
  return j.dump(indent);
}

RunRecord run_record_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunRecord r;
    r.command = j.at("command").get<std::string>();
    r.state = j.at("state").get<std::string>();
    const auto& p = j.at("parameters");
    r.family = p.at("family").get<std::string>();
    r.Z = p.at("Z").get<double>();
    r.omega = p.at("omega").get<double>();
    r.g0 = p.at("g0").get<double>();
    r.sampler = sampler_from(j.at("sampler"));
    for (const auto& item : j.at("results")) {
      ComponentResult c;
      c.component = item.at("component").get<std::string>();
      c.estimate = estimate_from(item.at("estimate"));
      c.exact = get_optional<double>(item, "exact");
      c.exact_rational = get_optional<std::string>(item, "exact_rational");
      c.sigma_deviation = get_optional<double>(item, "sigma_deviation");
      r.results.push_back(std::move(c));
    }
    r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    r.version = j.at("version").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed run record: ") + e.what());
  }
}

}  // namespace nda
