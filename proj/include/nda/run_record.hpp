#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nda/estimators.hpp"
#include "nda/state_catalog.hpp"

namespace nda {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// One estimated quantity with its reference value, if one is known.
struct ComponentResult {
  std::string component;  // kin_nda, pot_nda, sum_nda, kin, pot, total
  NdaEstimate estimate;
  std::optional<double> exact;
  std::optional<std::string> exact_rational;  // "p/q"
  std::optional<double> sigma_deviation;      // (mean - exact) / std_error

  friend bool operator==(const ComponentResult&, const ComponentResult&) = default;
};

struct RunRecord {
  std::string command;
  std::string state;
  std::string family;  // coulomb or harmonic
  double Z = 1.0;
  double omega = 0.25;
  double g0 = 0.0;
  SamplerConfig sampler;
  std::vector<ComponentResult> results;
  double wall_time_seconds = 0.0;
  std::string version = kArtifactVersion;
  std::string timestamp;  // UTC, ISO 8601

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Copies the state's name and parameters into a fresh record.
RunRecord make_run_record(const std::string& command, const StateSpec& state, const SamplerConfig& sampler);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

std::string to_json(const RunRecord& record, int indent = 2);
/// Throws InvalidArgument on malformed or incomplete input.
RunRecord run_record_from_json(const std::string& text);

}  // namespace nda
