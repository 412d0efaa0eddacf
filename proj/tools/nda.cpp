#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nda/analytic_reference.hpp"
#include "nda/errors.hpp"
#include "nda/estimators.hpp"
#include "nda/nodal_topology.hpp"
#include "nda/run_record.hpp"
#include "nda/state_catalog.hpp"

namespace {

using nda::ComponentResult;
using nda::NdaEstimate;
using nda::RunRecord;
using nda::StateSpec;
using nlohmann::json;

enum Exit { kPass = 0, kVerificationFailure = 1, kUsage = 2, kUnconverged = 3 };

// Sigma thresholds for verify-tables: cells within 3 sigma pass, cells beyond
// 4 sigma fail, anything between is reported as marginal.
constexpr double kPassSigma = 3.0;
constexpr double kFailSigma = 4.0;
// Absolute tolerance for zero-error (quadrature) cells.
constexpr double kExactTolerance = 1e-7;

std::string sig6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string exact_text(const ComponentResult& c) {
  if (!c.exact) return "-";
  std::string s = sig6(*c.exact);
  if (c.exact_rational) s = *c.exact_rational + " (" + s + ")";
  return s;
}

std::string deviation_text(const ComponentResult& c) {
  if (!c.exact) return "-";
  if (c.sigma_deviation) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%+.2f", *c.sigma_deviation);
    return buf;
  }
  char buf[48];
  std::snprintf(buf, sizeof buf, "|d|=%.1e", std::abs(c.estimate.mean - *c.exact));
  return buf;
}

ComponentResult make_component(std::string name, const NdaEstimate& e, const std::optional<nda::ReferenceValue>& ref) {
  ComponentResult c;
  c.component = std::move(name);
  c.estimate = e;
  if (ref) {
    c.exact = ref->value;
    if (ref->exact) c.exact_rational = nda::to_string(*ref->exact);
    if (e.std_error > 0.0) c.sigma_deviation = (e.mean - ref->value) / e.std_error;
  }
  return c;
}

nda::ReferenceValue value_only(double v) { return nda::ReferenceValue{v, std::nullopt, ""}; }

// Sum of two independent estimates, errors in quadrature.
NdaEstimate add(const NdaEstimate& a, const NdaEstimate& b, double sign = 1.0) {
  NdaEstimate e = a;
  e.mean = a.mean + sign * b.mean;
  e.std_error = std::hypot(a.std_error, b.std_error);
  e.n_samples = a.n_samples + b.n_samples;
  e.status = a.status != nda::EstimateStatus::ok ? a.status : b.status;
  e.rejected = a.rejected + b.rejected;
  e.ladder.clear();
  e.ladder_values.clear();
  e.ladder_hits.clear();
  return e;
}

struct SamplingOptions {
  double samples = 1.6e6;  // total over all chains
  std::size_t chains = 8;
  std::uint64_t seed = 1;
  std::string shell_level = "distance";
};

nda::SamplerConfig sampler_for(const StateSpec& state, const SamplingOptions& o) {
  if (!(o.samples >= 1.0) || o.chains == 0) throw nda::InvalidArgument("--samples and --chains must be positive");
  const auto steps = static_cast<std::size_t>(std::llround(o.samples / static_cast<double>(o.chains)));
  auto cfg = nda::SamplerConfig::for_state(state, std::max<std::size_t>(steps, 10), o.seed, o.chains);
  cfg.shell_level = nda::parse_shell_level(o.shell_level);
  return cfg;
}

// Kinetic nda by the requested method; "auto" prefers the exact surface
// parametrization and falls back to the delta shell.
NdaEstimate kinetic(const StateSpec& state, const nda::SamplerConfig& cfg, const std::string& method) {
  if (method == "quadrature") return nda::quadrature_estimate(state, nda::QuadratureTarget::kin_nda);
  if (method == "shell") return nda::estimate_kin_nda_shell(state, cfg);
  if (method == "surface" || (method == "auto" && nda::node_parametrization(state).explicit_form())) {
    return nda::estimate_kin_nda_surface(state, cfg);
  }
  return nda::estimate_kin_nda_shell(state, cfg);
}

NdaEstimate potential(const StateSpec& state, const nda::SamplerConfig& cfg, const std::string& method) {
  if (method == "quadrature") return nda::quadrature_estimate(state, nda::QuadratureTarget::pot_nda);
  return nda::estimate_pot_nda(state, state.hamiltonian, cfg);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool unconverged(const RunRecord& r) {
  for (const auto& c : r.results) {
    if (c.estimate.status == nda::EstimateStatus::unconverged) return true;
  }
  return false;
}

RunRecord compute(const StateSpec& state, const std::vector<std::string>& components, const std::string& method,
                  const SamplingOptions& opts) {
  const auto started = std::chrono::steady_clock::now();
  const auto cfg = sampler_for(state, opts);
  RunRecord record = nda::make_run_record("compute", state, cfg);
  const auto& nda_ref = state.exact_nda;

  std::optional<NdaEstimate> pot, kin;
  auto need_pot = [&] {
    if (!pot) pot = potential(state, cfg, method);
    return *pot;
  };
  auto need_kin = [&] {
    if (!kin) kin = kinetic(state, cfg, method);
    return *kin;
  };

  for (const auto& name : components) {
    if (name == "pot") {
      record.results.push_back(make_component("pot_nda", need_pot(), nda_ref ? std::optional(nda_ref->pot) : std::nullopt));
    } else if (name == "kin") {
      record.results.push_back(make_component("kin_nda", need_kin(), nda_ref ? std::optional(nda_ref->kin) : std::nullopt));
    } else if (name == "sum") {
      const NdaEstimate sum = add(need_kin(), need_pot());
      std::optional<nda::ReferenceValue> ref;
      if (state.eigenstate && state.exact_total) {
        ref = state.exact_total;
      } else if (nda_ref) {
        ref = value_only(nda_ref->kin.value + nda_ref->pot.value);
      }
      record.results.push_back(make_component("sum_nda", sum, ref));
      if (!state.eigenstate && state.comparison_total) {
        // distance of the non-eigenstate nda sum from the true eigenvalue
        NdaEstimate gap = sum;
        gap.mean = sum.mean - state.comparison_total->value;
        std::optional<nda::ReferenceValue> gap_ref;
        if (ref) gap_ref = value_only(ref->value - state.comparison_total->value);
        record.results.push_back(make_component("sum_minus_eigenvalue", gap, gap_ref));
      }
    } else if (name == "standard") {
      if (method == "quadrature") throw nda::InvalidArgument("standard expectations have no quadrature oracle");
      const auto st = nda::estimate_standard_expectations(state, state.hamiltonian, cfg);
      const auto& ref = state.exact_standard;
      record.results.push_back(make_component("kin", st.kin, ref ? std::optional(ref->kin) : std::nullopt));
      record.results.push_back(make_component("pot", st.pot, ref ? std::optional(ref->pot) : std::nullopt));
    } else if (name == "norm") {
      const NdaEstimate n = method == "quadrature" ? nda::quadrature_estimate(state, nda::QuadratureTarget::abs_norm)
                                                   : nda::estimate_abs_norm(state, cfg);
      std::optional<nda::ReferenceValue> ref;
      if (method != "quadrature" && state.reduction != nda::Reduction::none) {
        ref = value_only(nda::quadrature_oracle(state, nda::QuadratureTarget::abs_norm));
      }
      record.results.push_back(make_component("abs_norm", n, ref));
    } else {
      throw nda::InvalidArgument("unknown component '" + name + "' (pot, kin, sum, standard, norm)");
    }
  }
  record.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return record;
}

// ------------------------------------------------------------------ output

void print_table(std::ostream& out, const std::vector<RunRecord>& records) {
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %-20s %-20s %13s %11s %22s %9s  %s\n", "state", "component", "method",
                "estimate", "stderr", "exact", "dev/sigma", "status");
  out << line;
  for (const auto& r : records) {
    for (const auto& c : r.results) {
      const auto& e = c.estimate;
      std::snprintf(line, sizeof line, "%-24s %-20s %-20s %13s %11s %22s %9s  %s%s\n", r.state.c_str(),
                    c.component.c_str(), nda::to_string(e.method), sig6(e.mean).c_str(), sig6(e.std_error).c_str(),
                    exact_text(c).c_str(), deviation_text(c).c_str(), nda::to_string(e.status),
                    e.status == nda::EstimateStatus::unconverged ? " *" : "");
      out << line;
    }
  }
}

void print_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "state,component,method,mean,stderr,exact,sigma_deviation\n";
  out.precision(17);
  for (const auto& r : records) {
    for (const auto& c : r.results) {
      out << r.state << ',' << c.component << ',' << nda::to_string(c.estimate.method) << ',' << c.estimate.mean << ','
          << c.estimate.std_error << ',';
      if (c.exact) out << *c.exact;
      out << ',';
      if (c.sigma_deviation) out << *c.sigma_deviation;
      out << '\n';
    }
  }
}

void emit_records(const std::vector<RunRecord>& records, const std::string& format, const std::string& out_path,
                  bool single) {
  auto write = [&](std::ostream& out) {
    if (format == "json") {
      if (single && records.size() == 1) {
        out << nda::to_json(records.front()) << '\n';
      } else {
        json arr = json::array();
        for (const auto& r : records) arr.push_back(json::parse(nda::to_json(r)));
        out << arr.dump(2) << '\n';
      }
    } else if (format == "csv") {
      print_csv(out, records);
    } else {
      print_table(out, records);
    }
  };
  write(std::cout);
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw nda::InvalidArgument("cannot open output file " + out_path);
    write(file);
  }
}

void emit_json_or_text(const json& j, const std::string& text, const std::string& format, const std::string& out_path) {
  const std::string body = format == "json" ? j.dump(2) + "\n" : text;
  std::cout << body;
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw nda::InvalidArgument("cannot open output file " + out_path);
    file << body;
  }
}

// ---------------------------------------------------------- verify-tables

enum class Cell { pass, marginal, fail };

Cell judge(const ComponentResult& c) {
  if (!c.exact) return Cell::pass;
  const double diff = std::abs(c.estimate.mean - *c.exact);
  if (c.estimate.std_error == 0.0) return diff <= kExactTolerance ? Cell::pass : Cell::fail;
  const double sigmas = diff / c.estimate.std_error;
  if (sigmas <= kPassSigma) return Cell::pass;
  return sigmas <= kFailSigma ? Cell::marginal : Cell::fail;
}

int verify_tables(const std::vector<std::string>& only, const std::string& method, const SamplingOptions& opts,
                  const std::string& format, const std::string& out_path) {
  std::vector<std::string> names = only.empty() ? nda::catalog_names() : only;
  std::vector<RunRecord> records;
  for (const auto& name : names) {
    const StateSpec state = nda::catalog_lookup(name);
    std::vector<std::string> components;
    if (state.exact_nda) {
      components.push_back("kin");
      components.push_back("pot");
    }
    if (state.exact_standard && method != "quadrature") components.push_back("standard");
    if (components.empty()) continue;
    if (method == "quadrature") {
      if (state.reduction == nda::Reduction::none) {
        std::cerr << name << ": no quadrature reduction, skipped\n";
        continue;
      }
      try {
        nda::quadrature_oracle(state, nda::QuadratureTarget::kin_nda);
      } catch (const nda::NotReducible&) {
        std::cerr << name << ": no kinetic quadrature reduction, kin_nda skipped\n";
        std::erase(components, std::string("kin"));
      }
    }
    RunRecord r = compute(state, components, method, opts);
    r.command = "verify-tables";
    records.push_back(std::move(r));
  }

  std::size_t pass = 0, marginal = 0, fail = 0;
  std::ostringstream text;
  for (const auto& r : records) {
    for (const auto& c : r.results) {
      const Cell v = judge(c);
      const char* tag = v == Cell::pass ? "PASS" : v == Cell::marginal ? "MARGINAL" : "FAIL";
      (v == Cell::pass ? pass : v == Cell::marginal ? marginal : fail) += 1;
      char line[256];
      std::snprintf(line, sizeof line, "%-8s %-24s %-8s %13s +- %-11s exact %-22s dev %s\n", tag, r.state.c_str(),
                    c.component.c_str(), sig6(c.estimate.mean).c_str(), sig6(c.estimate.std_error).c_str(),
                    exact_text(c).c_str(), deviation_text(c).c_str());
      text << line;
    }
  }
  text << pass << " pass, " << marginal << " marginal (3-4 sigma), " << fail << " fail\n";
  if (format == "table") {
    std::cout << text.str();
    if (!out_path.empty()) std::ofstream(out_path) << text.str();
  } else {
    emit_records(records, format, out_path, false);
    std::cerr << text.str();
  }
  for (const auto& r : records) {
    if (unconverged(r)) return kUnconverged;
  }
  return fail > 0 ? kVerificationFailure : kPass;
}

// ---------------------------------------------------------------- topology

int domains(const StateSpec& state, const nda::DomainOptions& options, const std::string& format,
            const std::string& out_path) {
  const auto r = nda::count_nodal_domains(state, options);
  json j{{"state", state.name},
         {"n_domains", r.n_domains},
         {"n_points", r.n_points},
         {"n_edges_tested", r.n_edges_tested},
         {"n_edges_joined", r.n_edges_joined},
         {"n_positive", r.n_positive},
         {"n_negative", r.n_negative},
         {"component_sizes", r.component_sizes},
         {"unbalanced", r.unbalanced},
         {"confidence_note", r.confidence_note},
         {"seed", options.seed}};
  std::ostringstream text;
  text << state.name << ": " << r.n_domains << " nodal domains\n"
       << "  points " << r.n_points << " (+" << r.n_positive << " / -" << r.n_negative << "), edges tested "
       << r.n_edges_tested << ", joined " << r.n_edges_joined << "\n  " << r.confidence_note << "\n";
  if (r.unbalanced) std::cerr << "warning: unbalanced sample, fewer than 10% of points carry one sign\n";
  emit_json_or_text(j, text.str(), format, out_path);
  return kPass;
}

int equivalence(const StateSpec& a, const StateSpec& b, const std::string& transform, bool search, std::size_t points,
                std::uint64_t seed, const std::string& format, const std::string& out_path) {
  nda::EquivalenceReport report;
  std::size_t tried = 0;
  bool found = true;
  if (search) {
    const auto s = nda::search_node_equivalence(a, b, points, seed);
    tried = s.candidates_tried;
    found = s.transform.has_value();
    report = s.report;
    if (!found) report.transform = "none found among signed-permutation transforms";
  } else {
    const auto t = nda::TransformSpec::parse(transform, a.wave_function().n_particles());
    report = nda::test_node_equivalence(a, b, t, points, seed);
  }
  json j{{"state_a", a.name},
         {"state_b", b.name},
         {"verdict", found ? nda::to_string(report.verdict) : "inequivalent"},
         {"agreement_fraction", report.agreement_fraction},
         {"n_points", report.n_points},
         {"n_resampled", report.n_resampled},
         {"degenerate", report.degenerate},
         {"transform", report.transform},
         {"seed", seed}};
  if (search) j["candidates_tried"] = tried;
  std::ostringstream text;
  text << a.name << " vs " << b.name << ": " << j["verdict"].get<std::string>() << "\n"
       << "  transform " << report.transform << "\n";
  if (!search || found) {
    text << "  agreement " << sig6(report.agreement_fraction) << " over " << report.n_points << " points, "
         << report.n_resampled << " resampled near a node\n";
  }
  if (search) text << "  candidates tried " << tried << "\n";
  if (report.degenerate) std::cerr << "warning: more than 1% of samples fell within 1e-12 of a node\n";
  emit_json_or_text(j, text.str(), format, out_path);
  return kPass;
}

// ----------------------------------------------------------------- catalog

json reference_json(const std::optional<nda::ReferenceValue>& v) {
  if (!v) return nullptr;
  json j{{"value", v->value}, {"formula", v->formula}};
  j["rational"] = v->exact ? json(nda::to_string(*v->exact)) : json(nullptr);
  return j;
}

int catalog(double Z, double omega, const std::string& format, const std::string& out_path) {
  json arr = json::array();
  std::ostringstream text;
  char line[256];
  std::snprintf(line, sizeof line, "%-24s %-17s %-10s %16s %20s %24s\n", "state", "node", "reduction", "total",
                "kin_nda", "pot_nda");
  text << line;
  for (const auto& name : nda::catalog_names()) {
    StateSpec s;
    try {
      s = nda::catalog_lookup(name, Z, omega);
    } catch (const nda::InvalidArgument&) {
      continue;  // state exists only at the analytic point
    }
    const char* reduction = s.reduction == nda::Reduction::none ? "none" : "quadrature";
    json j{{"name", s.name},
           {"description", s.description},
           {"eigenstate", s.eigenstate},
           {"node_kind", nda::to_string(s.node_kind)},
           {"quadrature", s.reduction != nda::Reduction::none},
           {"parameters", {{"Z", s.parameters.Z}, {"omega", s.parameters.omega}, {"g0", s.parameters.g0}}},
           {"exact_total", reference_json(s.exact_total)},
           {"comparison_total", reference_json(s.comparison_total)}};
    j["exact_nda"] = s.exact_nda ? json{{"kin", reference_json(s.exact_nda->kin)}, {"pot", reference_json(s.exact_nda->pot)}}
                                 : json(nullptr);
    j["exact_standard"] = s.exact_standard ? json{{"kin", reference_json(s.exact_standard->kin)},
                                                  {"pot", reference_json(s.exact_standard->pot)}}
                                           : json(nullptr);
    arr.push_back(j);
    auto show = [](const std::optional<nda::ReferenceValue>& v) {
      if (!v) return std::string("-");
      return v->exact ? nda::to_string(*v->exact) + " (" + sig6(v->value) + ")" : sig6(v->value);
    };
    std::snprintf(line, sizeof line, "%-24s %-17s %-10s %16s %20s %24s\n", s.name.c_str(), nda::to_string(s.node_kind),
                  reduction, show(s.eigenstate ? s.exact_total : s.comparison_total).c_str(),
                  show(s.exact_nda ? std::optional(s.exact_nda->kin) : std::nullopt).c_str(),
                  show(s.exact_nda ? std::optional(s.exact_nda->pot) : std::nullopt).c_str());
    text << line;
  }
  if (format == "csv") {
    std::ostringstream csv;
    csv.precision(17);
    csv << "state,node_kind,eigenstate,total,kin_nda,pot_nda\n";
    for (const auto& j : arr) {
      auto val = [](const json& r) { return r.is_null() ? std::string() : std::to_string(r["value"].get<double>()); };
      csv << j["name"].get<std::string>() << ',' << j["node_kind"].get<std::string>() << ','
          << (j["eigenstate"].get<bool>() ? "true" : "false") << ',' << val(j["exact_total"]) << ','
          << (j["exact_nda"].is_null() ? "" : val(j["exact_nda"]["kin"])) << ','
          << (j["exact_nda"].is_null() ? "" : val(j["exact_nda"]["pot"])) << '\n';
    }
    emit_json_or_text(arr, csv.str(), "text", out_path);
  } else {
    emit_json_or_text(arr, text.str(), format, out_path);
  }
  return kPass;
}

void add_sampling_options(CLI::App* cmd, SamplingOptions& o) {
  cmd->add_option("--samples", o.samples, "total samples over all chains (e.g. 1e6)")->capture_default_str();
  cmd->add_option("--chains", o.chains, "independent chains")->capture_default_str();
  cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
  cmd->add_option("--shell-level", o.shell_level, "delta-shell level function")
      ->check(CLI::IsMember({"distance", "value"}))
      ->capture_default_str();
}

void add_output_options(CLI::App* cmd, std::string& format, std::string& out) {
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json", "csv"}))->capture_default_str();
  cmd->add_option("--out", out, "also write the output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nodal-hypersurface and domain averages of few-electron wave functions"};
  app.require_subcommand(1);

  std::string format = "table", out;
  std::string state_name;
  double Z = 1.0, omega = 0.25;
  std::optional<double> g0;
  SamplingOptions sampling;

  auto* compute_cmd = app.add_subcommand("compute", "estimate nda components of one state");
  std::string components = "pot,kin,sum", method = "auto";
  compute_cmd->add_option("--state", state_name, "catalog state")->required();
  compute_cmd->add_option("--Z", Z, "nuclear charge")->capture_default_str();
  compute_cmd->add_option("--omega", omega, "trap frequency")->capture_default_str();
  compute_cmd->add_option("--g0", g0, "interaction strength (harmonic states)");
  compute_cmd->add_option("--components", components, "comma list of pot, kin, sum, standard, norm")
      ->capture_default_str();
  compute_cmd->add_option("--method", method, "kinetic estimator")
      ->check(CLI::IsMember({"auto", "surface", "shell", "quadrature"}))
      ->capture_default_str();
  add_sampling_options(compute_cmd, sampling);
  add_output_options(compute_cmd, format, out);

  auto* verify_cmd = app.add_subcommand("verify-tables", "check every catalog state against its exact values");
  std::vector<std::string> only;
  std::string verify_method = "auto";
  verify_cmd->add_option("--only", only, "restrict to these states")->delimiter(',');
  verify_cmd->add_option("--method", verify_method, "kinetic estimator")
      ->check(CLI::IsMember({"auto", "surface", "shell", "quadrature"}))
      ->capture_default_str();
  add_sampling_options(verify_cmd, sampling);
  add_output_options(verify_cmd, format, out);

  auto* domains_cmd = app.add_subcommand("domains", "count nodal domains of a state");
  nda::DomainOptions domain_options;
  domains_cmd->add_option("--state", state_name, "catalog state")->required();
  domains_cmd->add_option("--Z", Z, "nuclear charge")->capture_default_str();
  domains_cmd->add_option("--omega", omega, "trap frequency")->capture_default_str();
  domains_cmd->add_option("--points", domain_options.n_points, "sample points")->capture_default_str();
  domains_cmd->add_option("--k", domain_options.k_neighbors, "nearest neighbours per point")->capture_default_str();
  domains_cmd->add_option("--checks", domain_options.segment_checks, "sign checks per edge")->capture_default_str();
  domains_cmd->add_option("--seed", domain_options.seed, "random seed")->capture_default_str();
  add_output_options(domains_cmd, format, out);

  auto* equiv_cmd = app.add_subcommand("equiv", "test node equivalence of two states under a transform");
  std::string name_a, name_b, flip, transform;
  bool search = false;
  std::size_t points = 100000;
  std::uint64_t equiv_seed = 1;
  equiv_cmd->add_option("--a", name_a, "first state")->required();
  equiv_cmd->add_option("--b", name_b, "second state")->required();
  equiv_cmd->add_option("--Z", Z, "nuclear charge")->capture_default_str();
  equiv_cmd->add_option("--omega", omega, "trap frequency")->capture_default_str();
  auto* flip_opt = equiv_cmd->add_option("--flip", flip, "reflections axis:particle, e.g. x:2 or x:1,z:2");
  auto* transform_opt = equiv_cmd->add_option("--transform", transform, "named transform: identity");
  auto* search_opt = equiv_cmd->add_flag("--search", search, "search signed-permutation transforms");
  flip_opt->excludes(transform_opt)->excludes(search_opt);
  transform_opt->excludes(search_opt);
  equiv_cmd->add_option("--points", points, "sample points")->capture_default_str();
  equiv_cmd->add_option("--seed", equiv_seed, "random seed")->capture_default_str();
  add_output_options(equiv_cmd, format, out);

  auto* catalog_cmd = app.add_subcommand("catalog", "list catalog states with their exact references");
  catalog_cmd->add_option("--Z", Z, "nuclear charge")->capture_default_str();
  catalog_cmd->add_option("--omega", omega, "trap frequency")->capture_default_str();
  add_output_options(catalog_cmd, format, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*compute_cmd) {
      const StateSpec state = nda::catalog_lookup(state_name, Z, omega, g0);
      const RunRecord record = compute(state, split(components), method, sampling);
      emit_records({record}, format, out, true);
      if (unconverged(record)) {
        std::cerr << "warning: at least one estimate is unconverged (marked *)\n";
        return kUnconverged;
      }
      return kPass;
    }
    if (*verify_cmd) return verify_tables(only, verify_method, sampling, format, out);
    if (*domains_cmd) return domains(nda::catalog_lookup(state_name, Z, omega), domain_options, format, out);
    if (*equiv_cmd) {
      const std::string t = !flip.empty() ? flip : (transform.empty() ? "identity" : transform);
      return equivalence(nda::catalog_lookup(name_a, Z, omega), nda::catalog_lookup(name_b, Z, omega), t, search,
                         points, equiv_seed, format, out);
    }
    if (*catalog_cmd) return catalog(Z, omega, format, out);
  } catch (const nda::UnknownState& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nda::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nda::NotReducible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nda::NoKnownNode& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  return kUsage;
}
