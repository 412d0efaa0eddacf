#include "nda/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "nda/errors.hpp"
#include "nda/sampling.hpp"
#include "nda/statistics.hpp"

namespace nda {

namespace {

constexpr std::uint64_t kPilotStream = 0x70696c6f74ull;

struct ChainTally {
  std::vector<double> means;
  std::vector<std::vector<double>> blocks;
};

CombinedMean combine(const ChainTally& t) { return combine_chains(t.means, t.blocks); }

EstimateStatus acceptance_status(double rate) {
  return (rate < 0.1 || rate > 0.9) ? EstimateStatus::acceptance_warning : EstimateStatus::ok;
}

NdaEstimate make_estimate(const SamplerConfig& cfg, EstimateMethod method) {
  NdaEstimate e;
  e.n_chains = cfg.n_chains;
  e.seed = cfg.seed;
  e.method = method;
  return e;
}

bool node_proximal(const Derivatives& d) {
  return d.value == 0.0 || std::abs(d.value) < 1e-14 * d.gradient_norm();
}

// Running sums over one chain, bucketed into contiguous blocks, for
// ratio-type estimators with several accumulated quantities.
class BlockedSums {
 public:
  BlockedSums(std::size_t n_values, std::size_t expected, std::size_t n_blocks)
      : n_values_(n_values),
        block_size_(std::max<std::size_t>(1, expected / std::max<std::size_t>(1, n_blocks))),
        n_blocks_(std::max<std::size_t>(1, n_blocks)),
        sums_(n_blocks_ * n_values, 0.0),
        counts_(n_blocks_, 0) {}

  double* next() {
    const std::size_t b = std::min(count_ / block_size_, n_blocks_ - 1);
    ++counts_[b];
    ++count_;
    return sums_.data() + b * n_values_;
  }

  std::vector<double> total() const {
    std::vector<double> t(n_values_, 0.0);
    for (std::size_t b = 0; b < n_blocks_; ++b) {
      for (std::size_t k = 0; k < n_values_; ++k) t[k] += sums_[b * n_values_ + k];
    }
    return t;
  }

  std::size_t n_blocks() const { return n_blocks_; }
  bool block_used(std::size_t b) const { return counts_[b] > 0; }
  std::vector<double> block(std::size_t b) const {
    return {sums_.begin() + static_cast<long>(b * n_values_), sums_.begin() + static_cast<long>((b + 1) * n_values_)};
  }

 private:
  std::size_t n_values_;
  std::size_t block_size_;
  std::size_t n_blocks_;
  std::size_t count_ = 0;
  std::vector<double> sums_;
  std::vector<std::size_t> counts_;
};

}  // namespace

const char* to_string(EstimateMethod m) {
  switch (m) {
    case EstimateMethod::metropolis_abs_psi: return "metropolis_abs_psi";
    case EstimateMethod::metropolis_psi_squared: return "metropolis_psi_squared";
    case EstimateMethod::reference_ratio: return "reference_ratio";
    case EstimateMethod::surface_param: return "surface_param";
    case EstimateMethod::delta_shell: return "delta_shell";
    case EstimateMethod::quadrature: return "quadrature";
  }
  return "?";
}

const char* to_string(EstimateStatus s) {
  switch (s) {
    case EstimateStatus::ok: return "ok";
    case EstimateStatus::acceptance_warning: return "acceptance_warning";
    case EstimateStatus::unconverged: return "unconverged";
  }
  return "?";
}

const char* to_string(ShellLevel s) { return s == ShellLevel::distance ? "distance" : "value"; }

ShellLevel parse_shell_level(const std::string& text) {
  if (text == "distance") return ShellLevel::distance;
  if (text == "value") return ShellLevel::value;
  throw InvalidArgument("unknown shell level: " + text);
}

EstimateMethod parse_method(const std::string& text) {
  for (auto m : {EstimateMethod::metropolis_abs_psi, EstimateMethod::metropolis_psi_squared,
                 EstimateMethod::reference_ratio, EstimateMethod::surface_param, EstimateMethod::delta_shell,
                 EstimateMethod::quadrature}) {
    if (text == to_string(m)) return m;
  }
  throw InvalidArgument("unknown estimator method: " + text);
}

EstimateStatus parse_status(const std::string& text) {
  for (auto s : {EstimateStatus::ok, EstimateStatus::acceptance_warning, EstimateStatus::unconverged}) {
    if (text == to_string(s)) return s;
  }
  throw InvalidArgument("unknown estimate status: " + text);
}

void SamplerConfig::validate() const {
  if (n_chains == 0) throw InvalidArgument("n_chains must be positive");
  if (steps_per_chain == 0) throw InvalidArgument("steps_per_chain must be positive");
  if (burn_in >= steps_per_chain) throw InvalidArgument("burn_in must be smaller than steps_per_chain");
  if (!(proposal_step > 0.0) || !(proposal_step_squared > 0.0)) {
    throw InvalidArgument("proposal steps must be positive");
  }
  if (blocks_per_chain == 0) throw InvalidArgument("blocks_per_chain must be positive");
  if (!epsilon_ladder.empty()) {
    if (epsilon_ladder.size() < 2) throw InvalidArgument("epsilon ladder needs at least two entries");
    for (std::size_t k = 0; k < epsilon_ladder.size(); ++k) {
      if (!(epsilon_ladder[k] > 0.0)) throw InvalidArgument("epsilon ladder entries must be positive");
      if (k > 0 && !(epsilon_ladder[k] < epsilon_ladder[k - 1])) {
        throw InvalidArgument("epsilon ladder must be strictly decreasing");
      }
    }
  }
}

SamplerConfig SamplerConfig::for_state(const StateSpec& state, std::size_t steps_per_chain, std::uint64_t seed,
                                       std::size_t n_chains) {
  SamplerConfig cfg;
  cfg.n_chains = n_chains;
  cfg.steps_per_chain = steps_per_chain;
  cfg.burn_in = steps_per_chain / 10;
  cfg.proposal_step = state.default_step;
  cfg.proposal_step_squared = state.default_step_squared;
  cfg.seed = seed;
  return cfg;
}

NdaEstimate estimate_pot_nda(const StateSpec& state, const HamiltonianSpec& h, const SamplerConfig& cfg,
                             Execution exec) {
  cfg.validate();
  const WaveFunctionModel& model = state.wave_function();
  const ReferenceDensity g = reference_density(state);
  const std::size_t measured = cfg.steps_per_chain - cfg.burn_in;

  ChainTally tally{std::vector<double>(cfg.n_chains), std::vector<std::vector<double>>(cfg.n_chains)};
  std::vector<std::uint64_t> rejected(cfg.n_chains, 0), proposed(cfg.n_chains, 0), accepted(cfg.n_chains, 0);
  std::vector<std::uint64_t> counts(cfg.n_chains, 0);

  for_each_index(cfg.n_chains, exec, [&](std::size_t c) {
    ChainRng rng(cfg.seed, c);
    MetropolisWalker walker(model, 1.0, cfg.proposal_step, starting_configuration(model, g, rng));
    for (std::size_t s = 0; s < cfg.burn_in; ++s) walker.sweep(rng);
    BlockAccumulator acc(measured, cfg.blocks_per_chain);
    for (std::size_t s = 0; s < measured; ++s) {
      walker.sweep(rng);
      double v;
      try {
        v = potential(h, walker.configuration());
      } catch (const SingularConfiguration&) {
        ++rejected[c];
        continue;
      }
      if (!std::isfinite(v)) {
        ++rejected[c];
        continue;
      }
      acc.add(v);
    }
    tally.means[c] = acc.mean();
    tally.blocks[c] = acc.block_means();
    counts[c] = acc.count();
    proposed[c] = walker.proposed();
    accepted[c] = walker.accepted();
  });

  NdaEstimate e = make_estimate(cfg, EstimateMethod::metropolis_abs_psi);
  const CombinedMean m = combine(tally);
  e.mean = m.mean;
  e.std_error = m.stderr_;
  std::uint64_t p = 0, a = 0;
  for (std::size_t c = 0; c < cfg.n_chains; ++c) {
    e.n_samples += counts[c];
    e.rejected += rejected[c];
    p += proposed[c];
    a += accepted[c];
  }
  e.acceptance = p == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(p);
  e.status = acceptance_status(e.acceptance);
  return e;
}

StandardExpectations estimate_standard_expectations(const StateSpec& state, const HamiltonianSpec& h,
                                                    const SamplerConfig& cfg, Execution exec) {
  cfg.validate();
  const WaveFunctionModel& model = state.wave_function();
  const ReferenceDensity g = reference_density(state);
  const std::size_t measured = cfg.steps_per_chain - cfg.burn_in;

  ChainTally kin{std::vector<double>(cfg.n_chains), std::vector<std::vector<double>>(cfg.n_chains)};
  ChainTally pot = kin;
  std::vector<std::uint64_t> rejected(cfg.n_chains, 0), proposed(cfg.n_chains, 0), accepted(cfg.n_chains, 0);
  std::vector<std::uint64_t> counts(cfg.n_chains, 0);

  for_each_index(cfg.n_chains, exec, [&](std::size_t c) {
    ChainRng rng(cfg.seed, c);
    MetropolisWalker walker(model, 2.0, cfg.proposal_step_squared, starting_configuration(model, g, rng));
    for (std::size_t s = 0; s < cfg.burn_in; ++s) walker.sweep(rng);
    BlockAccumulator kin_acc(measured, cfg.blocks_per_chain), pot_acc(measured, cfg.blocks_per_chain);
    Derivatives d;
    for (std::size_t s = 0; s < measured; ++s) {
      walker.sweep(rng);
      const Configuration& R = walker.configuration();
      model.evaluate(R, d);
      if (node_proximal(d)) {
        ++rejected[c];
        continue;
      }
      double v;
      try {
        v = potential(h, R);
      } catch (const SingularConfiguration&) {
        ++rejected[c];
        continue;
      }
      const double t = -0.5 * d.laplacian / d.value;
      if (!std::isfinite(v) || !std::isfinite(t)) {
        ++rejected[c];
        continue;
      }
      kin_acc.add(t);
      pot_acc.add(v);
    }
    kin.means[c] = kin_acc.mean();
    kin.blocks[c] = kin_acc.block_means();
    pot.means[c] = pot_acc.mean();
    pot.blocks[c] = pot_acc.block_means();
    counts[c] = kin_acc.count();
    proposed[c] = walker.proposed();
    accepted[c] = walker.accepted();
  });

  NdaEstimate base = make_estimate(cfg, EstimateMethod::metropolis_psi_squared);
  std::uint64_t p = 0, a = 0;
  for (std::size_t c = 0; c < cfg.n_chains; ++c) {
    base.n_samples += counts[c];
    base.rejected += rejected[c];
    p += proposed[c];
    a += accepted[c];
  }
  base.acceptance = p == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(p);
  base.status = acceptance_status(base.acceptance);

  StandardExpectations out{base, base};
  const CombinedMean mk = combine(kin), mp = combine(pot);
  out.kin.mean = mk.mean;
  out.kin.std_error = mk.stderr_;
  out.pot.mean = mp.mean;
  out.pot.std_error = mp.stderr_;
  return out;
}

NdaEstimate estimate_abs_norm(const StateSpec& state, const SamplerConfig& cfg, Execution exec) {
  cfg.validate();
  const WaveFunctionModel& model = state.wave_function();
  const ReferenceDensity g = reference_density(state);
  if (g.n_particles() != model.n_particles()) throw DimensionMismatch("reference density does not match state");

  ChainTally tally{std::vector<double>(cfg.n_chains), std::vector<std::vector<double>>(cfg.n_chains)};
  for_each_index(cfg.n_chains, exec, [&](std::size_t c) {
    ChainRng rng(cfg.seed, c);
    Configuration R(model.n_particles());
    BlockAccumulator acc(cfg.steps_per_chain, cfg.blocks_per_chain);
    for (std::size_t s = 0; s < cfg.steps_per_chain; ++s) {
      g.sample(rng, R);
      acc.add(std::abs(model.value(R)) * std::exp(-g.log_density(R)));
    }
    tally.means[c] = acc.mean();
    tally.blocks[c] = acc.block_means();
  });
  NdaEstimate e = make_estimate(cfg, EstimateMethod::reference_ratio);
  const CombinedMean m = combine(tally);
  e.mean = m.mean;
  e.std_error = m.stderr_;
  e.n_samples = cfg.n_chains * cfg.steps_per_chain;
  return e;
}

NdaEstimate estimate_kin_nda_surface(const StateSpec& state, const SamplerConfig& cfg, Execution exec) {
  cfg.validate();
  const WaveFunctionModel& model = state.wave_function();
  const NodeParametrization node = node_parametrization(state);
  if (!node.explicit_form()) throw NoKnownNode("state " + state.name + " has no node parametrization");
  const ReferenceDensity g = reference_density(state);

  ChainTally num{std::vector<double>(cfg.n_chains), std::vector<std::vector<double>>(cfg.n_chains)};
  ChainTally den = num;
  for_each_index(cfg.n_chains, exec, [&](std::size_t c) {
    ChainRng rng(cfg.seed, c);
    BlockAccumulator surface(cfg.steps_per_chain, cfg.blocks_per_chain);
    BlockAccumulator volume(cfg.steps_per_chain, cfg.blocks_per_chain);
    Derivatives d;
    for (std::size_t s = 0; s < cfg.steps_per_chain; ++s) {
      const NodePoint p = node.sample(rng);
      model.evaluate(p.R, d);
      surface.add(d.gradient_norm() * p.weight);
    }
    Configuration R(model.n_particles());
    for (std::size_t s = 0; s < cfg.steps_per_chain; ++s) {
      g.sample(rng, R);
      volume.add(std::abs(model.value(R)) * std::exp(-g.log_density(R)));
    }
    num.means[c] = surface.mean();
    num.blocks[c] = surface.block_means();
    den.means[c] = volume.mean();
    den.blocks[c] = volume.block_means();
  });

  const CombinedMean n = combine(num), dn = combine(den);
  if (dn.mean == 0.0) throw InvalidArgument("zero denominator in surface estimate");
  NdaEstimate e = make_estimate(cfg, EstimateMethod::surface_param);
  e.mean = n.mean / dn.mean;
  const double rn = n.mean != 0.0 ? n.stderr_ / n.mean : 0.0;
  const double rd = dn.stderr_ / dn.mean;
  e.std_error = std::abs(e.mean) * std::sqrt(rn * rn + rd * rd);
  e.n_samples = 2 * cfg.n_chains * cfg.steps_per_chain;
  return e;
}

std::vector<double> default_epsilon_ladder(const StateSpec& state, std::uint64_t seed, ShellLevel level) {
  const WaveFunctionModel& model = state.wave_function();
  const ReferenceDensity g = reference_density(state);
  ChainRng rng(seed, kPilotStream);
  constexpr std::size_t kPilot = 20000;
  std::vector<double> values(kPilot);
  Configuration R(model.n_particles());
  Derivatives d;
  for (auto& v : values) {
    g.sample(rng, R);
    if (level == ShellLevel::value) {
      v = std::abs(model.value(R));
    } else {
      model.evaluate(R, d);
      const double grad = d.gradient_norm();
      v = grad > 0.0 ? std::abs(d.value) / grad : INFINITY;
    }
  }
  const std::size_t q = kPilot / 100;
  std::nth_element(values.begin(), values.begin() + static_cast<long>(q), values.end());
  const double eps0 = values[q];
  if (!(eps0 > 0.0)) throw InvalidArgument("could not size the delta-shell ladder");
  return {eps0, eps0 / 2, eps0 / 4, eps0 / 8};
}

NdaEstimate estimate_kin_nda_shell(const StateSpec& state, const SamplerConfig& cfg, Execution exec) {
  cfg.validate();
  const WaveFunctionModel& model = state.wave_function();
  const ReferenceDensity g = reference_density(state);
  const std::vector<double> ladder =
      cfg.epsilon_ladder.empty() ? default_epsilon_ladder(state, cfg.seed, cfg.shell_level) : cfg.epsilon_ladder;
  const std::size_t K = ladder.size();
  std::vector<double> eps2(K);
  for (std::size_t k = 0; k < K; ++k) eps2[k] = ladder[k] * ladder[k];
  const std::vector<double> w = intercept_weights(eps2);

  // per sample: slot 0 = |Psi|/g, slots 1..K = shell terms, K+1..2K = hit counts
  const std::size_t n_values = 2 * K + 1;
  std::vector<std::vector<double>> totals(cfg.n_chains);
  std::vector<std::vector<std::vector<double>>> blocks(cfg.n_chains);

  for_each_index(cfg.n_chains, exec, [&](std::size_t c) {
    ChainRng rng(cfg.seed, c);
    Configuration R(model.n_particles());
    BlockedSums sums(n_values, cfg.steps_per_chain, cfg.blocks_per_chain);
    Derivatives d;
    for (std::size_t s = 0; s < cfg.steps_per_chain; ++s) {
      g.sample(rng, R);
      const double inv_g = std::exp(-g.log_density(R));
      double* slot = sums.next();
      if (cfg.shell_level == ShellLevel::value) {
        const double psi = std::abs(model.value(R));
        slot[0] += psi * inv_g;
        if (psi >= ladder[0]) continue;
        model.evaluate(R, d);
        const double grad2 = d.gradient_norm() * d.gradient_norm();
        for (std::size_t k = 0; k < K && psi < ladder[k]; ++k) {
          slot[1 + k] += grad2 * inv_g / (2.0 * ladder[k]);
          slot[1 + K + k] += 1.0;
        }
      } else {
        model.evaluate(R, d);
        const double psi = std::abs(d.value);
        const double grad = d.gradient_norm();
        slot[0] += psi * inv_g;
        for (std::size_t k = 0; k < K && psi < ladder[k] * grad; ++k) {
          slot[1 + k] += grad * inv_g / (2.0 * ladder[k]);
          slot[1 + K + k] += 1.0;
        }
      }
    }
    totals[c] = sums.total();
    for (std::size_t b = 0; b < sums.n_blocks(); ++b) {
      if (sums.block_used(b)) blocks[c].push_back(sums.block(b));
    }
  });

  auto extrapolate = [&](const std::vector<double>& t) {
    double a = 0.0;
    for (std::size_t k = 0; k < K; ++k) a += w[k] * t[1 + k] / t[0];
    return a;
  };

  ChainTally tally{std::vector<double>(cfg.n_chains), std::vector<std::vector<double>>(cfg.n_chains)};
  NdaEstimate e = make_estimate(cfg, EstimateMethod::delta_shell);
  e.ladder = ladder;
  e.ladder_values.assign(K, 0.0);
  e.ladder_hits.assign(K, 0);
  for (std::size_t c = 0; c < cfg.n_chains; ++c) {
    tally.means[c] = extrapolate(totals[c]);
    for (const auto& b : blocks[c]) tally.blocks[c].push_back(extrapolate(b));
    for (std::size_t k = 0; k < K; ++k) {
      e.ladder_values[k] += totals[c][1 + k] / totals[c][0] / static_cast<double>(cfg.n_chains);
      e.ladder_hits[k] += static_cast<std::uint64_t>(totals[c][1 + K + k]);
    }
  }
  const CombinedMean m = combine(tally);
  e.mean = m.mean;
  e.std_error = m.stderr_;
  e.n_samples = cfg.n_chains * cfg.steps_per_chain;
  if (e.ladder_hits.back() < 100) e.status = EstimateStatus::unconverged;
  return e;
}

NdaEstimate quadrature_estimate(const StateSpec& state, QuadratureTarget target) {
  NdaEstimate e;
  e.method = EstimateMethod::quadrature;
  e.mean = quadrature_oracle(state, target);
  e.std_error = 0.0;
  return e;
}

}  // namespace nda
