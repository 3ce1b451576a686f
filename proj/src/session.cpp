#include "ftqkd/session.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "ftqkd/measurement.hpp"

namespace ftqkd {

namespace {

struct ParamSetter {
  const char* name;
  void (*set)(SessionConfig&, double);
};

constexpr ParamSetter kSetters[] = {
    {"sigma_w1", [](SessionConfig& c, double v) { c.params.sigma_w1 = v; }},
    {"sigma_w2", [](SessionConfig& c, double v) { c.params.sigma_w2 = v; }},
    {"omega0", [](SessionConfig& c, double v) { c.params.omega0 = v; }},
    {"delta_t", [](SessionConfig& c, double v) { c.params.delta_t = v; }},
    {"delta_w", [](SessionConfig& c, double v) { c.params.delta_w = v; }},
    {"bin_t", [](SessionConfig& c, double v) { c.params.bin_t = v; }},
    {"bin_w", [](SessionConfig& c, double v) { c.params.bin_w = v; }},
    {"buffer_fraction", [](SessionConfig& c, double v) { c.params.buffer_fraction = v; }},
    {"channel_loss", [](SessionConfig& c, double v) { c.params.channel_loss = v; }},
    {"eve_delta_t", [](SessionConfig& c, double v) { c.attack.eve_delta_t = v; }},
    {"eve_delta_w", [](SessionConfig& c, double v) { c.attack.eve_delta_w = v; }},
    {"resend_halfwidth", [](SessionConfig& c, double v) { c.attack.resend_halfwidth = v; }},
};

const ParamSetter* find_setter(const std::string& name) {
  for (const ParamSetter& s : kSetters) {
    if (name == s.name) {
      return &s;
    }
  }
  return nullptr;
}

double binomial_z(std::uint64_t wrong, std::uint64_t n, double p) {
  if (n == 0 || !(p > 0.0) || !(p < 1.0)) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  double nn = static_cast<double>(n);
  return (static_cast<double>(wrong) - nn * p) / std::sqrt(nn * p * (1.0 - p));
}

}  // namespace

void validate(const SessionConfig& cfg) {
  validate(cfg.params);
  validate(cfg.attack);
  if (cfg.n_rounds < 1) {
    throw std::invalid_argument("config.n_rounds: must be >= 1");
  }
  if (cfg.sweep) {
    if (!find_setter(cfg.sweep->parameter)) {
      throw std::invalid_argument("config.sweep.parameter: unknown name '" +
                                  cfg.sweep->parameter + "'");
    }
    if (cfg.sweep->values.empty()) {
      throw std::invalid_argument("config.sweep.values: must not be empty");
    }
  }
}

std::vector<std::string> sweepable_parameters() {
  std::vector<std::string> names;
  for (const ParamSetter& s : kSetters) {
    names.emplace_back(s.name);
  }
  return names;
}

SessionConfig apply_parameter(const SessionConfig& cfg, const std::string& name,
                              double value) {
  const ParamSetter* setter = find_setter(name);
  if (!setter) {
    throw std::invalid_argument("config.sweep.parameter: unknown name '" + name + "'");
  }
  SessionConfig out = cfg;
  setter->set(out, value);
  validate(out.params);
  validate(out.attack);
  return out;
}

PhotonRecord simulate_round(const SessionConfig& cfg, std::uint64_t round_index) {
  RandomStream rng(cfg.master_seed, round_index);
  auto [alice, pulse] = encode(cfg.params, rng);
  auto [delivered, trace] = transmit(pulse, cfg.attack, cfg.params, rng);
  BobResult bob = measure(delivered, cfg.params, rng);
  return PhotonRecord{alice, bob, trace, round_index};
}

SessionStats run_session(const SessionConfig& cfg, int n_threads) {
  validate(cfg);
  SessionTallies total;
  if (n_threads <= 1) {
    for (std::uint64_t k = 0; k < cfg.n_rounds; ++k) {
      accumulate(simulate_round(cfg, k), cfg.params, total);
    }
  } else {
    // Contiguous chunks, one tally per worker, merged in worker order.
    // Every count is an exact integer, so the merged result is identical
    // to the serial one.
    const std::uint64_t t = static_cast<std::uint64_t>(n_threads);
    std::vector<SessionTallies> parts(t);
    std::vector<std::thread> workers;
    workers.reserve(t);
    for (std::uint64_t w = 0; w < t; ++w) {
      std::uint64_t lo = cfg.n_rounds * w / t;
      std::uint64_t hi = cfg.n_rounds * (w + 1) / t;
      workers.emplace_back([&cfg, &parts, w, lo, hi] {
        for (std::uint64_t k = lo; k < hi; ++k) {
          accumulate(simulate_round(cfg, k), cfg.params, parts[w]);
        }
      });
    }
    for (std::thread& worker : workers) {
      worker.join();
    }
    for (const SessionTallies& part : parts) {
      total.merge(part);
    }
  }
  SessionStats stats = finalize_stats(total, cfg.params);
  stats.seed = cfg.master_seed;
  stats.attack = cfg.attack.kind;
  return stats;
}

std::vector<SessionStats> run_sweep(const SessionConfig& cfg, int n_threads) {
  validate(cfg);
  if (!cfg.sweep) {
    throw std::invalid_argument("config.sweep: required for run_sweep");
  }
  std::vector<double> values = cfg.sweep->values;
  std::sort(values.begin(), values.end());
  std::vector<SessionStats> rows;
  rows.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    SessionConfig row_cfg = apply_parameter(cfg, cfg.sweep->parameter, values[i]);
    row_cfg.sweep.reset();
    row_cfg.master_seed = derive_seed(cfg.master_seed, i);
    SessionStats stats = run_session(row_cfg, n_threads);
    stats.sweep_parameter = cfg.sweep->parameter;
    stats.sweep_value = values[i];
    rows.push_back(std::move(stats));
  }
  return rows;
}

ComparisonReport report_compare(const SessionStats& stats) {
  ComparisonReport r;
  r.z_time = binomial_z(stats.time.wrong, stats.time.conclusive(), stats.analytic_pe_time);
  r.z_freq = binomial_z(stats.freq.wrong, stats.freq.conclusive(), stats.analytic_pe_freq);
  r.comparable = !std::isnan(r.z_time) || !std::isnan(r.z_freq);
  r.approximate = stats.source_mode == SourceMode::GaussianProtocol;
  bool ok = r.comparable;
  if (!std::isnan(r.z_time) && std::abs(r.z_time) > 3.0) {
    ok = false;
  }
  if (!std::isnan(r.z_freq) && std::abs(r.z_freq) > 3.0) {
    ok = false;
  }
  r.pass = ok;
  return r;
}

}  // namespace ftqkd
