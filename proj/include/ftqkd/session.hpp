#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftqkd/channel.hpp"
#include "ftqkd/params.hpp"
#include "ftqkd/slicing.hpp"
#include "ftqkd/stats.hpp"

namespace ftqkd {

struct SweepSpec {
  std::string parameter;        // a ProtocolParams or AttackStrategy field name
  std::vector<double> values;
};

struct SessionConfig {
  ProtocolParams params;
  AttackStrategy attack;
  std::uint64_t n_rounds = 1000000;
  std::uint64_t master_seed = 1;
  std::optional<SweepSpec> sweep;
  std::string output_path;  // empty: stdout only
};

// Throws std::invalid_argument on invalid params/attack/rounds or an
// unknown sweep parameter name.
void validate(const SessionConfig& cfg);

// Names accepted as sweep parameters.
std::vector<std::string> sweepable_parameters();

// Returns a copy of cfg with the named parameter set to value
// (revalidates). Used by run_sweep and exposed for tests.
SessionConfig apply_parameter(const SessionConfig& cfg, const std::string& name, double value);

// One full round: encode -> transmit -> measure, drawing from the
// substream keyed by (master_seed, round_index). Rounds are therefore
// independent and replayable in any order.
PhotonRecord simulate_round(const SessionConfig& cfg, std::uint64_t round_index);

// Runs cfg.n_rounds rounds, tallying as it goes (records are not
// materialized). n_threads > 1 splits the round range across workers;
// the per-round substreams make the result identical for every worker
// count.
SessionStats run_session(const SessionConfig& cfg, int n_threads = 1);

// One session per sweep value (ascending), each with a seed derived from
// (master_seed, row index); rows carry sweep_parameter/sweep_value.
std::vector<SessionStats> run_sweep(const SessionConfig& cfg, int n_threads = 1);

// Per-basis z-scores of the empirical wrong-bin counts against the
// analytic error probability carried by the stats.
struct ComparisonReport {
  double z_time;      // NaN when the basis had no conclusive rounds
  double z_freq;
  bool comparable;    // at least one basis had conclusive rounds
  bool approximate;   // stats came from GaussianProtocol mode
  bool pass;          // comparable and every defined |z| <= 3
};

ComparisonReport report_compare(const SessionStats& stats);

}  // namespace ftqkd
