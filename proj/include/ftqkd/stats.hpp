#pragma once

#include <cstdint>
#include <string>

#include "ftqkd/channel.hpp"
#include "ftqkd/params.hpp"

namespace ftqkd {

// Tallies for one basis among sifted (basis-matched, detected) rounds.
// sifted = alice_buffer + bob_buffer + correct + wrong.
struct BasisCounts {
  std::uint64_t sifted = 0;
  std::uint64_t alice_buffer = 0;  // dropped after Alice's buffer announcement
  std::uint64_t bob_buffer = 0;    // Bob's value landed in a buffer zone
  std::uint64_t correct = 0;
  std::uint64_t wrong = 0;

  std::uint64_t conclusive() const { return correct + wrong; }
};

// Aggregated session result. Ratios that are undefined (no conclusive
// rounds, no sifted rounds) are quiet NaN. Count conservation:
// lost + wrong_basis + per-basis buffers + conclusive = n_rounds.
struct SessionStats {
  std::uint64_t seed = 0;
  std::uint64_t n_rounds = 0;
  SourceMode source_mode = SourceMode::GaussianProtocol;
  bool buffered = false;
  AttackKind attack = AttackKind::None;
  double s_t = 0.0;
  double s_w = 0.0;

  std::uint64_t lost = 0;
  std::uint64_t wrong_basis = 0;
  BasisCounts time;
  BasisCounts freq;

  double qber_time = 0.0;
  double qber_freq = 0.0;
  double analytic_pe_time = 0.0;  // reference value for the configured scheme at s_t
  double analytic_pe_freq = 0.0;
  double conclusive_efficiency = 0.0;  // conclusive / sifted, both bases pooled

  std::uint64_t bits_extracted = 0;
  std::uint64_t bit_errors = 0;

  // Set only on rows produced by a sweep.
  std::string sweep_parameter;
  double sweep_value = 0.0;
};

}  // namespace ftqkd
