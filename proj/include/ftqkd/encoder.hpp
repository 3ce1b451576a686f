#pragma once

#include <optional>
#include <utility>

#include "ftqkd/params.hpp"
#include "ftqkd/pulse.hpp"
#include "ftqkd/rng.hpp"

namespace ftqkd {

// Encoding/measurement basis. Frequency coding uses the narrowband source
// (information in the spectral center); Time coding uses the broadband
// source (information in the pulse delay).
enum class Basis { Frequency = 0, Time = 1 };

// Alice's private per-round record: her basis, the continuous value she
// encoded, and its classification under the slicing layout (bin index, or
// the buffer flag when the value fell between bins of a buffered layout).
struct AliceChoice {
  Basis basis;
  double value;
  std::optional<long> intended_bin;
  bool in_buffer;
};

// One protocol round on Alice's side: pick a basis uniformly, draw the
// encoded value per the source mode, emit the matching transform-limited
// pulse. Frequency basis: pulse (time 0, frequency = value, width
// sigma_w1). Time basis: pulse (time = value, frequency omega0, width
// sigma_w2).
std::pair<AliceChoice, GaussianPulse> encode(const ProtocolParams& p, RandomStream& rng);

// Fraction of Frequency-basis choices over n encodes (sanity statistic,
// expectation 0.5). Throws std::invalid_argument when n = 0.
double basis_marginals(long n, const ProtocolParams& p, RandomStream& rng);

}  // namespace ftqkd
