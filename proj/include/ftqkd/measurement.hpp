#pragma once

#include <optional>

#include "ftqkd/encoder.hpp"
#include "ftqkd/params.hpp"
#include "ftqkd/pulse.hpp"
#include "ftqkd/rng.hpp"

namespace ftqkd {

// Bob's per-round outcome. measured_value is absent when the round was
// lost (detected = false).
struct BobResult {
  Basis basis;
  std::optional<double> measured_value;
  bool detected;
};

// One measurement: basis chosen uniformly (passive beam splitter), loss
// applied with probability channel_loss, then a Gaussian-smeared readout
// of the selected observable. The measured 1/e half-width composes the
// pulse's intrinsic width with the instrument resolution in quadrature:
//   time basis       w = sqrt(temporal_halfwidth^2 + delta_t^2)
//   frequency basis  w = sqrt(spectral_halfwidth^2 + delta_w^2)
// Draw order per call is fixed (basis, loss, value) so sessions replay
// bit-identically.
BobResult measure(const GaussianPulse& pulse, const ProtocolParams& p, RandomStream& rng);

}  // namespace ftqkd
