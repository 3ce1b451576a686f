#include "ftqkd/measurement.hpp"

#include <cmath>

namespace ftqkd {

BobResult measure(const GaussianPulse& pulse, const ProtocolParams& p, RandomStream& rng) {
  Basis basis = rng.uniform_index(2) == 0 ? Basis::Frequency : Basis::Time;
  // The loss draw is unconditional so the round's draw sequence does not
  // depend on the loss parameter (sweeps over channel_loss then reuse the
  // same underlying randomness).
  bool lost = rng.uniform() < p.channel_loss;
  if (lost) {
    return BobResult{basis, std::nullopt, false};
  }
  double value;
  if (basis == Basis::Time) {
    double w = std::hypot(temporal_halfwidth(pulse), p.delta_t);
    value = rng.gaussian_halfwidth(pulse.center_time, w);
  } else {
    double w = std::hypot(pulse.spectral_halfwidth, p.delta_w);
    value = rng.gaussian_halfwidth(pulse.center_freq, w);
  }
  return BobResult{basis, value, true};
}

}  // namespace ftqkd
