#pragma once

#include <optional>
#include <utility>

#include "ftqkd/params.hpp"
#include "ftqkd/pulse.hpp"
#include "ftqkd/rng.hpp"

namespace ftqkd {

enum class AttackKind { None, TimeIntercept, FrequencyIntercept, SimultaneousIntercept };

// Intercept-resend strategy. Eve measures the quantities her kind calls
// for (with her own Gaussian resolutions) and resends a fresh
// transform-limited pulse of spectral half-width resend_halfwidth centered
// on her estimates. A simultaneous measurement cannot beat the
// time-bandwidth floor: eve_delta_t * eve_delta_w >= 1 is enforced.
struct AttackStrategy {
  AttackKind kind = AttackKind::None;
  double eve_delta_t = 1.0;
  double eve_delta_w = 1.0;
  double resend_halfwidth = 1.0;
};

// Throws std::invalid_argument on non-positive parameters or a
// SimultaneousIntercept below the resolution-product floor.
void validate(const AttackStrategy& a);

// Reasonable defaults per kind: intercept resolutions equal to Bob's, a
// resend width mimicking the expected source, and a floor-saturating
// symmetric choice for the simultaneous attack.
AttackStrategy default_attack(AttackKind kind, const ProtocolParams& p);

// What Eve learned this round; estimates present only for the quantities
// her attack actually measured.
struct ChannelTrace {
  std::optional<double> eve_time_estimate;
  std::optional<double> eve_freq_estimate;
  bool resent = false;
};

// Propagate one pulse through the channel. kind = None is the identity
// (bit-exact pass-through, no randomness consumed). Otherwise Eve measures
// with the same quadrature width composition Bob uses, then resends; when
// she lacks a time estimate she centers the resend at time 0, and when she
// lacks a frequency estimate at omega0 (the ensemble means -- her least
// disturbing blind guess).
std::pair<GaussianPulse, ChannelTrace> transmit(const GaussianPulse& pulse,
                                                const AttackStrategy& attack,
                                                const ProtocolParams& p,
                                                RandomStream& rng);

}  // namespace ftqkd
