#include "ftqkd/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ftqkd {

namespace {

void require_positive(double v, const char* field) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::invalid_argument(std::string("attack.") + field +
                                ": must be finite and > 0");
  }
}

}  // namespace

void validate(const AttackStrategy& a) {
  if (a.kind == AttackKind::None) {
    return;
  }
  require_positive(a.eve_delta_t, "eve_delta_t");
  require_positive(a.eve_delta_w, "eve_delta_w");
  require_positive(a.resend_halfwidth, "resend_halfwidth");
  if (a.kind == AttackKind::SimultaneousIntercept &&
      !(a.eve_delta_t * a.eve_delta_w >= 1.0)) {
    throw std::invalid_argument(
        "attack: eve_delta_t * eve_delta_w must be >= 1 for simultaneous_intercept");
  }
}

AttackStrategy default_attack(AttackKind kind, const ProtocolParams& p) {
  AttackStrategy a;
  a.kind = kind;
  switch (kind) {
    case AttackKind::None:
      break;
    case AttackKind::TimeIntercept:
      a.eve_delta_t = p.delta_t;  // as good a clock as Bob's
      a.eve_delta_w = 1.0 / p.delta_t;
      a.resend_halfwidth = p.sigma_w2;  // mimic the time-coded source
      break;
    case AttackKind::FrequencyIntercept:
      a.eve_delta_w = p.delta_w;
      a.eve_delta_t = 1.0 / p.delta_w;
      a.resend_halfwidth = p.sigma_w1;  // mimic the frequency-coded source
      break;
    case AttackKind::SimultaneousIntercept:
      // Symmetric in the two bin scales, sitting exactly on the
      // time-bandwidth floor; nudge the product up if rounding left it a
      // hair below 1.
      a.eve_delta_t = std::sqrt(p.bin_t / p.bin_w);
      a.eve_delta_w = 1.0 / a.eve_delta_t;
      while (a.eve_delta_t * a.eve_delta_w < 1.0) {
        a.eve_delta_w = std::nextafter(a.eve_delta_w, INFINITY);
      }
      // A resend width between the two source widths, splitting the
      // disturbance across both bases.
      a.resend_halfwidth = std::sqrt(p.sigma_w1 * p.sigma_w2);
      break;
  }
  return a;
}

std::pair<GaussianPulse, ChannelTrace> transmit(const GaussianPulse& pulse,
                                                const AttackStrategy& attack,
                                                const ProtocolParams& p,
                                                RandomStream& rng) {
  ChannelTrace trace;
  switch (attack.kind) {
    case AttackKind::None:
      return {pulse, trace};
    case AttackKind::TimeIntercept: {
      double w = std::hypot(temporal_halfwidth(pulse), attack.eve_delta_t);
      double t = rng.gaussian_halfwidth(pulse.center_time, w);
      trace.eve_time_estimate = t;
      trace.resent = true;
      return {make_transform_limited(t, p.omega0, attack.resend_halfwidth), trace};
    }
    case AttackKind::FrequencyIntercept: {
      double w = std::hypot(pulse.spectral_halfwidth, attack.eve_delta_w);
      double f = rng.gaussian_halfwidth(pulse.center_freq, w);
      trace.eve_freq_estimate = f;
      trace.resent = true;
      return {make_transform_limited(0.0, f, attack.resend_halfwidth), trace};
    }
    case AttackKind::SimultaneousIntercept: {
      double wt = std::hypot(temporal_halfwidth(pulse), attack.eve_delta_t);
      double t = rng.gaussian_halfwidth(pulse.center_time, wt);
      double wf = std::hypot(pulse.spectral_halfwidth, attack.eve_delta_w);
      double f = rng.gaussian_halfwidth(pulse.center_freq, wf);
      trace.eve_time_estimate = t;
      trace.eve_freq_estimate = f;
      trace.resent = true;
      return {make_transform_limited(t, f, attack.resend_halfwidth), trace};
    }
  }
  return {pulse, trace};  // unreachable
}

}  // namespace ftqkd
