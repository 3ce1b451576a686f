#pragma once

#include <cmath>
#include <stdexcept>

namespace ftqkd {

// Width convention, fixed once for the whole library: a Gaussian profile
// written exp[-(x - c)^2 / s^2] has 1/e half-width s, and the normalized
// profile, read as a probability density, has standard deviation s/sqrt(2).
// Every width in this project (source widths, instrument resolutions,
// eavesdropper resolutions, bin-derived scales) uses this convention; the
// constant below is the only place the sqrt(2) lives.
inline constexpr double kHalfwidthToStd = 0.70710678118654752440;

// A transform-limited Gaussian pulse: a time-domain center, a spectral
// center, and the spectral 1/e half-width. The temporal half-width is not
// stored; it is pinned to 1/spectral_halfwidth by the time-bandwidth
// product of a transform-limited Gaussian, so the two widths can never
// drift apart.
struct GaussianPulse {
  double center_time;
  double center_freq;
  double spectral_halfwidth;
};

inline GaussianPulse make_transform_limited(double center_time, double center_freq,
                                            double spectral_halfwidth) {
  if (!std::isfinite(center_time) || !std::isfinite(center_freq) ||
      !std::isfinite(spectral_halfwidth) || spectral_halfwidth <= 0.0) {
    throw std::invalid_argument(
        "make_transform_limited: centers must be finite and spectral_halfwidth > 0");
  }
  return GaussianPulse{center_time, center_freq, spectral_halfwidth};
}

inline double temporal_halfwidth(const GaussianPulse& pulse) {
  return 1.0 / pulse.spectral_halfwidth;
}

}  // namespace ftqkd
