#include "ftqkd/analytic.hpp"

#include <cmath>
#include <stdexcept>

#include "ftqkd/quadrature.hpp"

namespace ftqkd {

namespace {

constexpr double kSqrtPi = 1.77245385090551602730;

// Measurement response around a true center tc, in resolution-normalized
// units (resolution = 1): a normalized Gaussian of 1/e half-width 1.
double response(double x, double tc) {
  double d = x - tc;
  return std::exp(-d * d) / kSqrtPi;
}

// Probability that the measured value lands in [-w, w] when the true
// center is uniform on [-a, a]. Both the response integral and the center
// average are evaluated by adaptive quadrature; the closed erf form of the
// inner integral is deliberately not used here so that tests can play the
// two against each other.
double window_probability(double a, double w, double tol) {
  auto landing = [&](double tc) {
    return integrate([&](double x) { return response(x, tc); }, -w, w, 0.1 * tol);
  };
  return integrate(landing, -a, a, tol) / (2.0 * a);
}

}  // namespace

double erf(double x) { return std::erf(x); }

double analytic_pe_unbuffered(double s) {
  if (!(s > 0.0)) {
    throw std::invalid_argument("analytic_pe_unbuffered: S must be > 0");
  }
  return 1.0 - (-1.0 + kSqrtPi * s * std::erf(s) + std::exp(-s * s)) / (kSqrtPi * s);
}

BufferedProbs analytic_probs_buffered(double s, double buffer_fraction) {
  if (!(s > 0.0)) {
    throw std::invalid_argument("analytic_probs_buffered: S must be > 0");
  }
  if (!(buffer_fraction > 0.0 && buffer_fraction < 1.0)) {
    throw std::invalid_argument("analytic_probs_buffered: buffer_fraction must be in (0, 1)");
  }
  const double tol = 1e-9;
  // One pitch S (resolution units) = a bin of half-width a flanked by
  // buffer halves; staying conclusive-and-correct means landing within
  // +/-a of the bin center, and the inconclusive window extends across
  // both flanking buffers to +/-w_buf.
  const double a = 0.5 * (1.0 - buffer_fraction) * s;
  const double w_buf = 0.5 * (1.0 + buffer_fraction) * s;

  double p_r = window_probability(a, a, tol);
  double p_rb = window_probability(a, w_buf, tol);
  double p_b = std::max(0.0, p_rb - p_r);
  double p_w = std::max(0.0, 1.0 - p_rb);
  double p_e = p_w / (p_r + p_w);
  return BufferedProbs{p_r, p_b, p_w, p_e};
}

}  // namespace ftqkd
