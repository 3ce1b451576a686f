#pragma once

namespace ftqkd {

// Standard error function: erf(x) = (2/sqrt(pi)) * integral_0^x exp(-t^2) dt,
// odd, with limits +/-1. This is the convention under which the closed-form
// error probabilities below reproduce their documented values.
double erf(double x);

// Symbol error probability for the plain slicing scheme (no buffer zones)
// as a function of S = pitch / resolution, assuming the true value is
// uniform within its bin and the measured value is the true value plus
// Gaussian noise of 1/e half-width equal to the resolution.
double analytic_pe_unbuffered(double s);

// Outcome probabilities for the buffered slicing scheme at pitch/resolution
// ratio S. p_r: measured value stays in the correct bin; p_b: lands in a
// flanking buffer zone (inconclusive, discarded); p_w: lands in a wrong
// bin; p_e = p_w / (p_r + p_w), the error rate among conclusive results.
struct BufferedProbs {
  double p_r;
  double p_b;
  double p_w;
  double p_e;
};

// buffer_fraction is the share of each pitch occupied by buffer zones
// (0.5 = bin and buffer the same size).
BufferedProbs analytic_probs_buffered(double s, double buffer_fraction = 0.5);

}  // namespace ftqkd
