#pragma once

namespace ftqkd {

// How Alice draws her continuous encoding value each round.
//   GaussianProtocol: the protocol's Gaussian envelopes (broadband spread
//     of center frequencies, or the full tunable delay range).
//   UniformInBin: uniform within a uniformly chosen bin zone -- the
//     assumption behind the closed-form error probabilities, used for
//     exact Monte Carlo / analytic comparisons.
enum class SourceMode { GaussianProtocol, UniformInBin };

// All protocol constants. Frequencies are angular, in units inverse to the
// time units; only ratios and products matter. Defaults give an unbuffered
// working point with pitch/resolution = 10 in both conjugate variables.
struct ProtocolParams {
  double sigma_w1 = 5e-4;  // narrowband source spectral half-width
  double sigma_w2 = 20.0;  // broadband source spectral half-width
  double omega0 = 1000.0;  // shared center frequency of both sources
  double delta_t = 1.0;    // receiver time resolution
  double delta_w = 0.009;  // receiver frequency resolution
  double bin_t = 10.0;     // time-bin pitch
  double bin_w = 0.09;     // frequency-bin pitch
  bool buffer_enabled = false;
  double buffer_fraction = 0.5;  // buffer share of each pitch when enabled
  double channel_loss = 0.0;     // probability a round ends undetected
  SourceMode source_mode = SourceMode::GaussianProtocol;
};

// Throws std::invalid_argument naming the offending field.
void validate(const ProtocolParams& p);

struct DerivedScales {
  double sigma_t1;  // temporal half-width of the narrowband source (= delay range)
  double sigma_t2;  // temporal half-width of the broadband source
  double s_t;       // bin_t / delta_t
  double s_w;       // bin_w / delta_w
  long n_bins_t;    // alphabet size covering the +/- sigma_t1 delay range
  long n_bins_w;    // alphabet size covering the +/- sigma_w2 frequency range
};

DerivedScales derived_scales(const ProtocolParams& p);

// Verdicts on the parameter regime. security_ok is the hard conjugate-bin
// condition bin_w * bin_t < 1; resolution_ok checks the receiver
// resolution product against the bound 1/(s_t * s_w) implied by the
// requested pitch/resolution ratios; ordering_ok is the soft scale
// ordering (each "much greater" read as ratio >= 10).
struct FeasibilityReport {
  bool security_ok;
  bool resolution_ok;
  bool ordering_ok;
  double separation_ratio;     // sigma_w1 / sigma_w2
  double s_t;
  double s_w;
  double bin_product;          // bin_w * bin_t
  double resolution_product;   // delta_t * delta_w
  double resolution_bound;     // 1 / (s_t * s_w)
};

FeasibilityReport check_feasibility(const ProtocolParams& p);

}  // namespace ftqkd
