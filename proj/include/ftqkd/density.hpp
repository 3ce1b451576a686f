#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "ftqkd/params.hpp"

namespace ftqkd {

// Uniform frequency grid for discretizing spectral kernels, center +/-
// halfspan over an odd number of points (odd keeps the center on-grid).
struct SpectralGrid {
  double center;
  double halfspan;
  int n_points;

  double spacing() const { return 2.0 * halfspan / (n_points - 1); }
  double point(int i) const { return center - halfspan + i * spacing(); }
  // Trapezoid quadrature weight of point i.
  double weight(int i) const {
    return (i == 0 || i == n_points - 1) ? 0.5 * spacing() : spacing();
  }

  bool operator==(const SpectralGrid&) const = default;
};

// Throws std::invalid_argument unless halfspan > 0 and n_points is odd >= 3.
SpectralGrid make_grid(double center, double halfspan, int n_points);

// A spectral kernel discretized symmetrically (entries include sqrt of the
// trapezoid weights) and normalized to unit trace, so the matrix is a bona
// fide density operator: Hermitian, trace one, positive semidefinite.
struct SpectralDensityMatrix {
  SpectralGrid grid;
  Eigen::MatrixXcd entries;
};

double hermiticity_residual(const SpectralDensityMatrix& m);  // max |M - M^dagger|
double min_eigenvalue(const SpectralDensityMatrix& m);
double purity(const SpectralDensityMatrix& m);  // trace(M^2)

// Ensemble of narrowband pulses (width sigma_narrow) whose centers spread
// with half-width sigma_spread around the grid center. sigma_spread = 0 is
// the single pure state. Throws std::domain_error when the grid spacing
// exceeds sigma_narrow (the kernel's coherence scale would be
// under-resolved).
SpectralDensityMatrix build_rho_frequency_kernel(const SpectralGrid& grid,
                                                 double sigma_narrow,
                                                 double sigma_spread);

// Ensemble of broadband pulses (width sigma_broad) dephased by random
// delays drawn over the range 1/sigma_delay_inv; sigma_delay_inv = +inf
// means no dephasing (pure state). Same resolution rule against
// min(sigma_delay_inv, sigma_broad).
SpectralDensityMatrix build_rho_time_kernel(const SpectralGrid& grid, double sigma_broad,
                                            double sigma_delay_inv);

// Protocol-facing builders: the frequency-coding ensemble (narrowband
// sigma_w1 pulses spread by sigma_w2) and the time-coding ensemble
// (broadband sigma_w2 pulses dephased by the sigma_t1 delay range), both
// centered at omega0.
SpectralDensityMatrix build_rho_frequency(const ProtocolParams& p, const SpectralGrid& grid);
SpectralDensityMatrix build_rho_time(const ProtocolParams& p, const SpectralGrid& grid);

// Single pure Gaussian pulse of spectral half-width `halfwidth` centered at
// `center`, as a density matrix on the grid.
SpectralDensityMatrix pure_state_density(const SpectralGrid& grid, double center,
                                         double halfwidth);

// Trace distance (1/2) sum |eigenvalues(a - b)|; throws
// std::invalid_argument on mismatched grids.
double trace_distance(const SpectralDensityMatrix& a, const SpectralDensityMatrix& b);

// D(rho_frequency, rho_time) per width ratio sigma_w1/sigma_w2, holding
// sigma_w2 (and omega0) from p. Ratios must be sorted ascending within
// (0, 1); the grid must resolve the smallest ratio.
std::vector<std::pair<double, double>> distinguishability_sweep(
    const std::vector<double>& ratios, const ProtocolParams& p, const SpectralGrid& grid);

}  // namespace ftqkd
