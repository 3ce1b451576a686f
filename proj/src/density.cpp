#include "ftqkd/density.hpp"

#include <cmath>
#include <stdexcept>

namespace ftqkd {

namespace {

// Symmetric Nystrom discretization of a real kernel K: entries
// M = W^(1/2) K W^(1/2) with trapezoid weights, then trace-normalized.
// The symmetric weighting keeps M Hermitian so its spectrum is the
// kernel's (discretized) spectrum.
template <class Kernel>
SpectralDensityMatrix discretize(const SpectralGrid& grid, const Kernel& k) {
  const int n = grid.n_points;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    const double wi = grid.point(i);
    const double si = std::sqrt(grid.weight(i));
    for (int j = 0; j <= i; ++j) {
      const double v = si * std::sqrt(grid.weight(j)) * k(wi, grid.point(j));
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  const double tr = m.trace();
  if (!(tr > 0.0) || !std::isfinite(tr)) {
    throw std::domain_error("density: kernel trace vanished on this grid");
  }
  m /= tr;
  SpectralDensityMatrix out;
  out.grid = grid;
  out.entries = m.cast<std::complex<double>>();
  return out;
}

void require_resolved(const SpectralGrid& grid, double coherence_width) {
  if (grid.spacing() > coherence_width) {
    throw std::domain_error(
        "density: grid spacing exceeds the kernel coherence width; refine the grid");
  }
}

}  // namespace

SpectralGrid make_grid(double center, double halfspan, int n_points) {
  if (!std::isfinite(center) || !std::isfinite(halfspan) || halfspan <= 0.0) {
    throw std::invalid_argument("grid: center/halfspan must be finite, halfspan > 0");
  }
  if (n_points < 3 || n_points % 2 == 0) {
    throw std::invalid_argument("grid: n_points must be odd and >= 3");
  }
  return SpectralGrid{center, halfspan, n_points};
}

double hermiticity_residual(const SpectralDensityMatrix& m) {
  return (m.entries - m.entries.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const SpectralDensityMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m.entries, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double purity(const SpectralDensityMatrix& m) {
  // trace(M^2) = squared Frobenius norm for Hermitian M.
  return m.entries.squaredNorm();
}

SpectralDensityMatrix build_rho_frequency_kernel(const SpectralGrid& grid,
                                                 double sigma_narrow,
                                                 double sigma_spread) {
  if (!(sigma_narrow > 0.0) || sigma_spread < 0.0) {
    throw std::invalid_argument("rho_frequency: need sigma_narrow > 0, sigma_spread >= 0");
  }
  require_resolved(grid, sigma_narrow);
  // Averaging |psi_b><psi_b| (amplitude width sigma_narrow, center b) over
  // Gaussian centers b gives, in u = omega - center coordinates,
  //   K(u, u') = exp[-(u + u')^2 / (4 (sn^2 + ss^2))] * exp[-(u - u')^2 / (4 sn^2)]
  const double c = grid.center;
  const double sum_sq = sigma_narrow * sigma_narrow + sigma_spread * sigma_spread;
  const double coh_sq = sigma_narrow * sigma_narrow;
  return discretize(grid, [=](double w1, double w2) {
    const double s = (w1 - c) + (w2 - c);
    const double d = w1 - w2;
    return std::exp(-s * s / (4.0 * sum_sq) - d * d / (4.0 * coh_sq));
  });
}

SpectralDensityMatrix build_rho_time_kernel(const SpectralGrid& grid, double sigma_broad,
                                            double sigma_delay_inv) {
  if (!(sigma_broad > 0.0) || !(sigma_delay_inv > 0.0)) {
    throw std::invalid_argument("rho_time: widths must be > 0");
  }
  require_resolved(grid, std::min(sigma_broad, sigma_delay_inv));
  // A broadband amplitude times the delay-averaged phase factor:
  //   K(u, u') = exp[-(u^2 + u'^2) / (2 sb^2)] * exp[-(u - u')^2 / (4 sdi^2)]
  // The dephasing term is the characteristic function of the delay
  // distribution (delays spread over 1/sdi), which is why only the
  // difference u - u' enters.
  const double c = grid.center;
  const double env_sq = sigma_broad * sigma_broad;
  const double deph_sq = sigma_delay_inv * sigma_delay_inv;
  return discretize(grid, [=](double w1, double w2) {
    const double u1 = w1 - c;
    const double u2 = w2 - c;
    const double d = w1 - w2;
    return std::exp(-(u1 * u1 + u2 * u2) / (2.0 * env_sq) - d * d / (4.0 * deph_sq));
  });
}

SpectralDensityMatrix build_rho_frequency(const ProtocolParams& p, const SpectralGrid& grid) {
  if (!(p.sigma_w1 < p.sigma_w2)) {
    throw std::invalid_argument("rho_frequency: requires sigma_w1 < sigma_w2");
  }
  return build_rho_frequency_kernel(grid, p.sigma_w1, p.sigma_w2);
}

SpectralDensityMatrix build_rho_time(const ProtocolParams& p, const SpectralGrid& grid) {
  if (!(p.sigma_w1 < p.sigma_w2)) {
    throw std::invalid_argument("rho_time: requires sigma_w1 < sigma_w2");
  }
  // Delays spread over the tunable range 1/sigma_w1, so the dephasing
  // width in frequency is sigma_w1.
  return build_rho_time_kernel(grid, p.sigma_w2, p.sigma_w1);
}

SpectralDensityMatrix pure_state_density(const SpectralGrid& grid, double center,
                                         double halfwidth) {
  if (!(halfwidth > 0.0)) {
    throw std::invalid_argument("pure_state_density: halfwidth must be > 0");
  }
  require_resolved(grid, halfwidth);
  // |psi><psi| with amplitude psi(w) = exp[-(w - center)^2 / (2 hw^2)]
  // (intensity 1/e half-width hw).
  const double hw_sq = halfwidth * halfwidth;
  return discretize(grid, [=](double w1, double w2) {
    const double u1 = w1 - center;
    const double u2 = w2 - center;
    return std::exp(-(u1 * u1 + u2 * u2) / (2.0 * hw_sq));
  });
}

double trace_distance(const SpectralDensityMatrix& a, const SpectralDensityMatrix& b) {
  if (!(a.grid == b.grid)) {
    throw std::invalid_argument("trace_distance: density matrices live on different grids");
  }
  Eigen::MatrixXcd diff = a.entries - b.entries;
  // Both ensemble kernels are real, so the common case reduces to a real
  // symmetric eigenproblem (about 4x cheaper than the complex solve).
  double abs_sum = 0.0;
  if (diff.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(diff.real(), Eigen::EigenvaluesOnly);
    abs_sum = es.eigenvalues().cwiseAbs().sum();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
    abs_sum = es.eigenvalues().cwiseAbs().sum();
  }
  return 0.5 * abs_sum;
}

std::vector<std::pair<double, double>> distinguishability_sweep(
    const std::vector<double>& ratios, const ProtocolParams& p, const SpectralGrid& grid) {
  if (ratios.empty()) {
    throw std::invalid_argument("distinguishability_sweep: empty ratio list");
  }
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (!(ratios[i] > 0.0 && ratios[i] < 1.0)) {
      throw std::invalid_argument("distinguishability_sweep: ratios must lie in (0, 1)");
    }
    if (i > 0 && !(ratios[i] > ratios[i - 1])) {
      throw std::invalid_argument("distinguishability_sweep: ratios must be sorted ascending");
    }
  }
  std::vector<std::pair<double, double>> table;
  table.reserve(ratios.size());
  for (double r : ratios) {
    const double sigma1 = r * p.sigma_w2;
    SpectralDensityMatrix rho_f = build_rho_frequency_kernel(grid, sigma1, p.sigma_w2);
    SpectralDensityMatrix rho_t = build_rho_time_kernel(grid, p.sigma_w2, sigma1);
    table.emplace_back(r, trace_distance(rho_f, rho_t));
  }
  return table;
}

}  // namespace ftqkd
