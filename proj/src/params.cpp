#include "ftqkd/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ftqkd {

namespace {

void require_positive(double v, const char* field) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::invalid_argument(std::string("params.") + field +
                                ": must be finite and > 0");
  }
}

}  // namespace

void validate(const ProtocolParams& p) {
  require_positive(p.sigma_w1, "sigma_w1");
  require_positive(p.sigma_w2, "sigma_w2");
  require_positive(p.delta_t, "delta_t");
  require_positive(p.delta_w, "delta_w");
  require_positive(p.bin_t, "bin_t");
  require_positive(p.bin_w, "bin_w");
  if (!std::isfinite(p.omega0)) {
    throw std::invalid_argument("params.omega0: must be finite");
  }
  if (!(p.sigma_w1 < p.sigma_w2)) {
    throw std::invalid_argument("params.sigma_w1: must be < sigma_w2");
  }
  if (!std::isfinite(p.channel_loss) || p.channel_loss < 0.0 || p.channel_loss > 1.0) {
    throw std::invalid_argument("params.channel_loss: must be in [0, 1]");
  }
  if (!std::isfinite(p.buffer_fraction) || p.buffer_fraction <= 0.0 ||
      p.buffer_fraction >= 1.0) {
    throw std::invalid_argument("params.buffer_fraction: must be in (0, 1)");
  }
}

DerivedScales derived_scales(const ProtocolParams& p) {
  DerivedScales d;
  d.sigma_t1 = 1.0 / p.sigma_w1;
  d.sigma_t2 = 1.0 / p.sigma_w2;
  d.s_t = p.bin_t / p.delta_t;
  d.s_w = p.bin_w / p.delta_w;
  d.n_bins_t = static_cast<long>(std::floor(2.0 * d.sigma_t1 / p.bin_t));
  d.n_bins_w = static_cast<long>(std::floor(2.0 * p.sigma_w2 / p.bin_w));
  return d;
}

FeasibilityReport check_feasibility(const ProtocolParams& p) {
  DerivedScales d = derived_scales(p);
  FeasibilityReport r;
  r.s_t = d.s_t;
  r.s_w = d.s_w;
  r.bin_product = p.bin_w * p.bin_t;
  r.security_ok = r.bin_product < 1.0;
  r.resolution_product = p.delta_t * p.delta_w;
  r.resolution_bound = 1.0 / (d.s_t * d.s_w);
  r.resolution_ok = r.resolution_product < r.resolution_bound;
  r.separation_ratio = p.sigma_w1 / p.sigma_w2;
  // Scale ordering in both conjugate variables, outermost to innermost:
  // source envelope >> bin pitch >> resolution >> conjugate-source width.
  const double k = 10.0;
  r.ordering_ok = p.sigma_w2 >= k * p.bin_w && p.bin_w >= k * p.delta_w &&
                  p.delta_w >= k * p.sigma_w1 && d.sigma_t1 >= k * p.bin_t &&
                  p.bin_t >= k * p.delta_t && p.delta_t >= k * d.sigma_t2;
  return r;
}

}  // namespace ftqkd
