#include "ftqkd/encoder.hpp"

#include <stdexcept>

#include "ftqkd/slicing.hpp"

namespace ftqkd {

std::pair<AliceChoice, GaussianPulse> encode(const ProtocolParams& p, RandomStream& rng) {
  Basis basis = rng.uniform_index(2) == 0 ? Basis::Frequency : Basis::Time;
  const bool freq = basis == Basis::Frequency;
  const SliceLayout layout = freq ? freq_layout(p) : time_layout(p);

  double value = 0.0;
  std::optional<long> intended;
  bool in_buffer = false;

  if (p.source_mode == SourceMode::UniformInBin) {
    // Uniform over the alphabet, then uniform within the chosen bin zone
    // (buffered layouts draw inside the bin proper, never the buffer).
    const Alphabet alpha = freq ? freq_alphabet(p) : time_alphabet(p);
    long k = alpha.k_min + static_cast<long>(rng.uniform_index(
                 static_cast<std::uint64_t>(alpha.n_bins)));
    double center = layout.origin + static_cast<double>(k) * layout.pitch;
    double half = bin_halfwidth(layout);
    value = rng.uniform(center - half, center + half);
    intended = k;
  } else {
    // The protocol's Gaussian envelopes: center frequencies spread with
    // half-width sigma_w2, or delays spread over the tunable range 1/sigma_w1.
    value = freq ? rng.gaussian_halfwidth(p.omega0, p.sigma_w2)
                 : rng.gaussian_halfwidth(0.0, 1.0 / p.sigma_w1);
    BinOutcome out = slice(value, layout);
    if (out.is_bin()) {
      intended = out.index;
    } else {
      in_buffer = true;
    }
  }

  GaussianPulse pulse = freq ? make_transform_limited(0.0, value, p.sigma_w1)
                             : make_transform_limited(value, p.omega0, p.sigma_w2);
  return {AliceChoice{basis, value, intended, in_buffer}, pulse};
}

double basis_marginals(long n, const ProtocolParams& p, RandomStream& rng) {
  if (n < 1) {
    throw std::invalid_argument("basis_marginals: n must be >= 1");
  }
  long freq_count = 0;
  for (long i = 0; i < n; ++i) {
    auto [choice, pulse] = encode(p, rng);
    if (choice.basis == Basis::Frequency) {
      ++freq_count;
    }
  }
  return static_cast<double>(freq_count) / static_cast<double>(n);
}

}  // namespace ftqkd
