#include "ftqkd/slicing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ftqkd/analytic.hpp"

namespace ftqkd {

SliceLayout time_layout(const ProtocolParams& p) {
  return SliceLayout{p.bin_t, p.buffer_enabled, 0.0, p.buffer_fraction};
}

SliceLayout freq_layout(const ProtocolParams& p) {
  return SliceLayout{p.bin_w, p.buffer_enabled, p.omega0, p.buffer_fraction};
}

double bin_halfwidth(const SliceLayout& layout) {
  return layout.buffered ? 0.5 * (1.0 - layout.buffer_fraction) * layout.pitch
                         : 0.5 * layout.pitch;
}

BinOutcome slice(double value, const SliceLayout& layout) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("slice: value must be finite");
  }
  double u = (value - layout.origin) / layout.pitch;
  // floor(u + 1/2) keeps lower edges closed: u = k + 1/2 already belongs
  // to lattice point k+1.
  double kf = std::floor(u + 0.5);
  long k = static_cast<long>(kf);
  if (layout.buffered) {
    double r = u - kf;  // offset within the pitch, in [-1/2, 1/2)
    double half = 0.5 * (1.0 - layout.buffer_fraction);
    if (!(r >= -half && r < half)) {
      return BinOutcome{BinOutcome::Kind::Buffer, k};
    }
  }
  return BinOutcome{BinOutcome::Kind::Bin, k};
}

std::vector<PhotonRecord> sift(const std::vector<PhotonRecord>& records) {
  std::vector<PhotonRecord> kept;
  kept.reserve(records.size() / 2);
  for (const PhotonRecord& r : records) {
    if (r.bob.detected && r.alice.basis == r.bob.basis) {
      kept.push_back(r);
    }
  }
  return kept;
}

namespace {

int bits_for(long n_bins) {
  int b = 1;
  while ((1L << b) < n_bins) {
    ++b;
  }
  return b;
}

Alphabet make_alphabet(long n_bins) {
  if (n_bins < 2) {
    throw std::invalid_argument(
        "alphabet: fewer than 2 bins fit the source envelope (check pitch)");
  }
  return Alphabet{-(n_bins / 2), n_bins, bits_for(n_bins)};
}

long clamp_code(long k, const Alphabet& alpha) {
  long code = k - alpha.k_min;
  if (code < 0) {
    return 0;
  }
  if (code >= alpha.n_bins) {
    return alpha.n_bins - 1;
  }
  return code;
}

// Alice's bin under the layout; conclusive records normally carry it, the
// fallback reclassifies her value.
long alice_bin_of(const PhotonRecord& r, const SliceLayout& layout) {
  if (r.alice.intended_bin) {
    return *r.alice.intended_bin;
  }
  return slice(r.alice.value, layout).index;
}

}  // namespace

Alphabet time_alphabet(const ProtocolParams& p) {
  return make_alphabet(derived_scales(p).n_bins_t);
}

Alphabet freq_alphabet(const ProtocolParams& p) {
  return make_alphabet(derived_scales(p).n_bins_w);
}

void SessionTallies::merge(const SessionTallies& other) {
  seen += other.seen;
  lost += other.lost;
  wrong_basis += other.wrong_basis;
  auto add = [](BasisCounts& mine, const BasisCounts& theirs) {
    mine.sifted += theirs.sifted;
    mine.alice_buffer += theirs.alice_buffer;
    mine.bob_buffer += theirs.bob_buffer;
    mine.correct += theirs.correct;
    mine.wrong += theirs.wrong;
  };
  add(time, other.time);
  add(freq, other.freq);
  bits_extracted += other.bits_extracted;
  bit_errors += other.bit_errors;
}

void accumulate(const PhotonRecord& r, const ProtocolParams& p, SessionTallies& t) {
  ++t.seen;
  if (!r.bob.detected) {
    ++t.lost;
    return;
  }
  if (r.alice.basis != r.bob.basis) {
    ++t.wrong_basis;
    return;
  }
  const bool freq = r.alice.basis == Basis::Frequency;
  BasisCounts& c = freq ? t.freq : t.time;
  ++c.sifted;
  if (r.alice.in_buffer) {
    ++c.alice_buffer;  // announced and dropped
    return;
  }
  const SliceLayout layout = freq ? freq_layout(p) : time_layout(p);
  BinOutcome out = slice(*r.bob.measured_value, layout);
  if (!out.is_bin()) {
    ++c.bob_buffer;
    return;
  }
  long a_bin = alice_bin_of(r, layout);
  if (out.index == a_bin) {
    ++c.correct;
  } else {
    ++c.wrong;
  }
  // Key-bit tally (per party). Degenerate alphabets contribute no bits;
  // extract_key_bits is the operation that treats that as an error.
  DerivedScales d = derived_scales(p);
  long n_bins = freq ? d.n_bins_w : d.n_bins_t;
  if (n_bins >= 2) {
    Alphabet alpha{-(n_bins / 2), n_bins, bits_for(n_bins)};
    long ca = clamp_code(a_bin, alpha);
    long cb = clamp_code(out.index, alpha);
    t.bits_extracted += static_cast<std::uint64_t>(alpha.bits_per_symbol);
    t.bit_errors += static_cast<std::uint64_t>(
        __builtin_popcountll(static_cast<unsigned long long>(ca ^ cb)));
  }
}

SessionStats finalize_stats(const SessionTallies& t, const ProtocolParams& p) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  DerivedScales d = derived_scales(p);
  SessionStats s;
  s.n_rounds = t.seen;
  s.source_mode = p.source_mode;
  s.buffered = p.buffer_enabled;
  s.s_t = d.s_t;
  s.s_w = d.s_w;
  s.lost = t.lost;
  s.wrong_basis = t.wrong_basis;
  s.time = t.time;
  s.freq = t.freq;
  s.qber_time = t.time.conclusive() > 0
                    ? static_cast<double>(t.time.wrong) / static_cast<double>(t.time.conclusive())
                    : nan;
  s.qber_freq = t.freq.conclusive() > 0
                    ? static_cast<double>(t.freq.wrong) / static_cast<double>(t.freq.conclusive())
                    : nan;
  if (p.buffer_enabled) {
    s.analytic_pe_time = analytic_probs_buffered(d.s_t, p.buffer_fraction).p_e;
    s.analytic_pe_freq = analytic_probs_buffered(d.s_w, p.buffer_fraction).p_e;
  } else {
    s.analytic_pe_time = analytic_pe_unbuffered(d.s_t);
    s.analytic_pe_freq = analytic_pe_unbuffered(d.s_w);
  }
  std::uint64_t sifted = t.time.sifted + t.freq.sifted;
  std::uint64_t conclusive = t.time.conclusive() + t.freq.conclusive();
  s.conclusive_efficiency =
      sifted > 0 ? static_cast<double>(conclusive) / static_cast<double>(sifted) : nan;
  s.bits_extracted = t.bits_extracted;
  s.bit_errors = t.bit_errors;
  return s;
}

SessionStats empirical_stats(const std::vector<PhotonRecord>& records,
                             const ProtocolParams& p) {
  SessionTallies t;
  for (const PhotonRecord& r : records) {
    accumulate(r, p, t);
  }
  return finalize_stats(t, p);
}

std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> extract_key_bits(
    const std::vector<PhotonRecord>& records, const ProtocolParams& p) {
  const Alphabet at = time_alphabet(p);
  const Alphabet af = freq_alphabet(p);
  const SliceLayout lt = time_layout(p);
  const SliceLayout lf = freq_layout(p);
  std::vector<std::uint8_t> alice_bits;
  std::vector<std::uint8_t> bob_bits;
  auto append_code = [](long code, int width, std::vector<std::uint8_t>& bits) {
    for (int i = width - 1; i >= 0; --i) {
      bits.push_back(static_cast<std::uint8_t>((code >> i) & 1));
    }
  };
  for (const PhotonRecord& r : records) {
    if (!r.bob.detected || r.alice.basis != r.bob.basis || r.alice.in_buffer) {
      continue;
    }
    const bool freq = r.alice.basis == Basis::Frequency;
    const SliceLayout& layout = freq ? lf : lt;
    BinOutcome out = slice(*r.bob.measured_value, layout);
    if (!out.is_bin()) {
      continue;
    }
    const Alphabet& alpha = freq ? af : at;
    append_code(clamp_code(alice_bin_of(r, layout), alpha), alpha.bits_per_symbol, alice_bits);
    append_code(clamp_code(out.index, alpha), alpha.bits_per_symbol, bob_bits);
  }
  return {std::move(alice_bits), std::move(bob_bits)};
}

}  // namespace ftqkd
