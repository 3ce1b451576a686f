#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ftqkd/channel.hpp"
#include "ftqkd/encoder.hpp"
#include "ftqkd/measurement.hpp"
#include "ftqkd/params.hpp"
#include "ftqkd/stats.hpp"

namespace ftqkd {

// Discretization geometry for one observable. Unbuffered, bin k covers
//   [origin + k*pitch - pitch/2, origin + k*pitch + pitch/2)
// Buffered, the bin shrinks to the central (1 - buffer_fraction) share of
// the pitch,
//   [origin + k*pitch - (1-f)*pitch/2, origin + k*pitch + (1-f)*pitch/2)
// and the rest of the pitch is buffer zone. All intervals are half-open,
// closed at the lower edge.
struct SliceLayout {
  double pitch;
  bool buffered;
  double origin;
  double buffer_fraction = 0.5;
};

SliceLayout time_layout(const ProtocolParams& p);
SliceLayout freq_layout(const ProtocolParams& p);

// Half-width of the bin zone proper (excludes buffers on buffered layouts).
double bin_halfwidth(const SliceLayout& layout);

struct BinOutcome {
  enum class Kind { Bin, Buffer, Lost };
  Kind kind;
  long index;  // meaningful only when kind == Bin

  bool is_bin() const { return kind == Kind::Bin; }
};

// Deterministic bin/buffer classification of a finite value; throws
// std::invalid_argument on non-finite input.
BinOutcome slice(double value, const SliceLayout& layout);

// Everything both parties know about one round, as retained for sifting
// and key accounting.
struct PhotonRecord {
  AliceChoice alice;
  BobResult bob;
  ChannelTrace trace;
  std::uint64_t round_index = 0;
};

// Keeps exactly the detected, basis-matched records, preserving order.
std::vector<PhotonRecord> sift(const std::vector<PhotonRecord>& records);

// In-range symbol alphabet for one observable: bin indices
// [k_min, k_min + n_bins) cover the source envelope; values outside clamp
// to the nearest edge code during key extraction.
struct Alphabet {
  long k_min;
  long n_bins;
  int bits_per_symbol;
};

Alphabet time_alphabet(const ProtocolParams& p);
Alphabet freq_alphabet(const ProtocolParams& p);

// Per-record classification shared by the streaming session runner and
// empirical_stats: updates counts (and bit tallies for conclusive rounds)
// for one record.
struct SessionTallies {
  std::uint64_t seen = 0;
  std::uint64_t lost = 0;
  std::uint64_t wrong_basis = 0;
  BasisCounts time;
  BasisCounts freq;
  std::uint64_t bits_extracted = 0;
  std::uint64_t bit_errors = 0;

  void merge(const SessionTallies& other);
};

void accumulate(const PhotonRecord& r, const ProtocolParams& p, SessionTallies& t);

// Counts -> SessionStats with derived rates and the analytic reference for
// the configured scheme; seed/attack metadata are filled by the caller.
SessionStats finalize_stats(const SessionTallies& t, const ProtocolParams& p);

// Counts + derived rates (qber, efficiency, matching analytic reference)
// for a record sequence. Records that are not sifted yet are classified on
// the fly, so both raw and pre-sifted sequences are accepted.
SessionStats empirical_stats(const std::vector<PhotonRecord>& records,
                             const ProtocolParams& p);

// Offset-binary key material from conclusive records: each conclusive
// record contributes ceil(log2(n_bins)) bits per party, MSB first;
// out-of-range bins clamp to the nearest edge code. Throws
// std::invalid_argument when an alphabet has fewer than 2 bins.
std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>> extract_key_bits(
    const std::vector<PhotonRecord>& records, const ProtocolParams& p);

}  // namespace ftqkd
