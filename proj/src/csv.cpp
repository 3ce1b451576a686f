#include "ftqkd/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ftqkd {

namespace {

constexpr const char* kColumns =
    "seed,rounds,source_mode,buffered,attack,s_t,s_w,lost,wrong_basis,"
    "time_sifted,time_alice_buffer,time_bob_buffer,time_correct,time_wrong,"
    "time_qber,time_analytic_pe,"
    "freq_sifted,freq_alice_buffer,freq_bob_buffer,freq_correct,freq_wrong,"
    "freq_qber,freq_analytic_pe,"
    "conclusive_efficiency,bits_extracted,bit_errors,sweep_parameter,sweep_value";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) {
    out.push_back(field);
  }
  if (!line.empty() && line.back() == sep) {
    out.emplace_back();
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s) {
  return std::strtoull(s.c_str(), nullptr, 10);
}

double parse_f(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

const char* to_string(SourceMode mode) {
  return mode == SourceMode::UniformInBin ? "uniform_in_bin" : "gaussian_protocol";
}

const char* to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::TimeIntercept:
      return "time_intercept";
    case AttackKind::FrequencyIntercept:
      return "frequency_intercept";
    case AttackKind::SimultaneousIntercept:
      return "simultaneous_intercept";
    case AttackKind::None:
      break;
  }
  return "none";
}

SourceMode source_mode_from_string(const std::string& s) {
  if (s == "gaussian_protocol") {
    return SourceMode::GaussianProtocol;
  }
  if (s == "uniform_in_bin") {
    return SourceMode::UniformInBin;
  }
  throw std::invalid_argument("source_mode: expected gaussian_protocol or uniform_in_bin, got '" +
                              s + "'");
}

AttackKind attack_kind_from_string(const std::string& s) {
  if (s == "none") {
    return AttackKind::None;
  }
  if (s == "time_intercept") {
    return AttackKind::TimeIntercept;
  }
  if (s == "frequency_intercept") {
    return AttackKind::FrequencyIntercept;
  }
  if (s == "simultaneous_intercept") {
    return AttackKind::SimultaneousIntercept;
  }
  throw std::invalid_argument("attack.kind: unknown value '" + s + "'");
}

std::string csv_header() { return kColumns; }

std::string csv_row(const SessionStats& s) {
  std::ostringstream out;
  out << s.seed << ',' << s.n_rounds << ',' << to_string(s.source_mode) << ','
      << (s.buffered ? 1 : 0) << ',' << to_string(s.attack) << ',' << format_float(s.s_t)
      << ',' << format_float(s.s_w) << ',' << s.lost << ',' << s.wrong_basis;
  auto basis = [&out](const BasisCounts& c, double qber, double pe) {
    out << ',' << c.sifted << ',' << c.alice_buffer << ',' << c.bob_buffer << ','
        << c.correct << ',' << c.wrong << ',' << format_float(qber) << ','
        << format_float(pe);
  };
  basis(s.time, s.qber_time, s.analytic_pe_time);
  basis(s.freq, s.qber_freq, s.analytic_pe_freq);
  out << ',' << format_float(s.conclusive_efficiency) << ',' << s.bits_extracted << ','
      << s.bit_errors << ',' << s.sweep_parameter << ',' << format_float(s.sweep_value);
  return out.str();
}

std::vector<SessionStats> parse_stats_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kColumns) {
    throw std::invalid_argument("stats csv: missing or unexpected header row");
  }
  std::vector<SessionStats> rows;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> f = split(line, ',');
    if (f.size() != 28) {
      throw std::invalid_argument("stats csv: expected 28 fields, got " +
                                  std::to_string(f.size()));
    }
    SessionStats s;
    s.seed = parse_u64(f[0]);
    s.n_rounds = parse_u64(f[1]);
    s.source_mode = source_mode_from_string(f[2]);
    s.buffered = f[3] == "1";
    s.attack = attack_kind_from_string(f[4]);
    s.s_t = parse_f(f[5]);
    s.s_w = parse_f(f[6]);
    s.lost = parse_u64(f[7]);
    s.wrong_basis = parse_u64(f[8]);
    auto basis = [&f](BasisCounts& c, double& qber, double& pe, int base) {
      c.sifted = parse_u64(f[base]);
      c.alice_buffer = parse_u64(f[base + 1]);
      c.bob_buffer = parse_u64(f[base + 2]);
      c.correct = parse_u64(f[base + 3]);
      c.wrong = parse_u64(f[base + 4]);
      qber = parse_f(f[base + 5]);
      pe = parse_f(f[base + 6]);
    };
    basis(s.time, s.qber_time, s.analytic_pe_time, 9);
    basis(s.freq, s.qber_freq, s.analytic_pe_freq, 16);
    s.conclusive_efficiency = parse_f(f[23]);
    s.bits_extracted = parse_u64(f[24]);
    s.bit_errors = parse_u64(f[25]);
    s.sweep_parameter = f[26];
    s.sweep_value = parse_f(f[27]);
    rows.push_back(std::move(s));
  }
  return rows;
}

}  // namespace ftqkd
