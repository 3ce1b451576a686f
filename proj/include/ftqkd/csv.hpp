#pragma once

#include <string>
#include <vector>

#include "ftqkd/stats.hpp"

namespace ftqkd {

// Fixed-order CSV schema for session results (documented in the README).
// Floats are emitted with 9 significant digits; undefined rates print as
// "nan". parse_stats_csv of an emitted file reproduces the stats exactly.
std::string csv_header();
std::string csv_row(const SessionStats& stats);
std::vector<SessionStats> parse_stats_csv(const std::string& text);

std::string format_float(double v);  // %.9g

const char* to_string(SourceMode mode);
const char* to_string(AttackKind kind);
SourceMode source_mode_from_string(const std::string& s);
AttackKind attack_kind_from_string(const std::string& s);

}  // namespace ftqkd
