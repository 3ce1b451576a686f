#pragma once

#include <stdexcept>
#include <string>

#include "ftqkd/session.hpp"

namespace ftqkd {

// Raised for malformed/invalid configuration input; the message names the
// offending field path. The CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// JSON session config. Unknown keys are rejected (they are almost always
// typos that would otherwise silently run the wrong experiment). Every
// field has a default; attack numeric fields default per attack kind.
SessionConfig parse_config(const std::string& text);
SessionConfig load_config(const std::string& path);
std::string config_to_json(const SessionConfig& cfg);

}  // namespace ftqkd
