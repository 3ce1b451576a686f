#include "ftqkd/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ftqkd/csv.hpp"

namespace ftqkd {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail(path + "." + it.key(), "unknown field");
    }
  }
}

double get_number(const json& obj, const std::string& path, const char* key,
                  double fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number()) {
    fail(path + "." + key, "expected a number");
  }
  return v.get<double>();
}

bool get_bool(const json& obj, const std::string& path, const char* key, bool fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_boolean()) {
    fail(path + "." + key, "expected true/false");
  }
  return v.get<bool>();
}

std::uint64_t get_u64(const json& obj, const std::string& path, const char* key,
                      std::uint64_t fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_number_unsigned() && !v.is_number_integer()) {
    fail(path + "." + key, "expected a non-negative integer");
  }
  if (v.is_number_integer() && v.get<long long>() < 0) {
    fail(path + "." + key, "expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::string get_string(const json& obj, const std::string& path, const char* key,
                       const std::string& fallback) {
  if (!obj.contains(key)) {
    return fallback;
  }
  const json& v = obj.at(key);
  if (!v.is_string()) {
    fail(path + "." + key, "expected a string");
  }
  return v.get<std::string>();
}

ProtocolParams parse_params(const json& obj) {
  ProtocolParams p;
  check_keys(obj, "params",
             {"sigma_w1", "sigma_w2", "omega0", "delta_t", "delta_w", "bin_t", "bin_w",
              "buffer_enabled", "buffer_fraction", "channel_loss", "source_mode"});
  p.sigma_w1 = get_number(obj, "params", "sigma_w1", p.sigma_w1);
  p.sigma_w2 = get_number(obj, "params", "sigma_w2", p.sigma_w2);
  p.omega0 = get_number(obj, "params", "omega0", p.omega0);
  p.delta_t = get_number(obj, "params", "delta_t", p.delta_t);
  p.delta_w = get_number(obj, "params", "delta_w", p.delta_w);
  p.bin_t = get_number(obj, "params", "bin_t", p.bin_t);
  p.bin_w = get_number(obj, "params", "bin_w", p.bin_w);
  p.buffer_enabled = get_bool(obj, "params", "buffer_enabled", p.buffer_enabled);
  p.buffer_fraction = get_number(obj, "params", "buffer_fraction", p.buffer_fraction);
  p.channel_loss = get_number(obj, "params", "channel_loss", p.channel_loss);
  if (obj.contains("source_mode")) {
    try {
      p.source_mode = source_mode_from_string(get_string(obj, "params", "source_mode", ""));
    } catch (const std::invalid_argument& e) {
      fail("params.source_mode", e.what());
    }
  }
  return p;
}

AttackStrategy parse_attack(const json& obj, const ProtocolParams& p) {
  check_keys(obj, "attack", {"kind", "eve_delta_t", "eve_delta_w", "resend_halfwidth"});
  AttackKind kind = AttackKind::None;
  if (obj.contains("kind")) {
    try {
      kind = attack_kind_from_string(get_string(obj, "attack", "kind", "none"));
    } catch (const std::invalid_argument& e) {
      fail("attack.kind", e.what());
    }
  }
  // Unspecified numeric fields take the per-kind defaults.
  AttackStrategy a = default_attack(kind, p);
  a.eve_delta_t = get_number(obj, "attack", "eve_delta_t", a.eve_delta_t);
  a.eve_delta_w = get_number(obj, "attack", "eve_delta_w", a.eve_delta_w);
  a.resend_halfwidth = get_number(obj, "attack", "resend_halfwidth", a.resend_halfwidth);
  return a;
}

SweepSpec parse_sweep(const json& obj) {
  check_keys(obj, "sweep", {"parameter", "values"});
  SweepSpec s;
  s.parameter = get_string(obj, "sweep", "parameter", "");
  if (s.parameter.empty()) {
    fail("sweep.parameter", "required");
  }
  if (!obj.contains("values") || !obj.at("values").is_array()) {
    fail("sweep.values", "expected an array of numbers");
  }
  for (const json& v : obj.at("values")) {
    if (!v.is_number()) {
      fail("sweep.values", "expected an array of numbers");
    }
    s.values.push_back(v.get<double>());
  }
  return s;
}

}  // namespace

SessionConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError("config: top level must be an object");
  }
  check_keys(root, "config",
             {"params", "attack", "n_rounds", "master_seed", "sweep", "output_path"});
  SessionConfig cfg;
  if (root.contains("params")) {
    if (!root.at("params").is_object()) {
      fail("params", "expected an object");
    }
    cfg.params = parse_params(root.at("params"));
  }
  if (root.contains("attack")) {
    if (!root.at("attack").is_object()) {
      fail("attack", "expected an object");
    }
    cfg.attack = parse_attack(root.at("attack"), cfg.params);
  }
  cfg.n_rounds = get_u64(root, "config", "n_rounds", cfg.n_rounds);
  cfg.master_seed = get_u64(root, "config", "master_seed", cfg.master_seed);
  if (root.contains("sweep")) {
    if (!root.at("sweep").is_object()) {
      fail("sweep", "expected an object");
    }
    cfg.sweep = parse_sweep(root.at("sweep"));
  }
  cfg.output_path = get_string(root, "config", "output_path", "");
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

SessionConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config: cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const SessionConfig& cfg) {
  json root;
  root["params"] = {{"sigma_w1", cfg.params.sigma_w1},
                    {"sigma_w2", cfg.params.sigma_w2},
                    {"omega0", cfg.params.omega0},
                    {"delta_t", cfg.params.delta_t},
                    {"delta_w", cfg.params.delta_w},
                    {"bin_t", cfg.params.bin_t},
                    {"bin_w", cfg.params.bin_w},
                    {"buffer_enabled", cfg.params.buffer_enabled},
                    {"buffer_fraction", cfg.params.buffer_fraction},
                    {"channel_loss", cfg.params.channel_loss},
                    {"source_mode", to_string(cfg.params.source_mode)}};
  root["attack"] = {{"kind", to_string(cfg.attack.kind)},
                    {"eve_delta_t", cfg.attack.eve_delta_t},
                    {"eve_delta_w", cfg.attack.eve_delta_w},
                    {"resend_halfwidth", cfg.attack.resend_halfwidth}};
  root["n_rounds"] = cfg.n_rounds;
  root["master_seed"] = cfg.master_seed;
  if (cfg.sweep) {
    root["sweep"] = {{"parameter", cfg.sweep->parameter}, {"values", cfg.sweep->values}};
  }
  if (!cfg.output_path.empty()) {
    root["output_path"] = cfg.output_path;
  }
  return root.dump(2);
}

}  // namespace ftqkd
