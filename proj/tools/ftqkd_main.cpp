#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ftqkd/analytic.hpp"
#include "ftqkd/config.hpp"
#include "ftqkd/csv.hpp"
#include "ftqkd/density.hpp"
#include "ftqkd/session.hpp"

namespace {

using namespace ftqkd;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError("output: cannot open '" + path + "' for writing");
  }
  out << text;
  std::cerr << "wrote " << path << "\n";
}

void print_feasibility(const FeasibilityReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "NO"; };
  std::cout << "feasibility:\n"
            << "  security_ok   = " << yn(r.security_ok) << "  (bin product "
            << format_float(r.bin_product) << ", needs < 1)\n"
            << "  resolution_ok = " << yn(r.resolution_ok) << "  (resolution product "
            << format_float(r.resolution_product) << ", needs < "
            << format_float(r.resolution_bound) << ")\n"
            << "  ordering_ok   = " << yn(r.ordering_ok)
            << "  (each scale step should be >= 10x)\n"
            << "  s_t = " << format_float(r.s_t) << ", s_w = " << format_float(r.s_w)
            << ", width separation sigma_w1/sigma_w2 = " << format_float(r.separation_ratio)
            << "\n";
}

void print_summary(const SessionStats& s) {
  std::cout << "session: seed=" << s.seed << " rounds=" << s.n_rounds << " attack="
            << to_string(s.attack) << " mode=" << to_string(s.source_mode)
            << (s.buffered ? " buffered" : " unbuffered") << "\n"
            << "  lost=" << s.lost << " wrong_basis=" << s.wrong_basis << "\n"
            << "  time: sifted=" << s.time.sifted << " conclusive=" << s.time.conclusive()
            << " qber=" << format_float(s.qber_time)
            << " (analytic " << format_float(s.analytic_pe_time) << ")\n"
            << "  freq: sifted=" << s.freq.sifted << " conclusive=" << s.freq.conclusive()
            << " qber=" << format_float(s.qber_freq)
            << " (analytic " << format_float(s.analytic_pe_freq) << ")\n"
            << "  conclusive_efficiency=" << format_float(s.conclusive_efficiency)
            << " bits=" << s.bits_extracted << " bit_errors=" << s.bit_errors << "\n";
}

void print_compare(const ComparisonReport& r) {
  std::cout << "comparison vs analytic: z_time=" << format_float(r.z_time)
            << " z_freq=" << format_float(r.z_freq)
            << (r.approximate ? " (approximate: gaussian_protocol source)" : "")
            << " -> " << (r.pass ? "PASS" : "FAIL") << "\n";
}

int cmd_run(const std::string& config_path, const std::uint64_t* seed,
            const std::uint64_t* rounds, const std::string* out, int threads, bool strict) {
  SessionConfig cfg = load_config(config_path);
  if (seed) {
    cfg.master_seed = *seed;
  }
  if (rounds) {
    cfg.n_rounds = *rounds;
  }
  if (out) {
    cfg.output_path = *out;
  }
  print_feasibility(check_feasibility(cfg.params));
  SessionStats stats = run_session(cfg, threads);
  write_output(cfg.output_path, csv_header() + "\n" + csv_row(stats) + "\n");
  print_summary(stats);
  ComparisonReport report = report_compare(stats);
  print_compare(report);
  return strict && !report.pass ? 2 : 0;
}

int cmd_sweep(const std::string& config_path, const std::uint64_t* seed,
              const std::uint64_t* rounds, const std::string* out, int threads) {
  SessionConfig cfg = load_config(config_path);
  if (seed) {
    cfg.master_seed = *seed;
  }
  if (rounds) {
    cfg.n_rounds = *rounds;
  }
  if (out) {
    cfg.output_path = *out;
  }
  if (!cfg.sweep) {
    throw ConfigError("config.sweep: required by the sweep command");
  }
  std::vector<SessionStats> rows = run_sweep(cfg, threads);
  std::string text = csv_header() + "\n";
  for (const SessionStats& s : rows) {
    text += csv_row(s) + "\n";
  }
  write_output(cfg.output_path, text);
  for (const SessionStats& s : rows) {
    std::cout << cfg.sweep->parameter << "=" << format_float(s.sweep_value)
              << "  qber_time=" << format_float(s.qber_time)
              << "  qber_freq=" << format_float(s.qber_freq)
              << "  efficiency=" << format_float(s.conclusive_efficiency) << "\n";
  }
  return 0;
}

int cmd_analytic(const std::vector<double>& s_values, double buffer_fraction,
                 const std::string& out) {
  std::string text = "s,pe_unbuffered,p_r,p_b,p_w,p_e_buffered\n";
  std::cout << "   s   pe_unbuffered        p_r          p_b          p_w   pe_buffered\n";
  for (double s : s_values) {
    double pe_u = analytic_pe_unbuffered(s);
    BufferedProbs b = analytic_probs_buffered(s, buffer_fraction);
    text += format_float(s) + "," + format_float(pe_u) + "," + format_float(b.p_r) + "," +
            format_float(b.p_b) + "," + format_float(b.p_w) + "," + format_float(b.p_e) + "\n";
    std::printf("%6g   %12.9f %12.9f %12.9f %12.9f %12.9f\n", s, pe_u, b.p_r, b.p_b, b.p_w,
                b.p_e);
  }
  if (!out.empty()) {
    write_output(out, text);
  }
  return 0;
}

int cmd_distinguish(std::vector<double> ratios, const std::string& config_path,
                    double sigma_w2, double omega0, double halfspan_factor, int points,
                    const std::string& out) {
  ProtocolParams p;
  p.sigma_w2 = sigma_w2;
  p.omega0 = omega0;
  if (!config_path.empty()) {
    p = load_config(config_path).params;
  }
  SpectralGrid grid = make_grid(p.omega0, halfspan_factor * p.sigma_w2, points);
  auto table = distinguishability_sweep(ratios, p, grid);
  std::string text = "ratio,trace_distance\n";
  for (auto [ratio, d] : table) {
    text += format_float(ratio) + "," + format_float(d) + "\n";
    std::cout << "sigma_w1/sigma_w2 = " << format_float(ratio)
              << "  ->  D = " << format_float(d) << "\n";
  }
  if (!out.empty()) {
    write_output(out, text);
  }
  return 0;
}

int cmd_check(const std::string& config_path) {
  SessionConfig cfg = load_config(config_path);
  DerivedScales d = derived_scales(cfg.params);
  print_feasibility(check_feasibility(cfg.params));
  std::cout << "derived: sigma_t1=" << format_float(d.sigma_t1)
            << " sigma_t2=" << format_float(d.sigma_t2) << " n_bins_t=" << d.n_bins_t
            << " n_bins_w=" << d.n_bins_w << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ftqkd: simulator and analytics for frequency/time single-photon QKD"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::uint64_t rounds = 0;
  int threads = 1;
  bool strict = false;

  CLI::App* run = app.add_subcommand("run", "Run one session from a config file");
  run->add_option("--config", config_path, "JSON session config")->required();
  CLI::Option* run_seed = run->add_option("--seed", seed, "Override master_seed");
  CLI::Option* run_rounds = run->add_option("--rounds", rounds, "Override n_rounds");
  CLI::Option* run_out = run->add_option("--out", out_path, "Write CSV here (default: stdout)");
  run->add_option("--threads", threads, "Worker threads (result is thread-count invariant)");
  run->add_flag("--strict", strict, "Exit 2 when the analytic comparison fails");

  CLI::App* sweep = app.add_subcommand("sweep", "Run the sweep defined in the config");
  sweep->add_option("--config", config_path, "JSON session config with a sweep block")
      ->required();
  CLI::Option* sweep_seed = sweep->add_option("--seed", seed, "Override master_seed");
  CLI::Option* sweep_rounds = sweep->add_option("--rounds", rounds, "Override n_rounds");
  CLI::Option* sweep_out = sweep->add_option("--out", out_path, "Write CSV here");
  sweep->add_option("--threads", threads, "Worker threads per row");

  std::vector<double> s_values{0.5, 1, 2, 3, 5, 10};
  double buffer_fraction = 0.5;
  CLI::App* analytic = app.add_subcommand("analytic", "Print closed-form probability tables");
  analytic->add_option("--s", s_values, "Pitch/resolution ratios")->delimiter(',');
  analytic->add_option("--buffer-fraction", buffer_fraction, "Buffer share of each pitch");
  analytic->add_option("--out", out_path, "Also write CSV here");

  std::vector<double> ratios{0.01, 0.05, 0.1, 0.3};
  double sigma_w2 = 1.0;
  double omega0 = 0.0;
  double halfspan_factor = 5.0;
  int points = 1001;
  CLI::App* distinguish =
      app.add_subcommand("distinguish", "Trace distance between the two coding ensembles");
  distinguish->add_option("--ratios", ratios, "sigma_w1/sigma_w2 ratios, ascending")
      ->delimiter(',');
  CLI::Option* dist_cfg =
      distinguish->add_option("--config", config_path, "Take sigma_w2/omega0 from this config");
  distinguish->add_option("--sigma-w2", sigma_w2, "Broadband width (without --config)");
  distinguish->add_option("--omega0", omega0, "Center frequency (without --config)");
  distinguish->add_option("--halfspan-factor", halfspan_factor,
                          "Grid halfspan in units of sigma_w2");
  distinguish->add_option("--points", points, "Grid points (odd)");
  distinguish->add_option("--out", out_path, "Also write CSV here");

  CLI::App* check = app.add_subcommand("check", "Feasibility report for a config");
  check->add_option("--config", config_path, "JSON session config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) {
      return cmd_run(config_path, *run_seed ? &seed : nullptr,
                     *run_rounds ? &rounds : nullptr, *run_out ? &out_path : nullptr,
                     threads, strict);
    }
    if (*sweep) {
      return cmd_sweep(config_path, *sweep_seed ? &seed : nullptr,
                       *sweep_rounds ? &rounds : nullptr, *sweep_out ? &out_path : nullptr,
                       threads);
    }
    if (*analytic) {
      return cmd_analytic(s_values, buffer_fraction, out_path);
    }
    if (*distinguish) {
      return cmd_distinguish(ratios, *dist_cfg ? config_path : "", sigma_w2, omega0,
                             halfspan_factor, points, out_path);
    }
    if (*check) {
      return cmd_check(config_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
