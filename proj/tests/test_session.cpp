#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftqkd/csv.hpp"
#include "ftqkd/session.hpp"

using namespace ftqkd;

namespace {

SessionConfig uniform_cfg(std::uint64_t rounds, std::uint64_t seed) {
  SessionConfig cfg;
  cfg.params.source_mode = SourceMode::UniformInBin;
  cfg.n_rounds = rounds;
  cfg.master_seed = seed;
  return cfg;
}

// Buffered working point with pitch/resolution 3 in both variables.
SessionConfig buffered_cfg(std::uint64_t rounds, std::uint64_t seed) {
  SessionConfig cfg = uniform_cfg(rounds, seed);
  cfg.params.bin_t = 3.0;
  cfg.params.delta_t = 1.0;
  cfg.params.bin_w = 0.3;
  cfg.params.delta_w = 0.1;
  cfg.params.buffer_enabled = true;
  return cfg;
}

}  // namespace

TEST_SUITE("session") {

TEST_CASE("rounds replay by (seed, index) and differ across indices") {
  SessionConfig cfg = uniform_cfg(10, 5);
  PhotonRecord a = simulate_round(cfg, 3);
  PhotonRecord b = simulate_round(cfg, 3);
  CHECK(a.alice.value == b.alice.value);
  CHECK(a.alice.basis == b.alice.basis);
  CHECK(a.bob.detected == b.bob.detected);
  if (a.bob.detected) {
    CHECK(*a.bob.measured_value == *b.bob.measured_value);
  }
  PhotonRecord c = simulate_round(cfg, 4);
  CHECK(a.alice.value != c.alice.value);
}

TEST_CASE("worker count never changes the result") {
  SessionConfig cfg = uniform_cfg(20000, 99);
  std::string serial = csv_row(run_session(cfg, 1));
  for (int threads : {2, 3, 7}) {
    CHECK(csv_row(run_session(cfg, threads)) == serial);
  }
}

TEST_CASE("counts conserve round for round") {
  SessionStats s = run_session(uniform_cfg(50000, 7));
  CHECK(s.n_rounds == 50000);
  CHECK(s.lost + s.wrong_basis + s.time.sifted + s.freq.sifted == s.n_rounds);
  CHECK(s.time.sifted ==
        s.time.alice_buffer + s.time.bob_buffer + s.time.correct + s.time.wrong);
  CHECK(s.freq.sifted ==
        s.freq.alice_buffer + s.freq.bob_buffer + s.freq.correct + s.freq.wrong);
}

TEST_CASE("clean unbuffered run matches the analytic error rates") {
  SessionStats s = run_session(uniform_cfg(200000, 1));
  CHECK(s.s_t == doctest::Approx(10.0));
  CHECK(s.analytic_pe_time == doctest::Approx(0.056418958355).epsilon(1e-9));
  ComparisonReport r = report_compare(s);
  CHECK(r.comparable);
  CHECK_FALSE(r.approximate);  // exact-regime source
  CHECK(std::abs(r.z_time) <= 3.0);
  CHECK(std::abs(r.z_freq) <= 3.0);
  CHECK(r.pass);
}

TEST_CASE("clean buffered run matches the analytic rates and discard share") {
  SessionConfig cfg = buffered_cfg(200000, 2);
  SessionStats s = run_session(cfg);
  CHECK(s.buffered);
  CHECK(s.analytic_pe_time == doctest::Approx(0.0090441048).epsilon(1e-6));
  ComparisonReport r = report_compare(s);
  CHECK(r.pass);
  // Bob's buffer landings among non-discarded sifted rounds track p_b.
  double denom = static_cast<double>(s.time.sifted - s.time.alice_buffer);
  double frac = static_cast<double>(s.time.bob_buffer) / denom;
  double se = std::sqrt(0.3646 * (1.0 - 0.3646) / denom);
  CHECK(std::abs(frac - 0.3646314733) < 4.0 * se);
  // Uniform draws never start in a buffer zone.
  CHECK(s.time.alice_buffer == 0);
  CHECK(s.freq.alice_buffer == 0);
  // Efficiency among sifted rounds is 1 - p_b here.
  CHECK(s.conclusive_efficiency ==
        doctest::Approx(1.0 - 0.3646314733).epsilon(0.01));
}

TEST_CASE("protocol-mode buffered efficiency folds in the sender discards") {
  SessionConfig cfg = buffered_cfg(200000, 3);
  cfg.params.source_mode = SourceMode::GaussianProtocol;
  SessionStats s = run_session(cfg);
  // Sender draws land in a buffer zone about half the time, and survivors
  // stay conclusive with probability 1 - p_b(3): 0.5 * 0.6354 = 0.3177.
  CHECK(s.conclusive_efficiency == doctest::Approx(0.3176842634).epsilon(0.02));
  CHECK(report_compare(s).approximate);
}

TEST_CASE("certain loss makes the comparison undefined") {
  SessionConfig cfg = uniform_cfg(5000, 4);
  cfg.params.channel_loss = 1.0;
  SessionStats s = run_session(cfg);
  CHECK(s.lost == 5000);
  CHECK(std::isnan(s.qber_time));
  CHECK(std::isnan(s.qber_freq));
  ComparisonReport r = report_compare(s);
  CHECK_FALSE(r.comparable);
  CHECK_FALSE(r.pass);
}

TEST_CASE("partial loss removes the right share") {
  SessionConfig cfg = uniform_cfg(100000, 8);
  cfg.params.channel_loss = 0.3;
  SessionStats s = run_session(cfg);
  double frac = static_cast<double>(s.lost) / 100000.0;
  CHECK(std::abs(frac - 0.3) < 4.0 * std::sqrt(0.3 * 0.7 / 100000.0));
  ComparisonReport r = report_compare(s);
  CHECK(r.pass);  // survivors still match the analytic rates
}

TEST_CASE("intercept attacks blow the error budget") {
  for (AttackKind kind : {AttackKind::TimeIntercept, AttackKind::FrequencyIntercept,
                          AttackKind::SimultaneousIntercept}) {
    SessionConfig cfg = uniform_cfg(50000, 10);
    cfg.attack = default_attack(kind, cfg.params);
    SessionStats s = run_session(cfg);
    ComparisonReport r = report_compare(s);
    CHECK_FALSE(r.pass);
    CHECK(std::max(r.z_time, r.z_freq) > 5.0);
    // An intercept-resend in one variable ruins at least the conjugate
    // one; the observed error rate rises far above the clean prediction.
    CHECK(std::max(s.qber_time, s.qber_freq) > 3.0 * s.analytic_pe_time);
  }
}

TEST_CASE("config validation catches bad sessions") {
  SessionConfig cfg = uniform_cfg(0, 1);
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg = uniform_cfg(10, 1);
  cfg.sweep = SweepSpec{"no_such_knob", {1.0}};
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.sweep = SweepSpec{"delta_t", {}};
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.sweep.reset();
  cfg.params.bin_w = -1.0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("apply_parameter sets and revalidates") {
  SessionConfig cfg = uniform_cfg(10, 1);
  SessionConfig out = apply_parameter(cfg, "delta_w", 0.011);
  CHECK(out.params.delta_w == 0.011);
  CHECK(cfg.params.delta_w == 0.009);  // original untouched
  out = apply_parameter(cfg, "eve_delta_t", 2.5);
  CHECK(out.attack.eve_delta_t == 2.5);
  CHECK_THROWS_AS(apply_parameter(cfg, "bin_w", 0.0), std::invalid_argument);
  CHECK_THROWS_AS(apply_parameter(cfg, "nope", 1.0), std::invalid_argument);
}

TEST_CASE("the sweepable knob list is exposed") {
  std::vector<std::string> names = sweepable_parameters();
  CHECK(names.size() == 12);
  auto has = [&](const char* n) {
    for (const std::string& s : names) {
      if (s == n) return true;
    }
    return false;
  };
  CHECK(has("sigma_w1"));
  CHECK(has("channel_loss"));
  CHECK(has("eve_delta_t"));
  CHECK(has("resend_halfwidth"));
}

TEST_CASE("sweeps run ascending with derived per-row seeds") {
  SessionConfig cfg = uniform_cfg(5000, 77);
  cfg.sweep = SweepSpec{"channel_loss", {0.4, 0.0, 0.2}};
  std::vector<SessionStats> rows = run_sweep(cfg);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].sweep_value == 0.0);
  CHECK(rows[1].sweep_value == 0.2);
  CHECK(rows[2].sweep_value == 0.4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].sweep_parameter == "channel_loss");
    CHECK(rows[i].seed == derive_seed(77, i));
  }
  // Loss share follows the swept value.
  CHECK(rows[0].lost == 0);
  CHECK(static_cast<double>(rows[2].lost) / 5000.0 ==
        doctest::Approx(0.4).epsilon(0.15));
  // Sweeping is deterministic end to end.
  std::vector<SessionStats> again = run_sweep(cfg);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(csv_row(again[i]) == csv_row(rows[i]));
  }
}

TEST_CASE("run_sweep demands a sweep block") {
  SessionConfig cfg = uniform_cfg(10, 1);
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("z-scores are signed and NaN-safe") {
  SessionStats s;
  s.source_mode = SourceMode::UniformInBin;
  s.time.sifted = 1000;
  s.time.correct = 800;
  s.time.wrong = 200;  // rate 0.2 against expectation 0.1: z positive
  s.analytic_pe_time = 0.1;
  s.analytic_pe_freq = 0.1;  // freq basis saw nothing: z NaN
  ComparisonReport r = report_compare(s);
  CHECK(r.z_time == doctest::Approx((200.0 - 100.0) / std::sqrt(1000 * 0.1 * 0.9)));
  CHECK(std::isnan(r.z_freq));
  CHECK(r.comparable);
  CHECK_FALSE(r.pass);  // |z_time| > 3
}

}  // TEST_SUITE
