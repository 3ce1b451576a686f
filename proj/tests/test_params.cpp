#include <doctest.h>

#include <stdexcept>
#include <string>

#include "ftqkd/params.hpp"

using namespace ftqkd;

namespace {

// Checks that validate() rejects p and that the message names `field`.
void expect_reject(const ProtocolParams& p, const std::string& field) {
  try {
    validate(p);
    FAIL_CHECK("expected rejection for " << field);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(field) != std::string::npos);
  }
}

}  // namespace

TEST_SUITE("params") {

TEST_CASE("defaults validate and sit at the documented working point") {
  ProtocolParams p;
  CHECK_NOTHROW(validate(p));
  DerivedScales d = derived_scales(p);
  CHECK(d.sigma_t1 == doctest::Approx(2000.0).epsilon(1e-15));
  CHECK(d.sigma_t2 == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(d.s_t == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(d.s_w == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(d.n_bins_t == 400);
  CHECK(d.n_bins_w == 444);  // floor(2*20/0.09)
}

TEST_CASE("default feasibility report") {
  FeasibilityReport r = check_feasibility(ProtocolParams{});
  CHECK(r.security_ok);
  CHECK(r.resolution_ok);
  CHECK(r.ordering_ok);
  CHECK(r.bin_product == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(r.resolution_product == doctest::Approx(0.009).epsilon(1e-12));
  CHECK(r.resolution_bound == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(r.separation_ratio == doctest::Approx(2.5e-5).epsilon(1e-12));
}

TEST_CASE("security flag tracks the conjugate-bin product") {
  ProtocolParams p;
  p.bin_t = 10.0;
  p.bin_w = 0.09;
  CHECK(check_feasibility(p).security_ok);  // 0.9 < 1
  p.bin_w = 0.11;
  CHECK_FALSE(check_feasibility(p).security_ok);  // 1.1 >= 1
  p.bin_w = 0.1;
  CHECK_FALSE(check_feasibility(p).security_ok);  // exactly 1: not secure
}

TEST_CASE("resolution flag tracks the product bound 1/(s_t s_w)") {
  // At s_t = s_w = 10 the bound is 0.01.
  ProtocolParams p;  // delta_t*delta_w = 0.009
  CHECK(check_feasibility(p).resolution_ok);
  // Probe points straddle the bound away from its edge.
  p.delta_w = 0.011;
  p.bin_w = 0.11;  // keeps s_w = 10, product now 0.011
  CHECK_FALSE(check_feasibility(p).resolution_ok);
}

TEST_CASE("ordering flag needs every scale gap to be a decade") {
  ProtocolParams p;
  CHECK(check_feasibility(p).ordering_ok);
  // Shrink the broadband envelope: sigma_w2 >= 10*bin_w fails.
  p.sigma_w2 = 0.8;
  CHECK_FALSE(check_feasibility(p).ordering_ok);
  p = ProtocolParams{};
  // Coarsen the time resolution: bin_t >= 10*delta_t fails.
  p.delta_t = 2.0;
  CHECK_FALSE(check_feasibility(p).ordering_ok);
  p = ProtocolParams{};
  // Fatten the narrowband width: delta_w >= 10*sigma_w1 fails.
  p.sigma_w1 = 1e-3;
  CHECK_FALSE(check_feasibility(p).ordering_ok);
}

TEST_CASE("validation rejects out-of-range fields by name") {
  ProtocolParams p;
  p.sigma_w1 = 0.0;
  expect_reject(p, "sigma_w1");
  p = ProtocolParams{};
  p.sigma_w2 = -3.0;
  expect_reject(p, "sigma_w2");
  p = ProtocolParams{};
  p.delta_t = 0.0;
  expect_reject(p, "delta_t");
  p = ProtocolParams{};
  p.delta_w = -1.0;
  expect_reject(p, "delta_w");
  p = ProtocolParams{};
  p.bin_t = 0.0;
  expect_reject(p, "bin_t");
  p = ProtocolParams{};
  p.bin_w = 0.0;
  expect_reject(p, "bin_w");
  p = ProtocolParams{};
  p.channel_loss = 1.5;
  expect_reject(p, "channel_loss");
  p = ProtocolParams{};
  p.channel_loss = -0.1;
  expect_reject(p, "channel_loss");
  p = ProtocolParams{};
  p.buffer_fraction = 0.0;
  expect_reject(p, "buffer_fraction");
  p = ProtocolParams{};
  p.buffer_fraction = 1.0;
  expect_reject(p, "buffer_fraction");
  p = ProtocolParams{};
  p.sigma_w1 = 30.0;  // not below sigma_w2 = 20
  expect_reject(p, "sigma_w1");
}

TEST_CASE("loss bounds are inclusive") {
  ProtocolParams p;
  p.channel_loss = 0.0;
  CHECK_NOTHROW(validate(p));
  p.channel_loss = 1.0;
  CHECK_NOTHROW(validate(p));
}

}  // TEST_SUITE
