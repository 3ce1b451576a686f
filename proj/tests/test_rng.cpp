#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ftqkd/rng.hpp"
#include "oracles.hpp"

using namespace ftqkd;

TEST_SUITE("rng") {

// First raw outputs frozen from an independent reimplementation of the
// generator; these pin the bit-level behavior across compilers/platforms.
TEST_CASE("raw output sequence is bit-stable") {
  RandomStream r(42);
  CHECK(r.next_u64() == 0x8ca10b1dbe91ee23ULL);
  CHECK(r.next_u64() == 0xe72aac3121269f60ULL);
  CHECK(r.next_u64() == 0xeb61ef540335612cULL);

  RandomStream s0(42, 0);
  CHECK(s0.next_u64() == 0x9eb36987f365be28ULL);
  CHECK(s0.next_u64() == 0xdeb3dc96d96e0d2eULL);

  RandomStream s1(42, 1);
  CHECK(s1.next_u64() == 0x5952499d9ec8209dULL);
  CHECK(s1.next_u64() == 0x4c8ff0c781ed2d85ULL);

  CHECK(RandomStream(42).uniform() == doctest::Approx(0.54933232761556605).epsilon(1e-16));

  CHECK(derive_seed(7, 0) == 0xeab8589a51e95a84ULL);
  CHECK(derive_seed(7, 1) == 0x4031583ff431954fULL);
}

TEST_CASE("same seed replays, different substreams diverge") {
  RandomStream a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  RandomStream s0(123, 0), s1(123, 1), plain(123);
  int same01 = 0, same0p = 0;
  for (int i = 0; i < 64; ++i) {
    std::uint64_t x = s0.next_u64();
    same01 += (x == s1.next_u64());
    same0p += (x == plain.next_u64());
  }
  CHECK(same01 == 0);
  CHECK(same0p == 0);
}

TEST_CASE("uniform lies in [0,1) with the right moments") {
  RandomStream r(2024);
  const int n = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    double u = r.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
    sumsq += u * u;
  }
  double mean = sum / n;
  double var = sumsq / n - mean * mean;
  // se(mean) = 1/sqrt(12 n) ~ 9.1e-4; allow 4 se.
  CHECK(std::abs(mean - 0.5) < 4.0 / std::sqrt(12.0 * n));
  CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.03));
}

TEST_CASE("uniform empirical CDF passes a KS check") {
  RandomStream r(515151);
  const int n = 100000;
  std::vector<double> u(n);
  for (double& x : u) x = r.uniform();
  std::sort(u.begin(), u.end());
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    double lo = static_cast<double>(i) / n;
    double hi = static_cast<double>(i + 1) / n;
    d = std::max(d, std::max(std::abs(u[i] - lo), std::abs(u[i] - hi)));
  }
  // 1.95/sqrt(n) is the alpha ~ 0.001 critical value; the seed is fixed, so
  // this never flakes -- it guards against regressions in the generator.
  CHECK(d < 1.95 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("uniform_index is unbiased over a non-power-of-two range") {
  RandomStream r(77);
  const int n = 70000, buckets = 7;
  int count[buckets] = {0};
  for (int i = 0; i < n; ++i) {
    std::uint64_t k = r.uniform_index(buckets);
    REQUIRE(k < static_cast<std::uint64_t>(buckets));
    count[k] += 1;
  }
  const double expect = static_cast<double>(n) / buckets;
  const double se = std::sqrt(expect * (1.0 - 1.0 / buckets));
  for (int k = 0; k < buckets; ++k) {
    CHECK(std::abs(count[k] - expect) < 4.0 * se);
  }
}

TEST_CASE("bernoulli tracks its probability") {
  RandomStream r(99);
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += r.bernoulli(0.3);
  double se = oracle::binom_se(0.3, n);
  CHECK(std::abs(hits / static_cast<double>(n) - 0.3) < 4.0 * se);
}

TEST_CASE("normal has standard moments and central mass") {
  RandomStream r(31337);
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  int within1 = 0;
  for (int i = 0; i < n; ++i) {
    double x = r.normal();
    sum += x;
    sumsq += x * x;
    within1 += (std::abs(x) < 1.0);
  }
  double mean = sum / n;
  double var = sumsq / n - mean * mean;
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));          // se = 1/sqrt(n)
  CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / n));                    // se ~ sqrt(2/n)
  // P(|X| < 1) = erf(1/sqrt(2)) = 0.682689...
  double frac = within1 / static_cast<double>(n);
  CHECK(std::abs(frac - 0.6826894921) < 4.0 * oracle::binom_se(0.6827, n));
}

TEST_CASE("gaussian_halfwidth std is halfwidth/sqrt(2)") {
  RandomStream r(8);
  const int n = 200000;
  const double c = 5.0, hw = 3.0;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = r.gaussian_halfwidth(c, hw);
    sum += x;
    sumsq += x * x;
  }
  double mean = sum / n;
  double var = sumsq / n - mean * mean;
  double want_var = hw * hw / 2.0;
  CHECK(mean == doctest::Approx(c).epsilon(0.01));
  CHECK(var == doctest::Approx(want_var).epsilon(0.02));
}

TEST_CASE("derived seeds are distinct across rows") {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 100; ++i) seeds.push_back(derive_seed(1, i));
  std::sort(seeds.begin(), seeds.end());
  CHECK(std::adjacent_find(seeds.begin(), seeds.end()) == seeds.end());
}

}  // TEST_SUITE
