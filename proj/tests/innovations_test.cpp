#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <thread>

#include "lpsim/innovations.hpp"
#include "lpsim/prng.hpp"
#include "oracles.hpp"

using lpsim::StableParams;
using lpsim::SymmetricPareto;
using lpsim::stable_sigma;

TEST_CASE("inverse cdf branch values") {
  const SymmetricPareto model(2.0);
  CHECK(model.inv_cdf(0.5) == -1.0);
  CHECK(model.inv_cdf(0.875) == 2.0);
  CHECK(model.inv_cdf(1.0 / 32.0) == -4.0);
  CHECK_THROWS_AS(model.inv_cdf(0.0), std::domain_error);
  CHECK_THROWS_AS(model.inv_cdf(1.0), std::domain_error);
  CHECK_THROWS_AS(SymmetricPareto(0.0), std::domain_error);
  CHECK_THROWS_AS(SymmetricPareto(2.5), std::domain_error);
}

TEST_CASE("inverse cdf is symmetric and supported outside (-1,1)") {
  const SymmetricPareto model(1.5);
  const lpsim::rng::CounterStream cs(99, 0);
  for (int i = 0; i < 10000; ++i) {
    const double u = cs.unit_at(i);
    const double left = model.inv_cdf(u);
    const double right = model.inv_cdf(1.0 - u);
    CHECK(std::fabs(left + right) <= 1e-12 * std::max(std::fabs(left), std::fabs(right)));
    CHECK(std::fabs(left) >= 1.0);
  }
}

TEST_CASE("cdf and inverse agree") {
  const SymmetricPareto model(1.2);
  for (double u : {0.01, 0.2, 0.5, 0.7, 0.99}) {
    const double x = model.inv_cdf(u);
    if (x < -1.0 || x >= 1.0) {
      CHECK(model.cdf(x) == Catch::Approx(u).margin(1e-12));
    }
  }
}

TEST_CASE("sampling is deterministic per (seed, stream)") {
  const SymmetricPareto model(1.5);
  CHECK(model.sample(0, 1, 1).empty());
  const auto a = model.sample(1000, 42, 3);
  const auto b = model.sample(1000, 42, 3);
  REQUIRE(a.size() == 1000);
  CHECK(a == b);
  const auto c = model.sample(1000, 42, 4);
  CHECK(a != c);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == model.at(42, 3, static_cast<std::int64_t>(i)));
  }
}

TEST_CASE("concurrent stream sampling equals sequential") {
  const SymmetricPareto model(1.5);
  std::vector<std::vector<double>> parallel(8);
  {
    std::vector<std::thread> workers;
    for (std::uint64_t s = 0; s < 8; ++s) {
      workers.emplace_back([&model, &parallel, s] {
        parallel[s] = model.sample(2000, 99, s);
      });
    }
    for (auto& w : workers) w.join();
  }
  for (std::uint64_t s = 0; s < 8; ++s) {
    CHECK(parallel[s] == model.sample(2000, 99, s));
  }
}

TEST_CASE("empirical tails follow the power law") {
  const SymmetricPareto model(1.5);
  const std::size_t n = 1000000;
  const auto draws = model.sample(n, 2024, 0);
  for (double x : {2.0, 4.0, 8.0, 16.0}) {
    std::size_t hits = 0;
    for (double v : draws) {
      if (std::fabs(v) > x) ++hits;
    }
    const double p = std::pow(x, -1.5);
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    CHECK(std::fabs(static_cast<double>(hits) / static_cast<double>(n) - p) <= 3.0 * se);
  }
}

TEST_CASE("norm constant: power branch") {
  CHECK(SymmetricPareto(1.5).norm_constant(1000) == 100.0);
  CHECK(SymmetricPareto(1.0).norm_constant(7) == 7.0);
  CHECK(SymmetricPareto(0.5).norm_constant(9) == 81.0);
  CHECK_THROWS_AS(SymmetricPareto(1.5).norm_constant(0), std::domain_error);
}

TEST_CASE("norm constant: log-root branch") {
  const SymmetricPareto model(2.0);
  CHECK(model.norm_constant(1000) == Catch::Approx(95.4883).margin(5e-5));
  CHECK(model.norm_constant(1000) == Catch::Approx(95.488253049276905).epsilon(1e-12));
  CHECK_THROWS_AS(model.norm_constant(2), std::domain_error);

  double prev = 0.0;
  for (long n : {3L, 4L, 10L, 100L, 1000L, 54321L, 1000000L}) {
    const double a = model.norm_constant(n);
    const double resid = std::fabs(a * a - 2.0 * static_cast<double>(n) * std::log(a));
    CHECK(resid <= 1e-9 * a * a);
    CHECK(a > prev);
    prev = a;
    if (n >= 4) CHECK(a > std::sqrt(2.0 * static_cast<double>(n)));
    // cross-check against the Lambert W_{-1} formulation
    const double via_w = std::exp(-0.5 * oracle::lambert_w_m1(-1.0 / static_cast<double>(n)));
    CHECK(a == Catch::Approx(via_w).epsilon(1e-10));
  }
}

TEST_CASE("stable scale") {
  const double pi = std::numbers::pi;
  CHECK(stable_sigma(1.0, 1.0) == pi / 2.0);
  CHECK(stable_sigma(1.5, 1.0) == Catch::Approx(1.8452701486440284).epsilon(1e-13));
  CHECK(stable_sigma(0.5, 1.0) == Catch::Approx(pi / 2.0).epsilon(1e-13));
  CHECK_THROWS_AS(stable_sigma(2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(stable_sigma(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(stable_sigma(1.5, 0.0), std::domain_error);

  const StableParams params = StableParams::symmetric(1.5);
  CHECK(params.beta == 0.0);
  CHECK(params.mu == 0.0);
  CHECK(params.sigma == stable_sigma(1.5, 1.0));
}
