#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "lpsim/step_path.hpp"
#include "oracles.hpp"

using lpsim::StepPath;

namespace {

StepPath staircase4() { return StepPath({0.0, 0.25, 0.5, 0.75}, {0.0, 1.0, 2.0, 3.0}); }

StepPath pulse(int n) {
  return StepPath({0.0, 0.5 - 1.0 / n, 0.5 + 1.0 / n}, {0.0, 1.0, 0.0});
}

}  // namespace

TEST_CASE("construction validates the invariants") {
  CHECK_THROWS_AS(StepPath({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(StepPath({0.0, 0.5}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepPath({0.1}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepPath({0.0, 0.5, 0.5}, {1.0, 2.0, 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepPath({0.0, 1.5}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("evaluation is right-continuous, last value holds at 1") {
  const StepPath x({0.0, 0.25, 0.5}, {0.0, 1.0, 2.0});
  CHECK(x(0.25) == 1.0);
  CHECK(x(0.2499) == 0.0);
  CHECK(x(1.0) == 2.0);
  CHECK(x(0.0) == 0.0);
  CHECK(x(0.5) == 2.0);
  CHECK_THROWS_AS(x(-0.01), std::domain_error);
  CHECK_THROWS_AS(x(1.01), std::domain_error);
}

TEST_CASE("sup norm") {
  CHECK(lpsim::sup_norm(StepPath::constant(0.0)) == 0.0);
  CHECK(lpsim::sup_norm(pulse(8)) == 1.0);
  CHECK(lpsim::sup_norm(StepPath({0.0, 0.5}, {-3.0, 2.0})) == 3.0);
}

TEST_CASE("affine plotting map") {
  const StepPath x = staircase4();
  const StepPath same = lpsim::plot_affine(x, 0.0, 1.0);
  for (std::size_t i = 0; i < x.segments(); ++i) {
    CHECK(same.values()[i] == x.values()[i]);
  }
  const StepPath c = lpsim::plot_affine(StepPath::constant(5.0), 2.0, 6.0);
  CHECK(c.values()[0] == 0.75);

  const StepPath once = lpsim::plot_affine(x, -1.0, 3.0);
  const StepPath twice = lpsim::plot_affine(once, 0.0, 1.0);
  for (std::size_t i = 0; i < once.segments(); ++i) {
    CHECK(twice.values()[i] == once.values()[i]);
  }
  CHECK_THROWS_AS(lpsim::plot_affine(x, 1.0, 1.0), std::domain_error);
}

TEST_CASE("automatic plotting map and its degenerate case") {
  const StepPath x({0.0, 0.5}, {-2.0, 2.0});
  const StepPath scaled = lpsim::plot_auto(x);
  CHECK(scaled.values()[0] == 0.0);
  CHECK(scaled.values()[1] == 1.0);

  const StepPath stairs = lpsim::plot_auto(staircase4());
  CHECK(stairs.values()[0] == 0.0);
  CHECK(stairs.values()[1] == Catch::Approx(1.0 / 3.0));
  CHECK(stairs.values()[3] == 1.0);

  const StepPath again = lpsim::plot_auto(stairs);
  for (std::size_t i = 0; i < stairs.segments(); ++i) {
    CHECK(again.values()[i] == Catch::Approx(stairs.values()[i]).margin(1e-15));
  }
  CHECK_THROWS_AS(lpsim::plot_auto(StepPath::constant(3.0)), lpsim::degenerate_range_error);
}

TEST_CASE("pointwise sum on the merged grid") {
  const StepPath x = staircase4();
  const StepPath zero = StepPath::constant(0.0);
  const StepPath same = lpsim::sum_paths(x, zero);
  for (double t : {0.0, 0.1, 0.25, 0.6, 1.0}) CHECK(same(t) == x(t));

  const StepPath p = pulse(4);
  const StepPath q = StepPath({0.0, 0.375, 0.625}, {0.0, 1.0, 0.0});
  const StepPath s = lpsim::sum_paths(p, q);
  CHECK(lpsim::sup_norm(s) <= lpsim::sup_norm(p) + lpsim::sup_norm(q));
  CHECK(s(0.4) == 2.0);

  std::mt19937_64 gen(5);
  for (int rep = 0; rep < 50; ++rep) {
    const StepPath a = oracle::random_path(gen, 12, -3.0, 3.0);
    const StepPath b = oracle::random_path(gen, 12, -3.0, 3.0);
    const StepPath sum = lpsim::sum_paths(a, b);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 25; ++i) {
      const double t = unif(gen);
      CHECK(sum(t) == a(t) + b(t));
    }
    CHECK(sum(1.0) == a(1.0) + b(1.0));
  }
}

TEST_CASE("csv round trip is lossless") {
  const StepPath zero = StepPath::constant(0.0);
  std::ostringstream os;
  lpsim::write_csv(zero, os);
  CHECK(os.str() == "t,value\n0,0\n");

  const StepPath two = StepPath({0.0, 0.5}, {0.0, 1.0});
  std::ostringstream os2;
  lpsim::write_csv(two, os2);
  CHECK(os2.str() == "t,value\n0,0\n0.5,1\n");

  std::mt19937_64 gen(17);
  for (int rep = 0; rep < 20; ++rep) {
    const StepPath x = oracle::random_path(gen, 30, -7.0, 7.0);
    std::ostringstream buf;
    lpsim::write_csv(x, buf);
    std::istringstream in(buf.str());
    const StepPath y = lpsim::read_csv(in);
    REQUIRE(y.segments() == x.segments());
    for (std::size_t i = 0; i < x.segments(); ++i) {
      CHECK(y.times()[i] == x.times()[i]);
      CHECK(y.values()[i] == x.values()[i]);
    }
  }

  std::istringstream bad("time,value\n0,0\n");
  CHECK_THROWS_AS(lpsim::read_csv(bad), std::runtime_error);
}
