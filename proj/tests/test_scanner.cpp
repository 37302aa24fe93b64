#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "zetafast/engine.hpp"
#include "zetafast/scanner.hpp"

using namespace zetafast;

TEST_CASE("theta asymptotics") {
  const double t = 500.0;
  const double approx = t / 2 * std::log(t / (2 * std::numbers::pi)) - t / 2 - std::numbers::pi / 8;
  CHECK(std::abs(rs_theta(t) - approx) < 1e-3);
  CHECK(std::abs(rs_theta(t) - approx - 1.0 / (48 * t)) < 1e-7);
  CHECK_THROWS_AS(rs_theta(0.0), DomainError);
}

TEST_CASE("theta is continuous and increasing") {
  double prev = rs_theta(1.0);
  for (double t = 1.01; t < 200.0; t += 0.01) {
    const double cur = rs_theta(t);
    CHECK(std::abs(cur - prev) < std::numbers::pi / 2);
    if (t >= 10.0) CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("Z is real") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> tau(10.0, 1000.0);
  const double delta = 1e-8;
  for (int i = 0; i < 100; ++i) {
    CHECK(std::abs(hardy_z(tau(rng), delta).imag_residual) <= 10 * delta);
  }
}

TEST_CASE("Z values") {
  CHECK(std::abs(hardy_z(14.1347251417, 1e-8).z) < 1e-4);
  CHECK(hardy_z(20.0, 1e-8).z > 0.0);
  CHECK(hardy_z(20.0, 1e-8, Engine::oracle).z > 0.0);
}

TEST_CASE("zeros below 100") {
  const auto fast = find_zeros(0.5, 100.0, 1e-8, 0.05, Engine::zetafast, 2);
  const auto slow = find_zeros(0.5, 100.0, 1e-8, 0.05, Engine::oracle, 1);
  REQUIRE(fast.size() == 29);
  REQUIRE(slow.size() == 29);
  CHECK(std::abs(fast.front().t - 14.134725) <= 1e-6);
  for (std::size_t i = 0; i < fast.size(); ++i) {
    CHECK(std::abs(fast[i].t - slow[i].t) <= 1e-6);
    const auto& b = fast[i].bracket;
    CHECK(b.t_lo < b.t_hi);
    CHECK(b.z_lo * b.z_hi < 0.0);
    CHECK(fast[i].t >= b.t_lo);
    CHECK(fast[i].t <= b.t_hi);
    if (i > 0) CHECK(fast[i].t > fast[i - 1].t);
    // |zeta| at the refined zero is within the bisection width times |Z'|
    CHECK(std::abs(zeta(ComplexValue(0.5, fast[i].t), 1e-8).value) <= 20 * 1e-8 + 1e-6);
  }
}

TEST_CASE("worker count does not change the output") {
  const auto a = find_zeros(100.0, 140.0, 1e-8, 0.1, Engine::zetafast, 1);
  const auto b = find_zeros(100.0, 140.0, 1e-8, 0.1, Engine::zetafast, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].t == b[i].t);
}

TEST_CASE("scan argument checks") {
  CHECK_THROWS_AS(find_zeros(0.0, 10.0, 1e-8, 0.05), DomainError);
  CHECK_THROWS_AS(find_zeros(10.0, 5.0, 1e-8, 0.05), DomainError);
  CHECK_THROWS_AS(find_zeros(1.0, 10.0, 1e-8, 0.5), DomainError);
}
