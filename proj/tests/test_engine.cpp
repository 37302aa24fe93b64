#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "reference.hpp"
#include "zetafast/engine.hpp"
#include "zetafast/oracle.hpp"
#include "zetafast/params.hpp"

using namespace zetafast;
using C = ComplexValue;

namespace {

const double kPi = std::numbers::pi;

EvalParams params_with(int v, double tau, double delta) {
  EvalParams p;
  p.v = v;
  p.N = kSmoothingConstant * std::sqrt(1.0 + (0.5 + tau) / v);
  p.M = static_cast<int>(std::ceil(p.N));
  p.delta = delta;
  return p;
}

}  // namespace

TEST_CASE("classical values") {
  const EvalResult basel = zeta(C(2, 0), 1e-6);
  CHECK(std::abs(basel.value - kPi * kPi / 6) <= 1e-6);
  CHECK(basel.certified);
  CHECK(basel.error_bound == 1e-6);

  CHECK(std::abs(zeta(C(0, 0), 1e-6).value - C(-0.5, 0)) <= 1e-6);
  CHECK(std::abs(zeta(C(0.5, 14.1347251417), 1e-6).value) < 1e-5);

  const C s(0.5, 1000);
  CHECK(std::abs(zeta(s, 1e-6).value - zeta_em(s)) <= 1e-6);
}

TEST_CASE("real axis skips the dual series") {
  const EvalResult r = zeta(C(0.5, 0), 1e-8);
  CHECK(r.value.imag() == 0.0);
  CHECK(r.summands_used == r.params.d_terms());
  CHECK(std::abs(r.value - C(-1.4603545088095868, 0)) <= 1e-8);
}

TEST_CASE("summand accounting") {
  const EvalResult r = zeta(C(0.5, 300), 1e-6);
  const EvalParams& p = r.params;
  CHECK(r.summands_used == p.d_terms() + static_cast<std::int64_t>(p.v + 1) * p.M);
  CHECK(r.summands_used <= summand_bound(0.5, 300, 1e-6));
}

TEST_CASE("pole and domain errors") {
  CHECK_THROWS_AS(zeta(C(1, 0), 1e-6), PoleError);
  CHECK_THROWS_AS(zeta(C(3, 5), 1e-6), DomainError);
  CHECK_THROWS_AS(zeta(C(0.5, 5), 0.1), InvalidAccuracy);
  CHECK_THROWS_AS(zeta(C(0.5, 5), 0.0, Mode::heuristic), InvalidAccuracy);
  CHECK_THROWS_AS(zeta_derivative(C(0.5, 5), 3, 1e-6), DomainError);
  CHECK_THROWS_AS(zeta(C(std::nan(""), 5), 1e-6), DomainError);
}

TEST_CASE("near the pole") {
  const C s(1.0 + 1e-6, 0);
  const EvalResult r = zeta(s, 1e-8);
  CHECK(std::abs(r.value - zeta_em(s)) <= 1e-8);
}

TEST_CASE("conjugation") {
  for (C s : {C(0.3, 17.2), C(1.8, 2500.0), C(0.0, 0.7)}) {
    const EvalResult up = zeta(s, 1e-9);
    const EvalResult down = zeta(std::conj(s), 1e-9);
    CHECK(down.value == std::conj(up.value));
    CHECK(down.summands_used == up.summands_used);
  }
}

TEST_CASE("heuristic mode outside the strip") {
  for (C s : {C(-3.5, 10.0), C(-1.0, 0.0), C(4.0, 0.0), C(7.5, 3.0)}) {
    const EvalResult r = zeta(s, 1e-8, Mode::heuristic);
    CHECK_FALSE(r.certified);
    EulerMaclaurinConfig cfg = default_em_config(s);
    cfg.precision = WorkingPrecision::of<Extended>();
    const double err = std::abs(r.value - zeta_em(s, cfg));
    // no certificate here: right of the strip delta is met, left of it the
    // error grows with |sigma|
    if (s.real() >= 2.0) CHECK(err <= 1e-8);
    CHECK(err <= 50 * 1e-8 * std::max(1.0, std::abs(r.value)));
  }
  CHECK(std::abs(zeta(C(-1, 0), 1e-9, Mode::heuristic).value + 1.0 / 12.0) < 1e-9);
}

TEST_CASE("precision backends agree") {
  const C s(0.25, 3000);
  const EvalResult hw = zeta(s, 1e-8, Mode::certified, PrecisionPolicy::hardware);
  const EvalResult ext = zeta(s, 1e-8, Mode::certified, PrecisionPolicy::extended);
  CHECK(hw.backend == Backend::hardware);
  CHECK(ext.backend == Backend::extended);
  CHECK(std::abs(hw.value - ext.value) <= hw.roundoff_estimate);
  CHECK(ext.roundoff_estimate < 1e-20);
}

TEST_CASE("automatic fallback to extended precision") {
  // At delta = 1e-12 and tau = 5000 the hardware estimate exceeds delta.
  const C s(0.0, 5000);
  const EvalResult r = zeta(s, 1e-12);
  CHECK(r.backend == Backend::extended);
  CHECK(r.certified);
  CHECK(std::abs(r.value - zeta_em(s)) <= 1e-12);
  const EvalResult forced = zeta(s, 1e-12, Mode::heuristic, PrecisionPolicy::hardware);
  CHECK_FALSE(forced.certified);
}

TEST_CASE("precision exhausted") {
  CHECK_THROWS_AS(zeta(C(0.5, 1e4), 1e-40), PrecisionExhausted);
  const EvalResult r = zeta(C(0.5, 1e4), 1e-40, Mode::heuristic);
  CHECK_FALSE(r.certified);
}

TEST_CASE("cancellation diagnostics") {
  const EvalResult r = zeta(C(0.5, 14.134725141734693), 1e-8);
  CHECK(std::isfinite(r.max_cancellation_ratio));
  CHECK(r.max_cancellation_ratio >= 1.0);
  CHECK(r.roundoff_estimate > 0.0);
  CHECK(r.roundoff_estimate <= 1e-8);
}

TEST_CASE("large heights stay finite") {
  for (double tau : {1e6, 1e7}) {
    const EvalResult r = zeta(C(0.5, tau), 1e-6);
    CHECK(std::isfinite(r.value.real()));
    CHECK(std::isfinite(r.value.imag()));
    CHECK(r.summands_used <= summand_bound(0.5, tau, 1e-6));
  }
}

TEST_CASE("first smoothed summand") {
  // D at s = 2 with one term equals Q(6, 1/N).
  const EvalParams p = params_with(6, 0.0, 0.05);
  const auto one = detail::smoothed_sum(C(2, 0), 6, p.N, 1, 0, [](std::int64_t) { return C(1, 0); });
  CHECK(one.value[0].real() == doctest::Approx(q_cutoff(6, 1.0 / p.N)).epsilon(1e-15));
  CHECK(one.value[0].real() == doctest::Approx(0.99982).epsilon(1e-4));
  const auto [d, count] = d_sum(C(2, 0), p);
  CHECK(count == p.d_terms());
  CHECK(count >= 16);
  CHECK(std::isfinite(d.real()));
}

TEST_CASE("correction term") {
  const EvalParams p = params_with(6, 0.0, 1e-6);
  CHECK(std::abs(correction_term(C(0, 0), p) - C(6 * p.N, 0)) < 1e-13);
  CHECK(std::abs(correction_term(C(2, 0), p) - C(-1.0 / (5 * p.N), 0)) < 1e-15);
  CHECK_THROWS_AS(correction_term(C(1, 0), p), PoleError);

  const C s(0.5, 100);
  const EvalParams q = derive_params(0.5, 100, 1e-6);
  const C ref = checks::from_high(checks::correction_reference(s, q.v, q.N));
  CHECK(std::abs(correction_term(s, q) - ref) / std::abs(ref) < 1e-9);
}

TEST_CASE("tail form equals the direct binomial form") {
  const C s(0.5, 5);
  const EvalParams p = params_with(6, 5.0, 1e-30);
  for (long m = 1; m <= 10; ++m) {
    for (int mu : {1, -1}) {
      const C direct = checks::from_high(checks::direct_prefactored_term(s, m, mu, 6, p.N));
      const C tail = e1_prefactored_term(s, m, mu, p);
      CHECK(std::abs(tail - direct) / std::abs(direct) < 1e-9);
    }
  }
}

TEST_CASE("tail term ratio") {
  // Term w+1 over term w of the tail is (1-s+w) z / ((w+1)(m+z)); the sum of
  // the tail from v equals the tail from v+1 plus its first term.
  const C s(0.3, 8);
  const long m = 2;
  const EvalParams p5 = params_with(5, 8.0, 1e-30);
  EvalParams p6 = p5;
  p6.v = 6;
  const C z(0, 1.0 / (2 * kPi * p5.N));
  const C first = std::exp(log_gamma(1.0 - s + 5.0) - log_gamma(C(6, 0)) +
                           (s - 6.0) * std::log(double(m) + z) + 5.0 * std::log(z) +
                           (s - 1.0) * std::log(2 * kPi) + C(0, kPi / 2) * (1.0 - s));
  const C diff = e1_prefactored_term(s, m, 1, p5) - e1_prefactored_term(s, m, 1, p6);
  CHECK(std::abs(diff - first) / std::abs(first) < 1e-12);
}

TEST_CASE("tail term at an integer argument is the limit") {
  // The direct form vanishes at s = 3; the tail is the s -> 3 limit.
  const EvalParams p = params_with(6, 0.0, 1e-30);
  for (long m : {1L, 3L}) {
    const C at3 = e1_prefactored_term(C(3, 0), m, 1, p);
    auto direct = [&](double eps) {
      return checks::from_high(checks::direct_prefactored_term(C(3 + eps, 0), m, 1, 6, p.N));
    };
    const C a = direct(1e-3), b = direct(1e-4);
    // linear Richardson for steps 1e-3 and 1e-4
    const C limit = (10.0 * b - a) / 9.0;
    CHECK(std::abs(at3 - limit) / std::abs(at3) < 1e-6);
  }
}

TEST_CASE("E1 and E-1 are conjugate just above the real axis") {
  const EvalParams p = derive_params(0.5, 1e-6, 1e-8);
  const C s(0.5, 1e-6);
  const C e1 = e1_sum(s, p).first;
  const C em1 = e_minus_one_sum(s, p);
  // magnitudes differ by a factor 1 + O(tau)
  CHECK(std::abs(std::abs(e1) - std::abs(em1)) < 1e-4 * std::abs(e1));
  CHECK(std::abs(e1.real() - em1.real()) < 1e-4 * std::abs(e1));
  CHECK(std::abs(e1.imag() + em1.imag()) < 1e-4 * std::abs(e1));
}

TEST_CASE("E-1 is negligible on certified parameters") {
  for (double tau : {0.5, 20.0, 700.0}) {
    for (double delta : {1e-3, 1e-8}) {
      const EvalParams p = derive_params(0.2, tau, delta);
      CHECK(3 * std::abs(e_minus_one_sum(C(0.2, tau), p)) <= delta);
    }
  }
}

TEST_CASE("truncation refinement") {
  const C s(0.7, 1234.5);
  const double delta = 1e-7;
  const EvalResult base = zeta(s, delta);
  EvalOptions e4;
  e4.truncation.e_terms = 4 * base.params.M;
  EvalOptions d3;
  d3.truncation.d_terms = 3 * base.params.d_terms();
  CHECK(std::abs(zeta(s, delta, e4).value - base.value) < delta / 3);
  CHECK(std::abs(zeta(s, delta, d3).value - base.value) < delta / 3);
}

TEST_CASE("derivatives") {
  const EvalResult d0 = zeta_derivative(C(0, 0), 1, 1e-6);
  CHECK(std::abs(d0.value - C(-0.5 * std::log(2 * kPi), 0)) <= 1e-6);
  CHECK_FALSE(d0.certified);
  CHECK(d0.error_bound == 1e-6);
  CHECK(std::abs(zeta_derivative(C(2, 0), 1, 1e-6).value - C(-0.9375482543158437, 0)) <= 1e-6);

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> sig(0.05, 1.95), tau(0.0, 800.0);
  const double h = 1e-5;
  for (int i = 0; i < 20; ++i) {
    const C s(sig(rng), tau(rng));
    if (std::abs(s - 1.0) < 0.1) continue;
    const C d = zeta_derivative(s, 1, 1e-12).value;
    const C fd = (zeta(s + h, 1e-12).value - zeta(s - h, 1e-12).value) / (2 * h);
    CHECK(std::abs(d - fd) / std::abs(d) < 1e-5);
    const C d2 = zeta_derivative(s, 2, 1e-12).value;
    const C fd2 = (zeta_derivative(s + h, 1, 1e-12).value - zeta_derivative(s - h, 1, 1e-12).value) /
                  (2 * h);
    CHECK(std::abs(d2 - fd2) / std::abs(d2) < 1e-5);
  }
}

TEST_CASE("derivatives against the reference") {
  for (C s : {C(0.5, 20.0), C(1.5, 300.0), C(0.1, 4.0)}) {
    CHECK(std::abs(zeta_derivative(s, 1, 1e-10).value - zeta_em_derivative(s, 1)) < 1e-9);
    CHECK(std::abs(zeta_derivative(s, 2, 1e-10).value - zeta_em_derivative(s, 2)) < 1e-8);
  }
}

TEST_CASE("fixed summation order is reproducible") {
  const C s(0.5, 777.7);
  CHECK(zeta(s, 1e-9).value == zeta(s, 1e-9).value);
}
