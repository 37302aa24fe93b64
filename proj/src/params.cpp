#include "zetafast/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace zetafast {

std::int64_t EvalParams::d_terms() const {
  return static_cast<std::int64_t>(std::ceil(lambda * v * N));
}

double order_log_weight(double sigma) { return std::max((1.0 - sigma) / 2.0, 0.0); }

double order_equation_residual(double x, double sigma, double tau, double delta) {
  return x - order_log_weight(sigma) * std::log(0.5 + x + std::abs(tau)) -
         std::log(8.0 / delta);
}

namespace {

void check_delta(double delta, Mode mode) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidAccuracy("delta must be a positive finite number");
  }
  if (mode == Mode::certified && delta > kMaxCertifiedDelta) {
    throw InvalidAccuracy("certified evaluation requires delta <= 0.05, got " +
                          std::to_string(delta));
  }
}

}  // namespace

double solve_x0(double sigma, double tau, double delta, Mode mode) {
  check_delta(delta, mode);
  if (!std::isfinite(sigma) || !std::isfinite(tau)) {
    throw DomainError("solve_x0: non-finite argument");
  }
  tau = std::abs(tau);
  const double weight = order_log_weight(sigma);
  auto f = [&](double x) { return order_equation_residual(x, sigma, tau, delta); };

  // Left side is increasing once 1/2 + x + tau exceeds the weight.
  double lo = std::max(5.0, weight - 0.5 - tau);
  if (f(lo) >= 0.0) return lo;

  const double log8d = std::log(8.0 / delta);
  double hi = log8d + std::log(0.5 + std::max(log8d, 0.0) + tau) + 2.0;
  hi = std::max(hi, lo + 1.0);
  while (f(hi) < 0.0) hi = 2.0 * hi;

  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    const double slope = 1.0 - weight / (0.5 + x + tau);
    const double next = x - f(x) / slope;
    if (next >= lo - 1e-9 && next <= hi + 1e-9) x = next;
  }
  return x;
}

int solve_v(double sigma, double tau, double delta, Mode mode) {
  const double x0 = solve_x0(sigma, tau, delta, mode);
  return std::max(5, static_cast<int>(std::ceil(x0)));
}

EvalParams derive_params(double sigma, double tau, double delta, Mode mode) {
  tau = std::abs(tau);
  EvalParams p;
  p.x0 = solve_x0(sigma, tau, delta, mode);
  p.v = std::max(5, static_cast<int>(std::ceil(p.x0)));
  p.N = kSmoothingConstant * std::sqrt(1.0 + (0.5 + tau) / p.v);
  p.M = static_cast<int>(std::ceil(p.N));
  p.lambda = kLambda;
  p.delta = delta;
  p.certified = mode == Mode::certified && sigma >= 0.0 && sigma <= 2.0 &&
                delta <= kMaxCertifiedDelta;
  return p;
}

bool speed_precondition(double tau, double delta) {
  return tau > (5.0 / 3.0) * (1.5 + std::log(8.0 / delta));
}

double summand_bound_formula(double sigma, double tau, double delta) {
  const double inner =
      1.0 + std::log(8.0 / delta) + order_log_weight(sigma) * std::log(2.0 * tau);
  if (!(tau > 0.0) || !(inner >= 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return 2.0 + 8.0 * std::sqrt(inner) * std::sqrt(tau);
}

double summand_bound(double sigma, double tau, double delta) {
  if (!speed_precondition(tau, delta)) {
    throw PreconditionError("summand_bound: tau does not satisfy the speed precondition");
  }
  return summand_bound_formula(sigma, tau, delta);
}

}  // namespace zetafast
