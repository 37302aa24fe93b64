#include "zetafast/engine.hpp"

#include <cmath>
#include <string>

namespace zetafast {

double roundoff_estimate(double epsilon, double max_magnitude, double conditioned_sq) {
  return epsilon * (1e3 * max_magnitude + 10.0 * std::sqrt(conditioned_sq));
}

namespace {

struct Attempt {
  ComplexValue value;
  std::int64_t summands = 0;
  double max_magnitude = 0.0;
  double roundoff = 0.0;
};

template <class Real>
Attempt run_zeta(ComplexValue s, const EvalParams& p, int order, const Truncation& trunc) {
  using Complex = complex_t<Real>;
  const auto series = zeta_series(detail::from_value<Complex>(s), p, order, trunc);
  Attempt a;
  a.value = detail::to_value(series.value[order]);
  a.summands = series.terms;
  a.max_magnitude = series.max_magnitude;
  const double eps = static_cast<double>(std::numeric_limits<Real>::epsilon());
  a.roundoff = roundoff_estimate(eps, series.max_magnitude, series.conditioned_sq);
  return a;
}

void validate_argument(ComplexValue s, double delta) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
    throw DomainError("argument must be finite");
  }
  if (s == ComplexValue(1.0, 0.0)) {
    throw PoleError("zeta has a simple pole at s = 1");
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidAccuracy("delta must be a positive finite number");
  }
}

EvalResult evaluate(ComplexValue s, double delta, int order, const EvalOptions& options) {
  validate_argument(s, delta);
  if (options.mode == Mode::certified && (s.real() < 0.0 || s.real() > 2.0)) {
    throw DomainError("certified evaluation requires 0 <= Re s <= 2; use heuristic mode");
  }
  const bool flip = s.imag() < 0.0;
  const ComplexValue upper = flip ? std::conj(s) : s;

  EvalParams p = derive_params(upper.real(), upper.imag(), delta, options.mode);
  if (options.mode == Mode::heuristic && upper.real() + 1.0 >= p.v) {
    // The dual series needs Re(1 - s + v) > 0.
    p.v = static_cast<int>(std::floor(upper.real())) + 2;
    p.N = kSmoothingConstant * std::sqrt(1.0 + (0.5 + upper.imag()) / p.v);
    p.M = static_cast<int>(std::ceil(p.N));
  }

  Attempt attempt;
  Backend backend = Backend::hardware;
  if (options.precision == PrecisionPolicy::extended) {
    attempt = run_zeta<Extended>(upper, p, order, options.truncation);
    backend = Backend::extended;
  } else {
    attempt = run_zeta<double>(upper, p, order, options.truncation);
    if (options.precision == PrecisionPolicy::automatic && !(attempt.roundoff <= delta)) {
      attempt = run_zeta<Extended>(upper, p, order, options.truncation);
      backend = Backend::extended;
    }
  }

  const bool roundoff_ok = attempt.roundoff <= delta;
  if (!roundoff_ok && backend == Backend::extended && options.mode == Mode::certified &&
      order == 0) {
    throw PrecisionExhausted("extended precision cannot reach delta = " +
                             std::to_string(delta));
  }
  if (!std::isfinite(attempt.value.real()) || !std::isfinite(attempt.value.imag())) {
    throw PrecisionExhausted("evaluation overflowed the working range");
  }

  EvalResult r;
  r.value = flip ? std::conj(attempt.value) : attempt.value;
  r.error_bound = delta;
  r.summands_used = attempt.summands;
  r.certified = p.certified && roundoff_ok && order == 0;
  r.max_cancellation_ratio = attempt.max_magnitude / std::max(std::abs(attempt.value), 1.0);
  r.roundoff_estimate = attempt.roundoff;
  r.backend = backend;
  r.params = p;
  return r;
}

}  // namespace

EvalResult zeta(ComplexValue s, double delta, const EvalOptions& options) {
  return evaluate(s, delta, 0, options);
}

EvalResult zeta(ComplexValue s, double delta, Mode mode, PrecisionPolicy precision) {
  EvalOptions options;
  options.mode = mode;
  options.precision = precision;
  return evaluate(s, delta, 0, options);
}

EvalResult zeta_derivative(ComplexValue s, int order, double delta, PrecisionPolicy precision) {
  if (order != 1 && order != 2) {
    throw DomainError("derivative order must be 1 or 2");
  }
  EvalOptions options;
  const bool in_strip = s.real() >= 0.0 && s.real() <= 2.0 && delta <= kMaxCertifiedDelta;
  options.mode = in_strip ? Mode::certified : Mode::heuristic;
  options.precision = precision;
  EvalResult r = evaluate(s, delta, order, options);
  r.certified = false;
  return r;
}

ComplexValue e_minus_one_sum(ComplexValue s, const EvalParams& p) {
  const auto part = e_mu_series(s, p, -1, p.M);
  return part.value[0];
}

}  // namespace zetafast
