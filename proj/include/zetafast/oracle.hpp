#pragma once

// Reference evaluator: Euler-Maclaurin summation for the Hurwitz zeta
// function. Cost grows linearly with |Im s|; it exists to check the fast
// path, and shares nothing with it beyond the complex exp/log primitives
// and the Bernoulli table.

#include <cmath>
#include <cstdint>

#include "zetafast/compensated.hpp"
#include "zetafast/special.hpp"
#include "zetafast/types.hpp"

namespace zetafast {

struct EulerMaclaurinConfig {
  int cutoff_terms = 30;
  int bernoulli_order = 40;  // highest Bernoulli index used, even, in [10, 60]
  WorkingPrecision precision = WorkingPrecision::of<long double>();
  double self_check_tolerance = 1e-12;
};

/// Cutoff max(30, ceil(|Im s|/2) + 30), Bernoulli order 40, long double.
EulerMaclaurinConfig default_em_config(ComplexValue s);

/// Throws DomainError when the config violates its invariants for s.
void validate_em_config(ComplexValue s, const EulerMaclaurinConfig& cfg);

/// One unvalidated Euler-Maclaurin evaluation of zeta(s, a), a in (0, 1]:
///   sum_{n<C} (n+a)^{-s} + x^{1-s}/(s-1) + x^{-s}/2
///     + sum_k B_{2k}/(2k)! s(s+1)...(s+2k-2) x^{-s-2k+1},   x = C + a.
template <class Complex>
Complex hurwitz_em_raw(const Complex& s, const real_of_t<Complex>& a, int cutoff,
                       int bernoulli_order) {
  using std::abs;
  using std::exp;
  using std::log;
  using Real = real_of_t<Complex>;
  const Complex one(Real(1), Real(0));
  if (s == one) throw PoleError("Hurwitz zeta has a pole at s = 1");

  CompensatedComplexSum<Complex> sum;
  for (int n = 0; n < cutoff; ++n) {
    sum += exp(-s * log(Real(n) + a));
  }
  const Real x = Real(cutoff) + a;
  const Real log_x = log(x);
  const Complex x_pow = exp(-s * log_x);  // x^{-s}
  sum += x_pow * x / (s - one);
  sum += x_pow / Real(2);

  const auto& b = bernoulli_b2k<Real>();
  const Real inv_x2 = Real(1) / (x * x);
  Complex rising = s;                 // s (s+1) ... (s+2k-2)
  Complex power = x_pow / x;          // x^{-s-2k+1}
  Real factorial(2);                  // (2k)!
  for (int k = 1; 2 * k <= bernoulli_order; ++k) {
    const Complex term = rising * power * (b[k] / factorial);
    sum += term;
    const Real kk(2 * k);
    rising *= (s + kk - Real(1)) * (s + kk);
    power *= inv_x2;
    factorial *= (kk + Real(1)) * (kk + Real(2));
  }
  return sum.value();
}

/// Evaluates at cutoff C and 2C and requires agreement to the configured
/// tolerance (relative to max(1, |value|)); returns the 2C value.
template <class Complex>
Complex hurwitz_em_checked(const Complex& s, const real_of_t<Complex>& a,
                           const EulerMaclaurinConfig& cfg) {
  using std::abs;
  using Real = real_of_t<Complex>;
  const Complex coarse = hurwitz_em_raw(s, a, cfg.cutoff_terms, cfg.bernoulli_order);
  const Complex fine = hurwitz_em_raw(s, a, 2 * cfg.cutoff_terms, cfg.bernoulli_order);
  const Real scale = abs(fine) > Real(1) ? abs(fine) : Real(1);
  if (!(abs(fine - coarse) <= Real(cfg.self_check_tolerance) * scale)) {
    throw NonConvergence("Euler-Maclaurin self-check failed: cutoff and doubled cutoff disagree");
  }
  return fine;
}

/// zeta(s) via Euler-Maclaurin, self-validated.
ComplexValue zeta_em(ComplexValue s);
ComplexValue zeta_em(ComplexValue s, const EulerMaclaurinConfig& cfg);

/// zeta(s, num/den) for 0 < num <= den, self-validated.
ComplexValue hurwitz_em(ComplexValue s, long num, long den);
ComplexValue hurwitz_em(ComplexValue s, long num, long den, const EulerMaclaurinConfig& cfg);

/// Derivatives of the reference zeta by the Cauchy integral over a circle of
/// radius min(0.25, |s-1|/3), 64-point trapezoid rule.
ComplexValue zeta_em_derivative(ComplexValue s, int order);

}  // namespace zetafast
