#pragma once

// Complex special functions on a generic scalar: principal log and power,
// log-gamma, digamma, trigamma, and the finite incomplete gamma cutoff.

#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "zetafast/compensated.hpp"
#include "zetafast/types.hpp"

namespace zetafast {

template <class Real>
Real pi_v() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
Real two_pi_v() {
  return boost::math::constants::two_pi<Real>();
}

/// B_0, B_2, B_4, ..., B_60 (index k holds B_{2k}), exact rationals rounded
/// once into the target scalar.
template <class Real>
const std::vector<Real>& bernoulli_b2k();

template <>
const std::vector<double>& bernoulli_b2k<double>();
template <>
const std::vector<long double>& bernoulli_b2k<long double>();
template <>
const std::vector<Extended>& bernoulli_b2k<Extended>();

namespace detail {

template <class Real>
int decimal_digits() {
  return std::numeric_limits<Real>::digits10;
}

/// |w| at which the Stirling series reaches working precision before
/// diverging; the minimal term is roughly exp(-2 pi |w|).
template <class Real>
Real stirling_threshold() {
  return decimal_digits<Real>() >= 30 ? Real(25) : Real(13);
}

template <class Complex>
bool is_nonpositive_integer(const Complex& z) {
  using std::floor;
  using Real = real_of_t<Complex>;
  return z.imag() == Real(0) && z.real() <= Real(0) &&
         floor(z.real()) == z.real();
}

/// Number of unit steps that move Re z past the Stirling threshold.
/// log p! - (p log p - p) for p >= 1.
template <class Real>
Real log_factorial_residual(int p) {
  using std::abs;
  using std::log;
  const Real rp(p);
  if (p < 10) {
    Real lf(0);
    for (int k = 2; k <= p; ++k) lf += log(Real(k));
    return lf - rp * log(rp) + rp;
  }
  // (1/2) log(2 pi p) + sum_k B_2k / (2k (2k-1) p^{2k-1})
  const auto& b = bernoulli_b2k<Real>();
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real result = log(two_pi_v<Real>() * rp) / Real(2);
  Real power = Real(1) / rp;
  const Real inv_p2 = power * power;
  for (std::size_t k = 1; k < b.size(); ++k) {
    const Real kk(2 * k);
    const Real term = b[k] / (kk * (kk - Real(1))) * power;
    result += term;
    if (abs(term) < eps * Real(0.01)) break;
    power *= inv_p2;
  }
  return result;
}

template <class Complex>
int stirling_shift(const Complex& z) {
  using Real = real_of_t<Complex>;
  const Real threshold = stirling_threshold<Real>();
  if (z.real() >= threshold) return 0;
  const double gap = static_cast<double>(threshold - z.real());
  return static_cast<int>(std::ceil(gap));
}

}  // namespace detail

/// log|z| + i arg z with arg in (-pi, pi]. A negative-zero imaginary part
/// is treated as +0 so that the negative real axis maps to +i pi.
template <class Complex>
Complex principal_log(const Complex& z) {
  using std::log;
  using Real = real_of_t<Complex>;
  if (z.real() == Real(0) && z.imag() == Real(0)) {
    throw DomainError("principal_log: argument is zero");
  }
  if (z.imag() == Real(0)) {
    return log(Complex(z.real(), Real(0)));
  }
  return log(z);
}

/// exp(w log z) on the principal branch; 0^w = 0 for positive integer w.
template <class Complex>
Complex complex_pow(const Complex& z, const Complex& w) {
  using std::exp;
  using std::floor;
  using Real = real_of_t<Complex>;
  if (z.real() == Real(0) && z.imag() == Real(0)) {
    if (w.imag() == Real(0) && w.real() > Real(0) &&
        floor(w.real()) == w.real()) {
      return Complex(Real(0), Real(0));
    }
    throw DomainError("complex_pow: zero base with non positive-integer exponent");
  }
  return exp(w * principal_log(z));
}

/// Branch of log Gamma that is continuous off the nonpositive real axis.
/// Shifts Re z above the Stirling threshold, sums the asymptotic series,
/// then subtracts the principal logs of the shifted factors.
template <class Complex>
Complex log_gamma(const Complex& z) {
  using std::abs;
  using std::log;
  using Real = real_of_t<Complex>;
  if (detail::is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at nonpositive integer");
  }
  const int shift = detail::stirling_shift(z);
  CompensatedComplexSum<Complex> shifted_logs;
  Complex w = z;
  for (int k = 0; k < shift; ++k) {
    shifted_logs += principal_log(w);
    w += Real(1);
  }

  const Real eps = std::numeric_limits<Real>::epsilon();
  const Complex log_w = principal_log(w);
  Complex result = (w - Real(0.5)) * log_w - w + log(two_pi_v<Real>()) / Real(2);
  const auto& b = bernoulli_b2k<Real>();
  const Complex inv_w = Real(1) / w;
  const Complex inv_w2 = inv_w * inv_w;
  Complex power = inv_w;
  const Real scale = abs(result) > Real(1) ? abs(result) : Real(1);
  for (std::size_t k = 1; k < b.size(); ++k) {
    const Real kk = Real(static_cast<int>(2 * k));
    const Complex term = power * (b[k] / (kk * (kk - Real(1))));
    result += term;
    if (abs(term) < eps * scale * Real(0.01)) break;
    power *= inv_w2;
  }
  return result - shifted_logs.value();
}

/// psi(z) = d/dz log Gamma(z), by recurrence into the asymptotic region.
template <class Complex>
Complex digamma(const Complex& z) {
  using std::abs;
  using Real = real_of_t<Complex>;
  if (detail::is_nonpositive_integer(z)) {
    throw PoleError("digamma: pole at nonpositive integer");
  }
  const int shift = detail::stirling_shift(z);
  CompensatedComplexSum<Complex> reciprocals;
  Complex w = z;
  for (int k = 0; k < shift; ++k) {
    reciprocals += Real(1) / w;
    w += Real(1);
  }

  const Real eps = std::numeric_limits<Real>::epsilon();
  const Complex inv_w = Real(1) / w;
  const Complex inv_w2 = inv_w * inv_w;
  Complex result = principal_log(w) - inv_w / Real(2);
  const auto& b = bernoulli_b2k<Real>();
  Complex power = inv_w2;
  const Real scale = abs(result) > Real(1) ? abs(result) : Real(1);
  for (std::size_t k = 1; k < b.size(); ++k) {
    const Real kk = Real(static_cast<int>(2 * k));
    const Complex term = power * (b[k] / kk);
    result -= term;
    if (abs(term) < eps * scale * Real(0.01)) break;
    power *= inv_w2;
  }
  return result - reciprocals.value();
}

/// psi'(z), same scheme as digamma.
template <class Complex>
Complex trigamma(const Complex& z) {
  using std::abs;
  using Real = real_of_t<Complex>;
  if (detail::is_nonpositive_integer(z)) {
    throw PoleError("trigamma: pole at nonpositive integer");
  }
  const int shift = detail::stirling_shift(z);
  CompensatedComplexSum<Complex> squares;
  Complex w = z;
  for (int k = 0; k < shift; ++k) {
    squares += Real(1) / (w * w);
    w += Real(1);
  }

  const Real eps = std::numeric_limits<Real>::epsilon();
  const Complex inv_w = Real(1) / w;
  const Complex inv_w2 = inv_w * inv_w;
  Complex result = inv_w + inv_w2 / Real(2);
  const auto& b = bernoulli_b2k<Real>();
  Complex power = inv_w2 * inv_w;
  const Real scale = abs(result);
  for (std::size_t k = 1; k < b.size(); ++k) {
    const Complex term = power * b[k];
    result += term;
    if (abs(term) < eps * scale * Real(0.01)) break;
    power *= inv_w2;
  }
  return result + squares.value();
}

/// Q(v, x) = e^{-x} sum_{w<v} x^w / w!, the normalized incomplete gamma
/// function for integer order. Terms follow t_{w+1} = t_w x / (w+1); for
/// large v or x the sum is taken in log space.
template <class Real>
Real q_cutoff(int v, const Real& x) {
  using std::exp;
  using std::log;
  if (v < 1) throw DomainError("q_cutoff: order must be >= 1");
  if (x < Real(0)) throw DomainError("q_cutoff: argument must be >= 0");
  if (x == Real(0)) return Real(1);

  // e^x bounds the partial sum, so the linear path is safe below this.
  const Real overflow_guard =
      Real(0.9) * Real(std::numeric_limits<Real>::max_exponent10) * log(Real(10));
  if (v <= 150 && x < overflow_guard) {
    Real term(1);
    CompensatedSum<Real> sum;
    sum.add(term);
    for (int w = 1; w < v; ++w) {
      term *= x / Real(w);
      sum.add(term);
    }
    const Real q = exp(-x) * sum.value();
    return q > Real(1) ? Real(1) : q;
  }

  // Log space: anchor at the largest term t_p, p = min(v-1, floor x), and
  // scale the others by the ratio recurrence in both directions.
  using std::floor;
  const Real px = floor(x);
  const int p = px < Real(v - 1) ? static_cast<int>(px) : v - 1;
  // log t_p = p log(x/p) - (x - p) - (log p! - p log p + p), each piece
  // small, so no cancellation between terms of size x.
  using std::log1p;
  Real log_peak = -x;
  if (p > 0) {
    const Real rp(p);
    const Real f = x - rp;
    log_peak = rp * log1p(f / rp) - f - detail::log_factorial_residual<Real>(p);
  }
  CompensatedSum<Real> sum;
  Real t(1);
  for (int w = p; w >= 1; --w) {
    t *= Real(w) / x;
    sum.add(t);
  }
  t = Real(1);
  sum.add(t);
  for (int w = p + 1; w < v; ++w) {
    t *= x / Real(w);
    sum.add(t);
  }
  const Real q = exp(log_peak) * sum.value();
  return q > Real(1) ? Real(1) : q;
}

}  // namespace zetafast
