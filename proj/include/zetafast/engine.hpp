#pragma once

// Zeta evaluation from a smoothed Dirichlet sum, the dual correction series
// E_1, and the pole-correction term. The kernels are templates on the
// complex scalar so the same code runs in hardware and extended precision.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "zetafast/compensated.hpp"
#include "zetafast/params.hpp"
#include "zetafast/special.hpp"
#include "zetafast/types.hpp"

namespace zetafast {

/// Value and the first two s-derivatives.
template <class Complex>
using Jet = std::array<Complex, 3>;

/// A partial series together with its work count and the roundoff
/// diagnostics the certificate needs.
template <class Complex>
struct SeriesSum {
  Jet<Complex> value{};
  std::int64_t terms = 0;
  double max_magnitude = 0.0;
  // Sum of (|term| * exponent condition)^2; sqrt of it times epsilon
  // estimates the accumulated rounding of the exponentials.
  double conditioned_sq = 0.0;

  void absorb(const SeriesSum& other) {
    for (int k = 0; k < 3; ++k) value[k] += other.value[k];
    terms += other.terms;
    max_magnitude = std::max(max_magnitude, other.max_magnitude);
    conditioned_sq += other.conditioned_sq;
  }
};

namespace detail {

template <class Real>
double to_double(const Real& x) {
  return static_cast<double>(x);
}

template <class Complex>
double magnitude(const Complex& z) {
  using std::abs;
  return static_cast<double>(abs(z));
}

template <class Complex>
Complex imaginary_unit() {
  using Real = real_of_t<Complex>;
  return Complex(Real(0), Real(1));
}

template <class Complex>
Complex from_value(const ComplexValue& z) {
  using Real = real_of_t<Complex>;
  return Complex(Real(z.real()), Real(z.imag()));
}

template <class Complex>
ComplexValue to_value(const Complex& z) {
  return ComplexValue(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

/// Smoothed sum  sum_{n=1}^{terms} weight(n) n^{-s} Q(v, n/N), ascending n,
/// with termwise derivatives up to `order`. weight(n) == 0 skips the term.
template <class Complex, class Weight>
SeriesSum<Complex> smoothed_sum(const Complex& s, int v, const real_of_t<Complex>& N,
                                std::int64_t terms, int order, Weight&& weight) {
  using std::exp;
  using std::log;
  using Real = real_of_t<Complex>;
  std::array<CompensatedComplexSum<Complex>, 3> acc;
  SeriesSum<Complex> out;
  out.terms = terms;
  const double s_abs = magnitude(s);
  for (std::int64_t n = 1; n <= terms; ++n) {
    const Complex w = weight(n);
    if (w.real() == Real(0) && w.imag() == Real(0)) continue;
    const Real log_n = log(Real(n));
    const Real cutoff = q_cutoff<Real>(v, Real(n) / N);
    const Complex term = exp(-s * log_n) * (cutoff * w);
    Complex factor(Real(1), Real(0));
    for (int k = 0; k <= order; ++k) {
      acc[k] += term * factor;
      factor *= -log_n;
    }
    const double mag = magnitude(term);
    out.max_magnitude = std::max(out.max_magnitude, mag);
    const double cond = mag * (1.0 + s_abs * to_double(log_n));
    out.conditioned_sq += cond * cond;
  }
  for (int k = 0; k <= order; ++k) out.value[k] = acc[k].value();
  out.max_magnitude = std::max(out.max_magnitude, magnitude(out.value[0]));
  return out;
}

/// Everything about one branch (mu = +1 or -1) of the dual series that does
/// not depend on m.
template <class Complex>
struct TailContext {
  using Real = real_of_t<Complex>;
  Complex s;
  int v = 0;
  int mu = 1;
  int order = 0;
  Complex z;              // i mu q / (2 pi N)
  Complex log_z;
  Complex log_base;       // m-independent part of the exponent at w = v
  Complex dlog_base;      // s-derivative of the m- and w-independent parts
  double base_condition;  // sum of magnitudes of the cancelling pieces
  Complex psi_v;          // psi(1 - s + v)
  Complex trigamma_v;     // psi'(1 - s + v)
  Real tolerance;
};

/// Prefactor (2pi)^{s-1} q^{-s} Gamma(1-s) e^{i mu pi (1-s)/2} folded into
/// the binomial tail: the w-th tail term of E_mu(m, s) is
///   Gamma(1-s+w)/w! (m+z)^{s-1-w} z^w.
/// Gamma(1-s) cancels, leaving only pole-free Gamma(1-s+w) with w >= v.
template <class Complex>
TailContext<Complex> make_tail_context(const Complex& s, int v, const real_of_t<Complex>& N,
                                       int mu, const real_of_t<Complex>& q, int order,
                                       const real_of_t<Complex>& tolerance) {
  using std::log;
  using Real = real_of_t<Complex>;
  const Complex i = imaginary_unit<Complex>();
  const Real two_pi = two_pi_v<Real>();
  const Real half_pi = pi_v<Real>() / Real(2);
  const Real log_two_pi = log(two_pi);
  const Real log_q = log(q);
  const Complex one(Real(1), Real(0));

  TailContext<Complex> ctx;
  ctx.s = s;
  ctx.v = v;
  ctx.mu = mu;
  ctx.order = order;
  ctx.z = i * (Real(mu) * q / (two_pi * N));
  ctx.log_z = principal_log(ctx.z);
  const Complex a = one - s + Real(v);
  const Complex lg = log_gamma(a);
  const Complex lfact = log_gamma(Complex(Real(v + 1), Real(0)));
  const Complex phase = i * (Real(mu) * half_pi) * (one - s);
  const Complex pow2pi = (s - one) * log_two_pi;
  const Complex powq = -s * log_q;
  const Complex powz = Real(v) * ctx.log_z;
  ctx.log_base = lg - lfact + pow2pi + powq + phase + powz;
  ctx.dlog_base = Complex(log_two_pi - log_q, -Real(mu) * half_pi);
  ctx.base_condition = magnitude(lg) + magnitude(lfact) + magnitude(pow2pi) +
                       magnitude(powq) + magnitude(phase) + magnitude(powz);
  if (order > 0) {
    ctx.psi_v = digamma(a);
    ctx.trigamma_v = trigamma(a);
  }
  ctx.tolerance = tolerance;
  return ctx;
}

/// Sum over w >= v of the prefactored tail terms for one m. Consecutive
/// terms follow the ratio (1-s+w) z / ((w+1)(m+z)); the loop stops once a
/// geometric bound on everything not yet added is below the tolerance.
template <class Complex>
SeriesSum<Complex> tail_term(const TailContext<Complex>& ctx, std::int64_t m) {
  using std::abs;
  using std::exp;
  using Real = real_of_t<Complex>;
  const Complex one(Real(1), Real(0));
  const Complex u = Complex(Real(m), Real(0)) + ctx.z;
  const Complex log_u = principal_log(u);
  const Complex exponent = ctx.log_base + (ctx.s - one - Real(ctx.v)) * log_u;
  const double condition = ctx.base_condition + magnitude((ctx.s - one - Real(ctx.v)) * log_u);

  Complex term = exp(exponent);
  const Real z_over_u = abs(ctx.z) / abs(u);
  Complex a = one - ctx.s + Real(ctx.v);  // 1 - s + w
  Complex psi = ctx.psi_v;
  Complex tri = ctx.trigamma_v;
  const Complex dconst = ctx.dlog_base + log_u;

  std::array<CompensatedComplexSum<Complex>, 3> acc;
  SeriesSum<Complex> out;
  const std::int64_t peak =
      static_cast<std::int64_t>(std::ceil(magnitude(a) * to_double(z_over_u)));
  const std::int64_t cap = 10000 + 4 * peak;
  for (std::int64_t w = ctx.v;; ++w) {
    Jet<Complex> jet{term, Complex(), Complex()};
    if (ctx.order > 0) {
      const Complex d1 = dconst - psi;
      jet[1] = term * d1;
      if (ctx.order > 1) jet[2] = term * (d1 * d1 + tri);
    }
    for (int k = 0; k <= ctx.order; ++k) acc[k] += jet[k];
    const double mag = magnitude(term);
    out.max_magnitude = std::max(out.max_magnitude, mag);
    out.conditioned_sq += (mag * condition) * (mag * condition);
    ++out.terms;

    const Complex ratio = a * ctx.z / (Real(w + 1) * u);
    const Complex next = term * ratio;
    if (ctx.order > 0) {
      psi += one / a;
      tri -= one / (a * a);
    }
    a += Real(1);
    term = next;

    // sup_{j > w} |ratio_j| <= max(|1-s+j|/(j+1), 1) |z|/|u|
    const Real growth = abs(a) / Real(w + 2);
    const Real sup_ratio = (growth > Real(1) ? growth : Real(1)) * z_over_u;
    if (sup_ratio < Real(1)) {
      Real remainder = abs(next) / (Real(1) - sup_ratio);
      if (ctx.order > 0) {
        const Real dmag = Real(1) + abs(dconst - psi);
        remainder *= ctx.order > 1 ? dmag * dmag : dmag;
      }
      if (remainder < ctx.tolerance) break;
    }
    if (w - ctx.v > cap) {
      throw NonConvergence("binomial tail did not meet its stopping rule");
    }
  }
  for (int k = 0; k <= ctx.order; ++k) out.value[k] = acc[k].value();
  return out;
}

}  // namespace detail

/// Truncation overrides, used to check that extending a cutoff leaves the
/// result inside its error budget. Zero means "use the parameter rule".
struct Truncation {
  std::int64_t d_terms = 0;
  int e_terms = 0;
};

/// D(N, s) = sum_{n=1}^{ceil(lambda v N)} n^{-s} Q(v, n/N) and its term count.
template <class Complex>
std::pair<Complex, std::int64_t> d_sum(const Complex& s, const EvalParams& p) {
  using Real = real_of_t<Complex>;
  const auto part = detail::smoothed_sum(s, p.v, Real(p.N), p.d_terms(), 0,
                                         [](std::int64_t) { return Complex(Real(1), Real(0)); });
  return {part.value[0], part.terms};
}

/// (2pi)^{s-1} Gamma(1-s) e^{i mu pi (1-s)/2} E_mu(m, s) in binomial-tail form.
template <class Complex>
Complex e1_prefactored_term(const Complex& s, std::int64_t m, int mu, const EvalParams& p) {
  using Real = real_of_t<Complex>;
  if (m < 1) throw DomainError("e1_prefactored_term: m must be >= 1");
  if (mu != 1 && mu != -1) throw DomainError("e1_prefactored_term: mu must be +1 or -1");
  const Real tol = Real(p.delta) * Real(1e-4) / Real(std::max(p.M, 1));
  const auto ctx = detail::make_tail_context(s, p.v, Real(p.N), mu, Real(1), 0, tol);
  return detail::tail_term(ctx, m).value[0];
}

/// sum_{m=1}^{terms} of the prefactored E_mu terms, plus diagnostics.
template <class Complex>
SeriesSum<Complex> e_mu_series(const Complex& s, const EvalParams& p, int mu, int terms,
                               int order = 0) {
  using Real = real_of_t<Complex>;
  const Real tol = Real(p.delta) * Real(1e-4) / Real(std::max(terms, 1));
  const auto ctx = detail::make_tail_context(s, p.v, Real(p.N), mu, Real(1), order, tol);
  std::array<CompensatedComplexSum<Complex>, 3> acc;
  SeriesSum<Complex> out;
  for (int m = 1; m <= terms; ++m) {
    const auto part = detail::tail_term(ctx, m);
    for (int k = 0; k <= order; ++k) acc[k] += part.value[k];
    out.max_magnitude = std::max(out.max_magnitude, part.max_magnitude);
    out.conditioned_sq += part.conditioned_sq;
  }
  for (int k = 0; k <= order; ++k) out.value[k] = acc[k].value();
  out.max_magnitude = std::max(out.max_magnitude, detail::magnitude(out.value[0]));
  // Work is charged as v+1 summands per m, the count of the closed form.
  out.terms = static_cast<std::int64_t>(p.v + 1) * terms;
  return out;
}

/// E_1(M, s) and its charged summand count (v+1) M.
template <class Complex>
std::pair<Complex, std::int64_t> e1_sum(const Complex& s, const EvalParams& p) {
  const auto part = e_mu_series(s, p, 1, p.M);
  return {part.value[0], part.terms};
}

/// Gamma(1-s+v) / ((1-s) Gamma(v)) N^{1-s} with derivatives up to `order`.
template <class Complex>
SeriesSum<Complex> correction_jet(const Complex& s, const EvalParams& p, int order) {
  using std::exp;
  using std::log;
  using Real = real_of_t<Complex>;
  const Complex one(Real(1), Real(0));
  const Complex one_minus_s = one - s;
  if (one_minus_s.real() == Real(0) && one_minus_s.imag() == Real(0)) {
    throw PoleError("zeta has a simple pole at s = 1");
  }
  const Complex a = one_minus_s + Real(p.v);
  const Real log_n = log(Real(p.N));
  const Complex lg = log_gamma(a);
  const Complex lgv = log_gamma(Complex(Real(p.v), Real(0)));
  const Complex value = exp(lg - lgv + one_minus_s * log_n) / one_minus_s;
  SeriesSum<Complex> out;
  out.value[0] = value;
  if (order > 0) {
    const Complex inv = one / one_minus_s;
    const Complex d1 = -digamma(a) - log_n + inv;
    out.value[1] = value * d1;
    if (order > 1) out.value[2] = value * (d1 * d1 + trigamma(a) + inv * inv);
  }
  const double mag = detail::magnitude(value);
  out.max_magnitude = mag;
  const double cond = mag * (detail::magnitude(lg) + detail::magnitude(one_minus_s * log_n) + 1.0);
  out.conditioned_sq = cond * cond;
  return out;
}

template <class Complex>
Complex correction_term(const Complex& s, const EvalParams& p) {
  return correction_jet(s, p, 0).value[0];
}

/// D + E_1 - correction, for Im s >= 0. At Im s == 0 the E_1 series is
/// omitted. Derivatives are taken termwise.
template <class Complex>
SeriesSum<Complex> zeta_series(const Complex& s, const EvalParams& p, int order,
                               const Truncation& trunc = {}) {
  using Real = real_of_t<Complex>;
  const std::int64_t d_terms = trunc.d_terms > 0 ? trunc.d_terms : p.d_terms();
  const int e_terms = trunc.e_terms > 0 ? trunc.e_terms : p.M;
  SeriesSum<Complex> total = detail::smoothed_sum(
      s, p.v, Real(p.N), d_terms, order, [](std::int64_t) { return Complex(Real(1), Real(0)); });
  if (s.imag() != Real(0)) {
    total.absorb(e_mu_series(s, p, 1, e_terms, order));
  }
  auto corr = correction_jet(s, p, order);
  for (int k = 0; k < 3; ++k) corr.value[k] = -corr.value[k];
  corr.terms = 0;
  total.absorb(corr);
  total.max_magnitude = std::max(total.max_magnitude, detail::magnitude(total.value[0]));
  return total;
}

/// Options for the public evaluators.
struct EvalOptions {
  Mode mode = Mode::certified;
  PrecisionPolicy precision = PrecisionPolicy::automatic;
  Truncation truncation{};
};

/// Certified (or heuristic) evaluation of zeta(s) to absolute accuracy delta.
/// Im s < 0 is answered by conjugation. Hardware precision is tried first;
/// when the roundoff estimate exceeds delta the evaluation is repeated in
/// extended precision.
EvalResult zeta(ComplexValue s, double delta, const EvalOptions& options);
EvalResult zeta(ComplexValue s, double delta, Mode mode = Mode::certified,
                PrecisionPolicy precision = PrecisionPolicy::automatic);

/// Termwise first or second derivative. Always reported uncertified.
EvalResult zeta_derivative(ComplexValue s, int order, double delta,
                           PrecisionPolicy precision = PrecisionPolicy::automatic);

/// The neglected mu = -1 series truncated at p.M, in hardware precision.
ComplexValue e_minus_one_sum(ComplexValue s, const EvalParams& p);

/// Roundoff estimate from series diagnostics: the cancellation part uses the
/// largest magnitude seen, the exponent part the conditioned sum.
double roundoff_estimate(double epsilon, double max_magnitude, double conditioned_sq);

}  // namespace zetafast
