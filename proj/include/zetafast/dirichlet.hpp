#pragma once

#include <cmath>
#include <vector>

#include "zetafast/engine.hpp"
#include "zetafast/types.hpp"

namespace zetafast {

/// A Dirichlet character mod q stored as an exact phase table:
/// chi(n) = exp(2 pi i phase(n) / period), with phase -1 off the units.
class DirichletCharacter {
 public:
  DirichletCharacter(int modulus, int index, std::vector<int> generator_orders,
                     std::vector<int> exponents, int period, std::vector<int> phases);

  int modulus() const { return modulus_; }
  /// Position in the lexicographic order of generator exponents.
  int index() const { return index_; }
  const std::vector<int>& generator_exponents() const { return exponents_; }
  const std::vector<int>& generator_orders() const { return orders_; }
  int period() const { return period_; }
  /// Multiplicative order of chi.
  int order() const { return order_; }

  int phase(long long n) const;
  ComplexValue operator()(long long n) const { return values_[reduce(n)]; }
  const std::vector<ComplexValue>& values() const { return values_; }

  /// chi(n) rounded once into the requested complex type.
  template <class Complex>
  Complex value_as(long long n) const;

  bool is_principal() const { return principal_; }
  bool is_primitive() const { return primitive_; }
  bool is_real() const { return real_; }

  DirichletCharacter conjugate() const;

 private:
  std::size_t reduce(long long n) const {
    long long r = n % modulus_;
    if (r < 0) r += modulus_;
    return static_cast<std::size_t>(r);
  }

  int modulus_;
  int index_;
  std::vector<int> orders_;
  std::vector<int> exponents_;
  int period_;
  int order_ = 1;
  std::vector<int> phases_;
  std::vector<ComplexValue> values_;
  bool principal_ = false;
  bool primitive_ = false;
  bool real_ = false;
};

template <class Complex>
Complex DirichletCharacter::value_as(long long n) const {
  using std::cos;
  using std::sin;
  using Real = real_of_t<Complex>;
  const int ph = phases_[reduce(n)];
  if (ph < 0) return Complex(Real(0), Real(0));
  // Quarter turns are exact.
  if ((4 * static_cast<long long>(ph)) % period_ == 0) {
    switch ((4 * static_cast<long long>(ph)) / period_) {
      case 0: return Complex(Real(1), Real(0));
      case 1: return Complex(Real(0), Real(1));
      case 2: return Complex(Real(-1), Real(0));
      default: return Complex(Real(0), Real(-1));
    }
  }
  const Real angle = two_pi_v<Real>() * Real(ph) / Real(period_);
  return Complex(cos(angle), sin(angle));
}

/// All phi(q) characters mod q, 2 <= q <= 10^4, built from generators of
/// (Z/qZ)^* prime power by prime power. Index 0 is the principal character.
std::vector<DirichletCharacter> characters_mod(int q);

/// characters_mod(q)[index], with a CharacterError for a bad index.
DirichletCharacter character(int q, int index);

/// G(chi) = sum_{p=1}^{q} chi(p) e^{2 pi i p / q}.
template <class Complex>
Complex gauss_sum_as(const DirichletCharacter& chi) {
  using std::cos;
  using std::sin;
  using Real = real_of_t<Complex>;
  CompensatedComplexSum<Complex> acc;
  const int q = chi.modulus();
  for (int p = 1; p <= q; ++p) {
    const Complex c = chi.value_as<Complex>(p);
    if (c.real() == Real(0) && c.imag() == Real(0)) continue;
    const Real angle = two_pi_v<Real>() * Real(p % q) / Real(q);
    acc += c * Complex(cos(angle), sin(angle));
  }
  return acc.value();
}

ComplexValue gauss_sum(const DirichletCharacter& chi);

/// L(s, chi) from the smoothed sum and both dual series (mu = +1 and -1)
/// with conjugate-character weights. chi must be primitive and
/// non-principal. Parameters reuse the zeta rules; the dual series are run to
/// M = ceil(q N). error_bound is the change under doubling every cutoff plus
/// the roundoff estimate, and the result is never certified.
EvalResult l_function(ComplexValue s, const DirichletCharacter& chi, double delta,
                      PrecisionPolicy precision = PrecisionPolicy::automatic);

/// One L-series evaluation at explicit truncations, exposed for tests.
template <class Complex>
SeriesSum<Complex> l_series(const Complex& s, const DirichletCharacter& chi, const EvalParams& p,
                            std::int64_t d_terms, int m_terms) {
  using Real = real_of_t<Complex>;
  const Real q(chi.modulus());
  SeriesSum<Complex> total = detail::smoothed_sum(
      s, p.v, Real(p.N), d_terms, 0, [&](std::int64_t n) { return chi.value_as<Complex>(n); });

  const Complex gauss = gauss_sum_as<Complex>(chi);
  const Real tol = Real(p.delta) * Real(1e-4) / Real(std::max(m_terms, 1));
  for (int mu : {1, -1}) {
    const auto ctx = detail::make_tail_context(s, p.v, Real(p.N), mu, q, 0, tol);
    CompensatedComplexSum<Complex> acc;
    SeriesSum<Complex> branch;
    for (int m = 1; m <= m_terms; ++m) {
      const Complex c = chi.value_as<Complex>(m);
      if (c.real() == Real(0) && c.imag() == Real(0)) continue;
      const auto part = detail::tail_term(ctx, m);
      acc += conj(c) * part.value[0];
      branch.max_magnitude = std::max(branch.max_magnitude, part.max_magnitude);
      branch.conditioned_sq += part.conditioned_sq;
    }
    const Complex weight = gauss * chi.value_as<Complex>(mu == 1 ? -1 : 1);
    const double wmag = detail::magnitude(weight);
    branch.value[0] = weight * acc.value();
    branch.max_magnitude *= wmag;
    branch.conditioned_sq *= wmag * wmag;
    branch.terms = static_cast<std::int64_t>(p.v + 1) * m_terms;
    total.absorb(branch);
  }
  total.max_magnitude = std::max(total.max_magnitude, detail::magnitude(total.value[0]));
  return total;
}

}  // namespace zetafast
