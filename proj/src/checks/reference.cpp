#include "reference.hpp"

#include <boost/math/constants/constants.hpp>

namespace zetafast::checks {

namespace {

const HighReal& pi() {
  static const HighReal value = boost::math::constants::pi<HighReal>();
  return value;
}

struct SpougeTable {
  static constexpr int a = 45;
  std::vector<HighReal> c;
  SpougeTable() : c(a) {
    const HighReal two_pi = 2 * pi();
    c[0] = sqrt(two_pi);
    HighReal factorial = 1;  // (k-1)!
    for (int k = 1; k < a; ++k) {
      if (k > 1) factorial *= k - 1;
      const HighReal base = HighReal(a - k);
      HighReal ck = pow(base, HighReal(k) - HighReal(0.5)) * exp(base) / factorial;
      c[k] = (k % 2 == 1) ? ck : HighReal(-ck);
    }
  }
};

}  // namespace

HighComplex to_high(ComplexValue z) { return HighComplex(HighReal(z.real()), HighReal(z.imag())); }

ComplexValue from_high(const HighComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

HighComplex spouge_gamma(const HighComplex& z0) {
  static const SpougeTable table;
  HighComplex z = z0;
  HighComplex divisor(1);
  while (z.real() < 1) {
    divisor *= z;
    z += 1;
  }
  // Gamma(x + 1) for x = z - 1
  const HighComplex x = z - HighComplex(1);
  HighComplex series(table.c[0]);
  for (int k = 1; k < SpougeTable::a; ++k) series += table.c[k] / (x + HighComplex(k));
  const HighComplex base = x + HighComplex(SpougeTable::a);
  const HighComplex g =
      exp((x + HighComplex(HighReal(0.5))) * log(base) - base) * series;
  return g / divisor;
}

HighComplex direct_prefactored_term(ComplexValue s_in, long m, int mu, int v, double N) {
  const HighComplex s = to_high(s_in);
  const HighComplex one(1);
  const HighComplex i(HighReal(0), HighReal(1));
  const HighReal two_pi = 2 * pi();
  const HighComplex z = i * HighReal(mu) / (two_pi * HighReal(N));
  const HighComplex base = HighComplex(HighReal(m)) + z;

  HighComplex partial(0);
  HighComplex binom(1);  // binom(s-1, w)
  for (int w = 0; w < v; ++w) {
    partial += binom * pow(base, s - one - HighComplex(w)) * pow(-z, HighComplex(w));
    binom *= (s - one - HighComplex(w)) / HighComplex(w + 1);
  }
  const HighComplex e = pow(HighComplex(HighReal(m)), s - one) - partial;
  const HighComplex prefactor = exp((s - one) * log(HighComplex(two_pi))) * spouge_gamma(one - s) *
                                exp(i * HighReal(mu) * pi() * (one - s) / HighReal(2));
  return prefactor * e;
}

HighComplex correction_reference(ComplexValue s_in, int v, double N) {
  const HighComplex s = to_high(s_in);
  const HighComplex one(1);
  const HighComplex one_minus_s = one - s;
  return spouge_gamma(one_minus_s + HighComplex(v)) / (one_minus_s * spouge_gamma(HighComplex(v))) *
         exp(one_minus_s * log(HighComplex(HighReal(N))));
}

}  // namespace zetafast::checks
