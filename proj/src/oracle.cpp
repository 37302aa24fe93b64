#include "zetafast/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zetafast/engine.hpp"

namespace zetafast {

EulerMaclaurinConfig default_em_config(ComplexValue s) {
  EulerMaclaurinConfig cfg;
  cfg.cutoff_terms =
      std::max(30, static_cast<int>(std::ceil(std::abs(s.imag()) / 2.0)) + 30);
  cfg.bernoulli_order = 40;
  return cfg;
}

void validate_em_config(ComplexValue s, const EulerMaclaurinConfig& cfg) {
  const int floor_terms =
      std::max(10, static_cast<int>(std::ceil(std::abs(s.imag()) / 2.0)) + 10);
  if (cfg.cutoff_terms < floor_terms) {
    throw DomainError("Euler-Maclaurin cutoff too small for this argument");
  }
  if (cfg.bernoulli_order < 10 || cfg.bernoulli_order > 60 || cfg.bernoulli_order % 2 != 0) {
    throw DomainError("Bernoulli order must be even and within [10, 60]");
  }
}

namespace {

template <class Real>
ComplexValue hurwitz_as(ComplexValue s, long num, long den, const EulerMaclaurinConfig& cfg) {
  using Complex = complex_t<Real>;
  const Real a = Real(num) / Real(den);
  return detail::to_value(hurwitz_em_checked(detail::from_value<Complex>(s), a, cfg));
}

}  // namespace

ComplexValue hurwitz_em(ComplexValue s, long num, long den, const EulerMaclaurinConfig& cfg) {
  if (den <= 0 || num <= 0 || num > den) {
    throw DomainError("Hurwitz parameter must lie in (0, 1]");
  }
  if (s == ComplexValue(1.0, 0.0)) throw PoleError("Hurwitz zeta has a pole at s = 1");
  validate_em_config(s, cfg);
  const int digits = cfg.precision.significant_decimal_digits;
  if (digits <= std::numeric_limits<double>::digits10) return hurwitz_as<double>(s, num, den, cfg);
  if (digits <= std::numeric_limits<long double>::digits10) {
    return hurwitz_as<long double>(s, num, den, cfg);
  }
  return hurwitz_as<Extended>(s, num, den, cfg);
}

ComplexValue hurwitz_em(ComplexValue s, long num, long den) {
  return hurwitz_em(s, num, den, default_em_config(s));
}

ComplexValue zeta_em(ComplexValue s, const EulerMaclaurinConfig& cfg) {
  return hurwitz_em(s, 1, 1, cfg);
}

ComplexValue zeta_em(ComplexValue s) { return zeta_em(s, default_em_config(s)); }

ComplexValue zeta_em_derivative(ComplexValue s, int order) {
  if (order < 1 || order > 2) throw DomainError("derivative order must be 1 or 2");
  const double dist = std::abs(s - ComplexValue(1.0, 0.0));
  if (dist < 1e-3) throw PoleError("too close to the pole at s = 1");
  const double radius = std::min(0.25, dist / 3.0);
  constexpr int kPoints = 64;
  CompensatedComplexSum<ComplexValue> acc;
  for (int j = 0; j < kPoints; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / kPoints;
    const ComplexValue dir = std::polar(1.0, theta);
    const ComplexValue f = zeta_em(s + radius * dir);
    acc += f * std::polar(1.0, -order * theta);
  }
  const double factorial = order == 1 ? 1.0 : 2.0;
  return acc.value() * (factorial / (kPoints * std::pow(radius, order)));
}

}  // namespace zetafast
