#pragma once
// High-precision references used only for validation. Nothing here is shared
// with the engine: gamma is Spouge's formula, the dual-series term is the
// direct binomial form with its cancellation left in place.
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "zetafast/types.hpp"

namespace zetafast::checks {

using HighReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>>;
using HighComplex = boost::multiprecision::cpp_complex<60>;

HighComplex to_high(ComplexValue z);
ComplexValue from_high(const HighComplex& z);

/// Gamma(z) by Spouge's approximation (a = 45) after shifting Re z >= 1.
/// Relative accuracy is near 1e-35 away from the poles.
HighComplex spouge_gamma(const HighComplex& z);

/// (2pi)^{s-1} Gamma(1-s) e^{i mu pi (1-s)/2}
///   * [ m^{s-1} - sum_{w<v} binom(s-1, w) (m + i mu/(2 pi N))^{s-1-w} (-i mu/(2 pi N))^w ]
HighComplex direct_prefactored_term(ComplexValue s, long m, int mu, int v, double N);

/// Gamma(1-s+v) / ((1-s) Gamma(v)) N^{1-s}.
HighComplex correction_reference(ComplexValue s, int v, double N);

}  // namespace zetafast::checks
