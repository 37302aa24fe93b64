#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

namespace zetafast {

/// Hardware working precision. Every public record carries values in this type.
using ComplexValue = std::complex<double>;

/// Software extended precision (113-bit mantissa, about 34 significant digits).
using Extended = boost::multiprecision::float128;
using ExtendedComplex = boost::multiprecision::complex128;

template <class Real>
struct complex_of {
  using type = std::complex<Real>;
};
template <>
struct complex_of<Extended> {
  using type = ExtendedComplex;
};
template <class Real>
using complex_t = typename complex_of<Real>::type;

template <class Complex>
struct real_of;
template <class Real>
struct real_of<std::complex<Real>> {
  using type = Real;
};
template <>
struct real_of<ExtendedComplex> {
  using type = Extended;
};
template <class Complex>
using real_of_t = typename real_of<Complex>::type;

struct WorkingPrecision {
  int significant_decimal_digits;
  double machine_epsilon;

  template <class Real>
  static WorkingPrecision of() {
    return {std::numeric_limits<Real>::digits10,
            static_cast<double>(std::numeric_limits<Real>::epsilon())};
  }
};

enum class Mode { certified, heuristic };
enum class Backend { hardware, extended };
enum class PrecisionPolicy { automatic, hardware, extended };
enum class Engine { zetafast, oracle };

/// Parameter bundle produced by the certified selection rules.
struct EvalParams {
  int v = 0;
  double N = 0.0;
  int M = 0;
  double lambda = 3.151;
  double delta = 0.0;
  bool certified = false;
  double x0 = 0.0;  // root the cutoff order was rounded up from

  /// Number of terms in the truncated smoothed sum, ceil(lambda v N).
  std::int64_t d_terms() const;
};

struct EvalResult {
  ComplexValue value{};
  double error_bound = 0.0;
  std::int64_t summands_used = 0;
  bool certified = false;
  double max_cancellation_ratio = 0.0;
  double roundoff_estimate = 0.0;
  Backend backend = Backend::hardware;
  EvalParams params{};
};

// Errors. DomainError and its children map to CLI exit code 3,
// PrecisionExhausted and NonConvergence to exit code 4.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidAccuracy : public DomainError {
 public:
  using DomainError::DomainError;
};

class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class CharacterError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

const char* to_string(Backend b);
const char* to_string(Mode m);

}  // namespace zetafast
