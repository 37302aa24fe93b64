#pragma once

#include <cmath>

#include "zetafast/types.hpp"

namespace zetafast {

/// Neumaier's variant of Kahan summation: the running compensation also
/// captures the low-order bits lost when the incoming term dominates the sum.
template <class Real>
class CompensatedSum {
 public:
  void add(const Real& x) {
    using std::abs;
    Real t = sum_ + x;
    if (abs(sum_) >= abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(const Real& x) {
    add(x);
    return *this;
  }

  Real value() const { return sum_ + comp_; }

 private:
  Real sum_{0};
  Real comp_{0};
};

/// Componentwise compensated accumulation of complex terms.
template <class Complex>
class CompensatedComplexSum {
  using Real = real_of_t<Complex>;

 public:
  void add(const Complex& z) {
    re_.add(z.real());
    im_.add(z.imag());
  }

  CompensatedComplexSum& operator+=(const Complex& z) {
    add(z);
    return *this;
  }

  Complex value() const { return Complex(re_.value(), im_.value()); }

 private:
  CompensatedSum<Real> re_;
  CompensatedSum<Real> im_;
};

}  // namespace zetafast
