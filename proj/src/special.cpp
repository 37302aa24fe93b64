#include "zetafast/special.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace zetafast {

namespace {

using boost::multiprecision::cpp_rational;

constexpr int kMaxBernoulli = 60;

// Akiyama-Tanigawa; exact, and only evaluated once per process.
const std::vector<cpp_rational>& bernoulli_rationals() {
  static const std::vector<cpp_rational> table = [] {
    std::vector<cpp_rational> a(kMaxBernoulli + 1);
    std::vector<cpp_rational> b(kMaxBernoulli + 1);
    for (int m = 0; m <= kMaxBernoulli; ++m) {
      a[m] = cpp_rational(1, m + 1);
      for (int j = m; j >= 1; --j) {
        a[j - 1] = cpp_rational(j) * (a[j - 1] - a[j]);
      }
      b[m] = a[0];
    }
    return b;
  }();
  return table;
}

template <class Real>
std::vector<Real> even_table() {
  const auto& all = bernoulli_rationals();
  std::vector<Real> out;
  for (int k = 0; 2 * k <= kMaxBernoulli; ++k) {
    out.push_back(all[2 * k].convert_to<Real>());
  }
  return out;
}

}  // namespace

template <>
const std::vector<double>& bernoulli_b2k<double>() {
  static const std::vector<double> t = even_table<double>();
  return t;
}

template <>
const std::vector<long double>& bernoulli_b2k<long double>() {
  static const std::vector<long double> t = even_table<long double>();
  return t;
}

template <>
const std::vector<Extended>& bernoulli_b2k<Extended>() {
  static const std::vector<Extended> t = even_table<Extended>();
  return t;
}

const char* to_string(Backend b) {
  return b == Backend::hardware ? "hardware" : "extended";
}

const char* to_string(Mode m) {
  return m == Mode::certified ? "certified" : "heuristic";
}

}  // namespace zetafast
