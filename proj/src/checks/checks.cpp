#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "reference.hpp"
#include "zetafast/zetafast.hpp"

namespace zetafast::checks {

namespace {

constexpr double kCatalan = 0.915965594177219015054603514932384110774;

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Strip points sigma in [0, 2], tau in [0, tau_max], away from the pole.
std::vector<ComplexValue> strip_points(std::mt19937_64& rng, int count, double tau_max,
                                       double sigma_lo = 0.0, double sigma_hi = 2.0) {
  std::uniform_real_distribution<double> sig(sigma_lo, sigma_hi);
  std::uniform_real_distribution<double> tau(0.0, tau_max);
  std::vector<ComplexValue> out;
  while (static_cast<int>(out.size()) < count) {
    const ComplexValue s(sig(rng), tau(rng));
    if (std::abs(s - 1.0) > 0.1) out.push_back(s);
  }
  return out;
}

ComplexValue hurwitz_l(ComplexValue s, const DirichletCharacter& chi) {
  const int q = chi.modulus();
  ComplexValue acc = 0.0;
  for (int a = 1; a <= q; ++a) {
    const ComplexValue c = chi(a);
    if (c == 0.0) continue;
    acc += c * hurwitz_em(s, a, q);
  }
  return acc * std::exp(-s * std::log(static_cast<double>(q)));
}

}  // namespace

CheckResult certified_accuracy() {
  CheckResult r{1, "certified accuracy", true, ""};
  std::mt19937_64 rng(20240601);
  const auto points = strip_points(rng, 200, 5000.0);
  const double deltas[] = {1e-3, 1e-6, 1e-9};
  struct Outcome {
    double worst_ratio = 0.0;
    int failures = 0;
    int uncertified = 0;
  };
  const auto outcomes = parallel_map(points.size(), 0, [&](std::size_t i) {
    Outcome o;
    const ComplexValue ref = zeta_em(points[i]);
    for (double delta : deltas) {
      try {
        const EvalResult e = zeta(points[i], delta);
        const double err = std::abs(e.value - ref);
        o.worst_ratio = std::max(o.worst_ratio, err / delta);
        if (!(err <= delta)) ++o.failures;
        if (!e.certified) ++o.uncertified;
      } catch (const Error&) {
        ++o.failures;
      }
    }
    return o;
  });
  double worst = 0.0;
  int failures = 0;
  int uncertified = 0;
  for (const auto& o : outcomes) {
    worst = std::max(worst, o.worst_ratio);
    failures += o.failures;
    uncertified += o.uncertified;
  }
  r.pass = failures == 0;
  r.detail = "600 evaluations, max |err|/delta = " + fmt("%.3g", worst) +
             ", failures = " + std::to_string(failures) +
             ", uncertified = " + std::to_string(uncertified);
  return r;
}

CheckResult summand_bound_grid() {
  CheckResult r{2, "summand bound", true, ""};
  const std::vector<double> sigmas = {0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0};
  const std::vector<double> taus = {50.0, 1e2, 1e3, 1e4, 1e5};
  const std::vector<double> deltas = {1e-3, 1e-6};
  BenchOptions options;
  options.oracle_tau_limit = 0.0;
  options.workers = 0;
  const auto records = run_bench(sigmas, taus, deltas, options);
  double worst = 0.0;
  int checked = 0;
  for (const auto& rec : records) {
    if (!rec.precondition_ok) continue;
    ++checked;
    const double ratio = static_cast<double>(rec.summands_measured) / rec.summands_bound;
    worst = std::max(worst, ratio);
    if (!(ratio <= 1.0)) r.pass = false;
  }
  r.detail = std::to_string(checked) + " grid points, max measured/S = " + fmt("%.3f", worst);
  return r;
}

CheckResult e_minus_one_neglect() {
  CheckResult r{3, "E_-1 neglect", true, ""};
  const double sigmas[] = {0.0, 0.5, 1.0, 1.5, 2.0};
  const double taus[] = {0.5, 3.0, 10.0, 30.0, 100.0, 300.0, 1000.0, 3000.0, 1e4, 1e5};
  const double deltas[] = {1e-3, 1e-6, 1e-9};
  double worst = 0.0;
  int k = 0;
  for (double sigma : sigmas) {
    for (double tau : taus) {
      const double delta = deltas[k++ % 3];
      const EvalParams p = derive_params(sigma, tau, delta);
      const double mag = std::abs(e_minus_one_sum(ComplexValue(sigma, tau), p));
      worst = std::max(worst, mag / (delta / 3.0));
      if (!(mag <= delta / 3.0)) r.pass = false;
    }
  }
  r.detail = "50 points, max |E_-1|/(delta/3) = " + fmt("%.3g", worst);
  return r;
}

CheckResult truncation_rests() {
  CheckResult r{4, "truncation rests", true, ""};
  std::mt19937_64 rng(77);
  const auto points = strip_points(rng, 30, 5000.0);
  const double deltas[] = {1e-3, 1e-6, 1e-9};
  struct Outcome {
    double worst = 0.0;
    bool ok = true;
  };
  const auto outcomes = parallel_map(points.size(), 0, [&](std::size_t i) {
    const double delta = deltas[i % 3];
    const ComplexValue s = points[i];
    const EvalResult base = zeta(s, delta);
    EvalOptions wide_e;
    wide_e.truncation.e_terms = 4 * base.params.M;
    EvalOptions wide_d;
    wide_d.truncation.d_terms = 3 * base.params.d_terms();
    const double de = std::abs(zeta(s, delta, wide_e).value - base.value);
    const double dd = std::abs(zeta(s, delta, wide_d).value - base.value);
    Outcome o;
    o.worst = std::max(de, dd) / (delta / 3.0);
    o.ok = de < delta / 3.0 && dd < delta / 3.0;
    return o;
  });
  double worst = 0.0;
  for (const auto& o : outcomes) {
    worst = std::max(worst, o.worst);
    r.pass = r.pass && o.ok;
  }
  r.detail = "30 points, max change/(delta/3) = " + fmt("%.3g", worst);
  return r;
}

CheckResult tail_equivalence() {
  CheckResult r{5, "tail-form equivalence", true, ""};
  std::mt19937_64 rng(5);
  const auto points = strip_points(rng, 10, 20.0);
  double worst = 0.0;
  for (const ComplexValue s : points) {
    for (int v = 5; v <= 8; ++v) {
      EvalParams p;
      p.v = v;
      p.N = kSmoothingConstant * std::sqrt(1.0 + (0.5 + s.imag()) / v);
      p.M = static_cast<int>(std::ceil(p.N));
      p.delta = 1e-30;  // run the tail far below the term sizes
      for (long m = 1; m <= 10; ++m) {
        const ComplexValue direct = from_high(direct_prefactored_term(s, m, 1, v, p.N));
        const ComplexValue tail = e1_prefactored_term(s, m, 1, p);
        const double rel = std::abs(tail - direct) / std::abs(direct);
        worst = std::max(worst, rel);
        if (!(rel <= 1e-9)) r.pass = false;
      }
    }
  }
  r.detail = "400 terms, max relative difference = " + fmt("%.3g", worst);
  return r;
}

CheckResult classical_values() {
  CheckResult r{6, "classical values", true, ""};
  const double delta = 1e-8;
  const double pi = std::numbers::pi;
  const double e2 = std::abs(zeta(ComplexValue(2.0, 0.0), delta).value - pi * pi / 6.0);
  const double e0 = std::abs(zeta(ComplexValue(0.0, 0.0), delta).value - (-0.5));
  const double ed = std::abs(zeta_derivative(ComplexValue(0.0, 0.0), 1, delta).value -
                             (-0.5 * std::log(2.0 * pi)));
  const bool values_ok = e2 <= delta && e0 <= delta && ed <= delta;

  const auto fast = find_zeros(0.5, 100.0, delta, 0.05, Engine::zetafast);
  const auto slow = find_zeros(0.5, 100.0, delta, 0.05, Engine::oracle);
  const bool count_ok = fast.size() == 29 && slow.size() == 29;
  double first = std::nan("");
  double match = 0.0;
  if (count_ok) {
    first = fast.front().t;
    for (std::size_t i = 0; i < fast.size(); ++i) {
      match = std::max(match, std::abs(fast[i].t - slow[i].t));
    }
  }
  const bool first_ok = count_ok && std::abs(first - 14.134725) <= 1e-6 &&
                        std::abs(slow.front().t - 14.134725) <= 1e-6;
  const bool match_ok = count_ok && match <= 1e-6;
  r.pass = values_ok && count_ok && first_ok && match_ok;
  r.detail = "errors zeta(2) " + fmt("%.2g", e2) + ", zeta(0) " + fmt("%.2g", e0) +
             ", zeta'(0) " + fmt("%.2g", ed) + "; zeros " + std::to_string(fast.size()) + "/" +
             std::to_string(slow.size()) + ", first " + fmt("%.9f", first) +
             ", engine mismatch " + fmt("%.2g", match);
  return r;
}

CheckResult derivatives() {
  CheckResult r{7, "termwise derivatives", true, ""};
  std::mt19937_64 rng(7);
  // Keep s +- h inside the certified strip.
  const auto points = strip_points(rng, 20, 1000.0, 0.05, 1.95);
  const double delta = 1e-12;
  const double h = 1e-5;
  double worst = 0.0;
  for (const ComplexValue s : points) {
    const ComplexValue d = zeta_derivative(s, 1, delta).value;
    const ComplexValue fd = (zeta(s + h, delta).value - zeta(s - h, delta).value) / (2.0 * h);
    const double rel = std::abs(d - fd) / std::abs(d);
    worst = std::max(worst, rel);
    if (!(rel <= 1e-5)) r.pass = false;
  }
  r.detail = "20 points, max relative difference = " + fmt("%.3g", worst);
  return r;
}

CheckResult l_functions() {
  CheckResult r{8, "L-functions", true, ""};
  const double pi = std::numbers::pi;
  const auto chi4 = character(4, 1);
  const double e1 = std::abs(l_function(ComplexValue(1.0, 0.0), chi4, 1e-8).value - pi / 4.0);
  const double e2 = std::abs(l_function(ComplexValue(2.0, 0.0), chi4, 1e-8).value - kCatalan);
  if (!(e1 <= 1e-8 && e2 <= 1e-8)) r.pass = false;

  const double delta = 1e-9;
  const double tol = std::max(delta, 1e-9);
  std::mt19937_64 rng(8);
  double worst_oracle = 0.0;
  double worst_fe = 0.0;
  int count = 0;
  for (int q : {3, 4, 5, 7}) {
    for (const auto& chi : characters_mod(q)) {
      if (chi.is_principal() || !chi.is_primitive()) continue;
      const auto dual = chi.conjugate();
      const ComplexValue gauss = gauss_sum(chi);
      for (const ComplexValue s : strip_points(rng, 10, 100.0)) {
        ++count;
        const ComplexValue value = l_function(s, chi, delta).value;
        const double err = std::abs(value - hurwitz_l(s, chi));
        worst_oracle = std::max(worst_oracle, err);
        if (!(err <= tol)) r.pass = false;

        // L(s) = G q^{-s} (2pi)^{s-1} Gamma(1-s) L(1-s, chi-bar) sum_mu chi(-mu) e^{i mu pi (1-s)/2}
        const ComplexValue one_minus_s = 1.0 - s;
        const ComplexValue reflected = l_function(one_minus_s, dual, delta).value;
        const ComplexValue lg = log_gamma(one_minus_s);
        const ComplexValue base = gauss * std::exp(-s * std::log(static_cast<double>(q)) +
                                                   (s - 1.0) * std::log(2.0 * pi));
        ComplexValue factor = 0.0;
        for (int mu : {1, -1}) {
          factor += chi(-mu) * std::exp(lg + ComplexValue(0.0, mu * pi / 2.0) * one_minus_s);
        }
        const ComplexValue rhs = base * factor * reflected;
        const double rel = std::abs(value - rhs) / std::abs(value);
        worst_fe = std::max(worst_fe, rel);
        if (!(rel <= 1e-6)) r.pass = false;
      }
    }
  }
  r.detail = "L(1,chi4) err " + fmt("%.2g", e1) + ", L(2,chi4) err " + fmt("%.2g", e2) + "; " +
             std::to_string(count) + " points, max oracle err " + fmt("%.2g", worst_oracle) +
             ", max functional-equation rel " + fmt("%.2g", worst_fe);
  return r;
}

CheckResult parameter_rules() {
  CheckResult r{9, "parameter rules", true, ""};
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> sig(0.0, 2.0);
  std::uniform_real_distribution<double> log_tau(-2.0, 7.0);
  std::uniform_real_distribution<double> log_delta(-15.0, std::log10(kMaxCertifiedDelta));
  double worst_residual = 0.0;
  int sandwich_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const double sigma = sig(rng);
    const double tau = i < 5 ? 0.0 : std::pow(10.0, log_tau(rng));
    const double delta = std::pow(10.0, log_delta(rng));
    const double x0 = solve_x0(sigma, tau, delta);
    worst_residual = std::max(worst_residual, std::abs(order_equation_residual(x0, sigma, tau, delta)));
    const int v = solve_v(sigma, tau, delta);
    const double rhs = order_log_weight(sigma) * std::log(0.5 + v + tau) + std::log(8.0 / delta);
    if (!(rhs <= v && v <= rhs + 1.0)) ++sandwich_failures;
  }
  r.pass = worst_residual <= 1e-9 && sandwich_failures == 0;
  r.detail = "100 inputs, max residual " + fmt("%.2g", worst_residual) +
             ", sandwich failures " + std::to_string(sandwich_failures);
  return r;
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      certified_accuracy, summand_bound_grid, e_minus_one_neglect,
      truncation_rests,   tail_equivalence,   classical_values,
      derivatives,        l_functions,        parameter_rules,
  };
  return checks;
}

std::string format(const CheckResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + "  [" + std::to_string(r.id) + "] " + r.name +
         ": " + r.detail;
}

}  // namespace zetafast::checks
