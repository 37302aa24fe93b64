#include "zetafast/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "zetafast/engine.hpp"
#include "zetafast/oracle.hpp"
#include "zetafast/params.hpp"
#include "zetafast/scanner.hpp"

namespace zetafast {

namespace {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::vector<BenchRecord> run_bench(std::span<const double> sigmas, std::span<const double> taus,
                                   std::span<const double> deltas, const BenchOptions& options) {
  struct Point {
    double sigma, tau, delta;
  };
  std::vector<Point> points;
  for (double sigma : sigmas)
    for (double tau : taus)
      for (double delta : deltas) points.push_back({sigma, tau, delta});

  return parallel_map(points.size(), options.workers, [&](std::size_t i) {
    const Point& pt = points[i];
    BenchRecord rec;
    rec.sigma = pt.sigma;
    rec.tau = pt.tau;
    rec.delta = pt.delta;
    rec.precondition_ok = speed_precondition(pt.tau, pt.delta);
    rec.summands_bound = summand_bound_formula(pt.sigma, pt.tau, pt.delta);

    const ComplexValue s(pt.sigma, pt.tau);
    const auto start = std::chrono::steady_clock::now();
    const EvalResult r = zeta(s, pt.delta);
    const auto stop = std::chrono::steady_clock::now();
    rec.wall_time = std::chrono::duration<double>(stop - start).count();
    rec.summands_measured = r.summands_used;
    if (std::abs(pt.tau) <= options.oracle_tau_limit) {
      rec.abs_error_vs_oracle = std::abs(r.value - zeta_em(s));
    }
    return rec;
  });
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "sigma,tau,delta,summands_measured,summands_bound,precondition_ok,wall_time,"
         "abs_error_vs_oracle\n";
  for (const auto& r : records) {
    out << format_double(r.sigma) << ',' << format_double(r.tau) << ','
        << format_double(r.delta) << ',' << r.summands_measured << ','
        << format_double(r.summands_bound) << ',' << (r.precondition_ok ? "true" : "false")
        << ',' << format_double(r.wall_time) << ','
        << (std::isnan(r.abs_error_vs_oracle) ? std::string() : format_double(r.abs_error_vs_oracle))
        << '\n';
  }
}

}  // namespace zetafast
