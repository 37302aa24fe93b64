#pragma once

#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "zetafast/types.hpp"

namespace zetafast {

/// One measured evaluation against the summand bound S.
struct BenchRecord {
  double sigma = 0.0;
  double tau = 0.0;
  double delta = 0.0;
  std::int64_t summands_measured = 0;
  double summands_bound = std::numeric_limits<double>::quiet_NaN();
  bool precondition_ok = false;
  double wall_time = 0.0;  // seconds
  double abs_error_vs_oracle = std::numeric_limits<double>::quiet_NaN();
};

struct BenchOptions {
  double oracle_tau_limit = 1e5;  // above this the reference is skipped
  unsigned workers = 1;
};

/// Runs the certified evaluator on the cartesian grid sigma x tau x delta, in
/// that nesting order.
std::vector<BenchRecord> run_bench(std::span<const double> sigmas, std::span<const double> taus,
                                   std::span<const double> deltas, const BenchOptions& options = {});

/// Header plus one row per record, fields in declaration order; a missing
/// oracle error is an empty field.
void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace zetafast
