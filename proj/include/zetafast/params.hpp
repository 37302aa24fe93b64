#pragma once

#include "zetafast/types.hpp"

namespace zetafast {

inline constexpr double kLambda = 3.151;
inline constexpr double kSmoothingConstant = 1.11;
inline constexpr double kMaxCertifiedDelta = 0.05;

/// max((1 - sigma)/2, 0), the weight of the log term in the order equation.
double order_log_weight(double sigma);

/// Left side minus right side of the order equation
///   x - max((1-sigma)/2, 0) ln(1/2 + x + tau) = ln(8/delta).
double order_equation_residual(double x, double sigma, double tau, double delta);

/// Unique root x0 > 5 of the order equation, by bisection to 1e-9 followed
/// by three Newton steps. In heuristic mode delta may exceed 0.05; when no
/// root lies above 5 the result is clamped to 5.
double solve_x0(double sigma, double tau, double delta, Mode mode = Mode::certified);

/// ceil(x0), never below 5.
int solve_v(double sigma, double tau, double delta, Mode mode = Mode::certified);

/// v from solve_v, N = 1.11 sqrt(1 + (1/2 + tau)/v), M = ceil(N), lambda = 3.151.
/// tau is taken by absolute value. The certified flag is set only for
/// 0 <= sigma <= 2 and delta <= 0.05; the s != 1 condition is the caller's.
EvalParams derive_params(double sigma, double tau, double delta,
                         Mode mode = Mode::certified);

/// tau > (5/3)(3/2 + ln(8/delta)).
bool speed_precondition(double tau, double delta);

/// S = 2 + 8 sqrt(1 + ln(8/delta) + max((1-sigma)/2, 0) ln(2 tau)) sqrt(tau).
/// Throws PreconditionError unless speed_precondition holds.
double summand_bound(double sigma, double tau, double delta);

/// The same expression without the precondition check; NaN where undefined.
double summand_bound_formula(double sigma, double tau, double delta);

}  // namespace zetafast
