#pragma once

#include <vector>

#include "zetafast/detail/parallel_map.hpp"
#include "zetafast/types.hpp"

namespace zetafast {

/// Riemann-Siegel theta, Im log Gamma(1/4 + it/2) - (t/2) ln pi. Continuous in
/// t because log_gamma follows the branch that is continuous off the
/// nonpositive real axis.
double rs_theta(double t);

struct HardyValue {
  double z = 0.0;
  double imag_residual = 0.0;  // Im(e^{i theta} zeta(1/2 + it)); zero up to error
};

/// Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + it).
HardyValue hardy_z(double t, double delta, Engine engine = Engine::zetafast);

struct ZeroBracket {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double z_lo = 0.0;
  double z_hi = 0.0;
};

struct LocatedZero {
  ZeroBracket bracket;
  double t = 0.0;
};

/// Sign changes of Z on the grid t0, t0 + step, ..., each refined by
/// bisection to width 1e-8. Pairs of zeros closer than the grid step can be
/// missed. An exact zero at a grid point counts as positive. Grid values
/// are computed on `workers` threads (0 = hardware concurrency); output
/// order does not depend on it.
std::vector<LocatedZero> find_zeros(double t0, double t1, double delta, double grid_step,
                                    Engine engine = Engine::zetafast, unsigned workers = 0);

}  // namespace zetafast
