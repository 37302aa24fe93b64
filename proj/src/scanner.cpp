#include "zetafast/scanner.hpp"

#include <cmath>
#include <numbers>

#include "zetafast/engine.hpp"
#include "zetafast/oracle.hpp"
#include "zetafast/special.hpp"

namespace zetafast {

double rs_theta(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("rs_theta needs t > 0");
  const ComplexValue lg = log_gamma(ComplexValue(0.25, 0.5 * t));
  return lg.imag() - 0.5 * t * std::log(std::numbers::pi);
}

HardyValue hardy_z(double t, double delta, Engine engine) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("hardy_z needs t > 0");
  const ComplexValue s(0.5, t);
  const ComplexValue zeta_value =
      engine == Engine::oracle ? zeta_em(s) : zeta(s, delta).value;
  const ComplexValue rotated = std::polar(1.0, rs_theta(t)) * zeta_value;
  return {rotated.real(), rotated.imag()};
}

std::vector<LocatedZero> find_zeros(double t0, double t1, double delta, double grid_step,
                                    Engine engine, unsigned workers) {
  if (!(t0 > 0.0) || !(t1 > t0)) throw DomainError("find_zeros needs 0 < t0 < t1");
  if (!(grid_step > 0.0) || grid_step > 0.25) {
    throw DomainError("find_zeros needs 0 < grid_step <= 0.25");
  }

  std::vector<double> grid;
  const auto steps = static_cast<std::size_t>(std::floor((t1 - t0) / grid_step));
  for (std::size_t k = 0; k <= steps; ++k) grid.push_back(t0 + static_cast<double>(k) * grid_step);
  if (grid.back() < t1) grid.push_back(t1);

  auto z_at = [&](double t) { return hardy_z(t, delta, engine).z; };
  const auto values = parallel_map(grid.size(), workers, [&](std::size_t k) { return z_at(grid[k]); });
  auto negative = [](double z) { return z < 0.0; };

  std::vector<ZeroBracket> brackets;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    if (negative(values[k]) != negative(values[k + 1])) {
      brackets.push_back({grid[k], grid[k + 1], values[k], values[k + 1]});
    }
  }

  constexpr double kWidth = 1e-8;
  return parallel_map(brackets.size(), workers, [&](std::size_t i) {
    ZeroBracket b = brackets[i];
    double lo = b.t_lo;
    double hi = b.t_hi;
    const bool lo_negative = negative(b.z_lo);
    while (hi - lo > kWidth) {
      const double mid = 0.5 * (lo + hi);
      (negative(z_at(mid)) == lo_negative ? lo : hi) = mid;
    }
    return LocatedZero{b, 0.5 * (lo + hi)};
  });
}

}  // namespace zetafast
