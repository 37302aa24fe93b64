#pragma once

#include <functional>
#include <string>
#include <vector>

namespace zetafast::checks {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Certified accuracy against the Euler-Maclaurin reference.
CheckResult certified_accuracy();
/// Measured summands versus the bound S wherever the speed precondition holds.
CheckResult summand_bound_grid();
/// The omitted mu = -1 series stays below delta/3.
CheckResult e_minus_one_neglect();
/// Extending either truncation moves the result by less than delta/3.
CheckResult truncation_rests();
/// Binomial-tail terms versus the direct binomial form at 60 digits.
CheckResult tail_equivalence();
/// Basel, zeta(0), zeta'(0), the first zero and the zero count below 100.
CheckResult classical_values();
/// Termwise derivatives versus central differences.
CheckResult derivatives();
/// L-functions: closed forms, Hurwitz assembly, functional equation.
CheckResult l_functions();
/// Order-equation residual and the sandwich on v.
CheckResult parameter_rules();

using Check = std::function<CheckResult()>;
const std::vector<Check>& all_checks();

/// "PASS  <id> <name>: <detail>" or "FAIL ...".
std::string format(const CheckResult& r);

}  // namespace zetafast::checks
