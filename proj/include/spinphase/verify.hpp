#pragma once

#include <random>
#include <string>
#include <vector>

#include "spinphase/states.hpp"

namespace spinphase {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

enum class VerifyLevel { Fast, Full };

// Runs the numerical identity suite.  Fast covers kernel axioms on both
// phase spaces, the Born rule, closed-form coefficient suites and the sign
// flip; Full adds the integral-route star product at L = 8, lattices
// d = 5, 7 and the NMR route equivalence.  `inject_fault` corrupts one
// lattice kernel entry before checking, as a negative control.
std::vector<CheckResult> run_verification(VerifyLevel level,
                                          bool inject_fault = false);

// Shared random draws (fixed seeds give deterministic suites).
SpinState random_state(HalfInt j, std::mt19937_64& rng);
SpinOperator random_hermitian(HalfInt j, std::mt19937_64& rng);

}  // namespace spinphase
