#pragma once

#include <optional>
#include <string>

#include "spinphase/states.hpp"

namespace spinphase {

// Arithmetic for CLI inputs: numbers, i, pi, sqrt2/sqrt3/sqrt5, sqrt(...),
// parentheses and + - * / with the usual precedence.  "(1-i)/sqrt2" is the
// intended way to write such components.
Complex parse_complex_expr(const std::string& text);

// Same grammar, but the result must be real.
double parse_real_expr(const std::string& text);

// State grammar: "up" | "down" | "css:<theta>,<phi>" | comma-separated
// component list.  "up"/"down" are the j = 1/2 basis states; css needs
// expected_j (defaults to 1/2).  A component list fixes j from its length.
// Unless `allow_unnormalized`, the result must have unit norm to 1e-9.
SpinState parse_state_spec(const std::string& spec,
                           std::optional<HalfInt> expected_j,
                           bool allow_unnormalized = false);

}  // namespace spinphase
