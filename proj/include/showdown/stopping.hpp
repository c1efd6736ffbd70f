#pragma once

#include "showdown/payoff.hpp"

namespace showdown {

struct StoppingSolution {
  double kappa = 0.0;            // optimal threshold
  double expected_payoff = 0.0;  // value of the game started from 0
  double h_tilde_at_kappa = 0.0;
};

// Payoff of spinning exactly once more from x, then stopping:
// h0 * x + integral_x^1 h.
double h_tilde(const PayoffSpec& spec, double x);

// Samples h on a 256-point grid of (0, 1] plus h0 at 0; throws
// ContractViolation if it decreases by more than a relative 1e-9.
void check_monotone(const PayoffSpec& spec);

// inf { x in [0, 1] : h(x) >= h_tilde(x) }, located by bisection on the sign,
// so jumps in h are fine.
double optimal_threshold(const PayoffSpec& spec);

StoppingSolution expected_payoff(const PayoffSpec& spec);

// Value of continuing to play optimally from running score x.
double continuation_value(const PayoffSpec& spec, const StoppingSolution& sol, double x);
double continuation_value(const PayoffSpec& spec, double x);

}  // namespace showdown
