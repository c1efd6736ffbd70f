#include "showdown/stopping.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "showdown/errors.hpp"

namespace showdown {
namespace {

constexpr int kMonotoneGrid = 256;
constexpr double kThresholdWidth = 1e-14;

// h - h_tilde; non-decreasing for monotone h
double gain(const PayoffSpec& spec, double x) {
  return spec.value(x) - h_tilde(spec, x);
}

}  // namespace

double h_tilde(const PayoffSpec& spec, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "h_tilde: x = " << x << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  return spec.h0 * x + spec.integral(x, 1.0);
}

void check_monotone(const PayoffSpec& spec) {
  double prev = spec.h0;
  double prev_x = 0.0;
  for (int i = 1; i <= kMonotoneGrid; ++i) {
    const double x = static_cast<double>(i) / kMonotoneGrid;
    const double hx = spec.h(x);
    const double slack = 1e-9 * std::max(1.0, std::abs(prev));
    if (!(hx >= prev - slack)) {
      std::ostringstream msg;
      msg << "payoff decreases: h(" << prev_x << ") = " << prev << " > h(" << x << ") = " << hx;
      throw ContractViolation(msg.str());
    }
    prev = hx;
    prev_x = x;
  }
}

double optimal_threshold(const PayoffSpec& spec) {
  check_monotone(spec);
  if (gain(spec, 0.0) >= 0.0) return 0.0;
  // gain(1) = h(1) - h0 >= 0 by monotonicity
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > kThresholdWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (gain(spec, mid) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

StoppingSolution expected_payoff(const PayoffSpec& spec) {
  StoppingSolution sol;
  sol.kappa = optimal_threshold(spec);
  sol.h_tilde_at_kappa = h_tilde(spec, sol.kappa);
  sol.expected_payoff = (sol.h_tilde_at_kappa - spec.h0) * std::exp(sol.kappa) + spec.h0;
  return sol;
}

double continuation_value(const PayoffSpec& spec, const StoppingSolution& sol, double x) {
  if (x < sol.kappa) {
    return (sol.h_tilde_at_kappa - spec.h0) * std::exp(sol.kappa - x) + spec.h0;
  }
  return h_tilde(spec, x);
}

double continuation_value(const PayoffSpec& spec, double x) {
  return continuation_value(spec, expected_payoff(spec), x);
}

}  // namespace showdown
