#include "showdown/root_finding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "showdown/errors.hpp"

namespace showdown::numerics {
namespace {

double checked_eval(const ScalarFn& f, double x) {
  const double fx = f(x);
  if (!std::isfinite(fx)) {
    std::ostringstream msg;
    msg << "solve_root: non-finite function value " << fx << " at x = " << x;
    throw DomainError(msg.str());
  }
  return fx;
}

bool same_sign(double a, double b) { return (a < 0.0) == (b < 0.0); }

}  // namespace

RootResult find_root(const ScalarFn& f, Bracket bracket, double tol) {
  if (!(tol > 0.0)) throw DomainError("solve_root: tolerance must be positive");
  if (!(bracket.lo < bracket.hi)) {
    std::ostringstream msg;
    msg << "solve_root: empty bracket [" << bracket.lo << ", " << bracket.hi << "]";
    throw BracketError(msg.str());
  }

  double lo = bracket.lo;
  double hi = bracket.hi;
  double f_lo = checked_eval(f, lo);
  double f_hi = checked_eval(f, hi);

  RootResult result;
  if (f_lo == 0.0 || f_hi == 0.0) {
    result.x = f_lo == 0.0 ? lo : hi;
    result.lo = result.hi = result.x;
    return result;
  }
  if (same_sign(f_lo, f_hi)) {
    std::ostringstream msg;
    msg << "solve_root: no sign change on [" << lo << ", " << hi << "] (f = " << f_lo << ", "
        << f_hi << ")";
    throw BracketError(msg.str());
  }

  constexpr int kMaxIterations = 400;
  while (hi - lo > tol && result.iterations < kMaxIterations) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double f_mid = checked_eval(f, mid);
    ++result.iterations;
    if (f_mid == 0.0) {
      result.x = mid;
      result.lo = result.hi = mid;
      result.best_residuals.push_back(0.0);
      return result;
    }
    if (same_sign(f_mid, f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
    result.best_residuals.push_back(std::min(std::abs(f_lo), std::abs(f_hi)));
  }

  double best_x = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  double best_f = std::abs(f_lo) <= std::abs(f_hi) ? f_lo : f_hi;

  // Secant polish; accepted only if it lands inside the bracket and improves |f|.
  const double secant = lo - f_lo * (hi - lo) / (f_hi - f_lo);
  if (std::isfinite(secant) && secant > lo && secant < hi) {
    const double f_secant = f(secant);
    if (std::isfinite(f_secant) && std::abs(f_secant) < std::abs(best_f)) {
      best_x = secant;
      best_f = f_secant;
    }
  }

  result.x = best_x;
  result.residual = best_f;
  result.lo = lo;
  result.hi = hi;
  return result;
}

std::pair<double, double> solve_root_2d(const CurvePair& curves, Bracket x_range, double tol) {
  double y_dec = 0.0;
  double y_inc = 0.0;
  auto gap = [&](double x) {
    try {
      y_dec = curves.decreasing(x);
      y_inc = curves.increasing(x);
    } catch (const Error& e) {
      std::ostringstream msg;
      msg << "solve_root_2d: inner curve solve failed at x = " << x << ": " << e.what();
      throw NumericalError(msg.str());
    }
    const double d = y_dec - y_inc;
    if (std::isnan(d)) {
      std::ostringstream msg;
      msg << "solve_root_2d: undefined curve gap at x = " << x << " (y_dec = " << y_dec
          << ", y_inc = " << y_inc << ")";
      throw NumericalError(msg.str());
    }
    // Sign is all the bisection needs; clamp infinities.
    if (std::isinf(d)) return d > 0 ? 1.0 : -1.0;
    return d;
  };

  double x = 0.0;
  try {
    x = solve_root(gap, x_range, tol);
  } catch (const BracketError& e) {
    throw NumericalError(std::string("solve_root_2d: curves do not cross in the x range: ") +
                         e.what());
  }
  // Recompute at the returned x so the reported y matches it.
  gap(x);
  const double y = std::isfinite(y_inc) ? y_inc : y_dec;
  return {x, y};
}

}  // namespace showdown::numerics
