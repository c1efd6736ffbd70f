#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace showdown::numerics {

using ScalarFn = std::function<double(double)>;

inline constexpr double kDefaultTol = 1e-12;

/// Closed search interval [lo, hi] for a scalar root.
struct Bracket {
  double lo = 0.0;
  double hi = 1.0;

  double width() const { return hi - lo; }
};

struct RootResult {
  double x = 0.0;
  double residual = 0.0;  // f(x)
  double lo = 0.0;        // final bracket
  double hi = 0.0;
  int iterations = 0;
  // min(|f(lo)|, |f(hi)|) after every bisection step
  std::vector<double> best_residuals;
};

/// Bisection to a bracket narrower than `tol`, then one secant step inside the
/// final bracket; the point with the smallest |f| is returned.
///
/// Throws BracketError when f(lo) and f(hi) share a sign (or lo >= hi) and
/// DomainError when f returns a non-finite value.
RootResult find_root(const ScalarFn& f, Bracket bracket, double tol = kDefaultTol);

inline double solve_root(const ScalarFn& f, Bracket bracket, double tol = kDefaultTol) {
  return find_root(f, bracket, tol).x;
}

// Two curves in the unit box, each given as y = curve(x). A curve may return
// +inf / -inf when it leaves the box above / below at that x.
struct CurvePair {
  ScalarFn decreasing;  // y(x) non-increasing in x
  ScalarFn increasing;  // y(x) non-decreasing in x
};

/// Intersection of a decreasing and an increasing curve: outer bisection on x
/// over the sign of decreasing(x) - increasing(x). Inner failures are rethrown
/// as NumericalError carrying the x at which they happened.
std::pair<double, double> solve_root_2d(const CurvePair& curves, Bracket x_range,
                                        double tol = kDefaultTol);

}  // namespace showdown::numerics
