#pragma once

#include "showdown/root_finding.hpp"

namespace showdown::numerics {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  int intervals = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// The interval with the largest error estimate is halved until the summed
/// estimate is below `tol` (absolute). A panel's estimate is the larger of
/// the G7/K15 gap and the gap between K15 on the panel and on its halves. Intervals whose estimate has hit the
/// floating-point floor are not split further. Jump discontinuities are
/// handled by refinement, so piecewise-smooth integrands converge.
///
/// Throws DomainError for a > b and AccuracyError when the panel budget
/// (20000 panels, 60 halvings deep) runs out before reaching `tol`.
QuadratureResult integrate_adaptive_detailed(const ScalarFn& f, double a, double b,
                                             double tol = kDefaultTol);

inline double integrate_adaptive(const ScalarFn& f, double a, double b,
                                 double tol = kDefaultTol) {
  return integrate_adaptive_detailed(f, a, b, tol).value;
}

}  // namespace showdown::numerics
