#pragma once

#include <functional>
#include <variant>

#include "showdown/exp_poly.hpp"
#include "showdown/piecewise_poly.hpp"
#include "showdown/root_finding.hpp"

namespace showdown {

/// Payoff for stopping with final score x.
///
/// `h` gives the value for x in (0, 1]; `h0` is the value after a bust, which
/// need not be the limit of h at 0+. When `closed_form` holds an ExpPoly or a
/// PiecewisePoly, `h` evaluates it and integrals are exact; otherwise they go
/// through adaptive quadrature at `tol`.
struct PayoffSpec {
  using ClosedForm = std::variant<std::monostate, numerics::ExpPoly, numerics::PiecewisePoly>;

  numerics::ScalarFn h;
  double h0 = 0.0;
  bool monotone = true;  // caller asserts h is non-decreasing
  ClosedForm closed_form;
  double tol = numerics::kDefaultTol;

  static PayoffSpec from_function(numerics::ScalarFn h, double h0);
  static PayoffSpec from_exp_poly(numerics::ExpPoly f, double h0);
  static PayoffSpec from_piecewise(numerics::PiecewisePoly f, double h0);

  bool exact() const { return !std::holds_alternative<std::monostate>(closed_form); }

  // h0 at x == 0, h(x) elsewhere
  double value(double x) const { return x == 0.0 ? h0 : h(x); }

  // integral of h over [a, b] within [0, 1]
  double integral(double a, double b) const;
};

}  // namespace showdown
