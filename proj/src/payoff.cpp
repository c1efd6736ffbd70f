#include "showdown/payoff.hpp"

#include <utility>

#include "showdown/quadrature.hpp"

namespace showdown {

PayoffSpec PayoffSpec::from_function(numerics::ScalarFn h, double h0) {
  PayoffSpec spec;
  spec.h = std::move(h);
  spec.h0 = h0;
  return spec;
}

PayoffSpec PayoffSpec::from_exp_poly(numerics::ExpPoly f, double h0) {
  PayoffSpec spec;
  spec.h = [f](double x) { return f(x); };
  spec.h0 = h0;
  spec.closed_form = std::move(f);
  return spec;
}

PayoffSpec PayoffSpec::from_piecewise(numerics::PiecewisePoly f, double h0) {
  PayoffSpec spec;
  spec.h = [f](double x) { return f(x); };
  spec.h0 = h0;
  spec.closed_form = std::move(f);
  return spec;
}

double PayoffSpec::integral(double a, double b) const {
  if (const auto* f = std::get_if<numerics::ExpPoly>(&closed_form)) return f->integral(a, b);
  if (const auto* f = std::get_if<numerics::PiecewisePoly>(&closed_form)) return f->integral(a, b);
  return numerics::integrate_adaptive(h, a, b, tol);
}

}  // namespace showdown
