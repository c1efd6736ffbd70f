#include "showdown/score_model.hpp"

#include <cmath>
#include <sstream>

#include "showdown/errors.hpp"

namespace showdown {

Threshold::Threshold(double tau) : tau_(tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    std::ostringstream msg;
    msg << "threshold " << tau << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

double bust_prob(double x) {
  if (std::abs(x) < 0.1) {
    // sum_{m>=2} (m-1) x^m / m!
    double term = x;  // x^m / m! at m = 1
    double sum = 0.0;
    for (int m = 2; m < 30; ++m) {
      term *= x / m;
      sum += (m - 1) * term;
    }
    return sum;
  }
  return x * std::exp(x) - std::expm1(x);
}

double survival_prob(Threshold tau) {
  const double t = tau.value();
  return std::exp(t) * (1.0 - t);
}

double score_cdf(Threshold tau, double x) {
  const double t = tau.value();
  if (x < 0.0) return 0.0;
  if (x <= t) return bust_prob(t);
  if (x <= 1.0) return 1.0 + std::exp(t) * (x - 1.0);
  return 1.0;
}

numerics::PiecewisePoly score_cdf_piecewise(Threshold tau) {
  using numerics::Polynomial;
  const double t = tau.value();
  const double bust = bust_prob(t);
  const Polynomial rising = Polynomial::linear(bust, std::exp(t));
  if (t == 0.0) return numerics::PiecewisePoly({0.0, 1.0}, {rising});
  if (t == 1.0) return numerics::PiecewisePoly::constant(1.0);
  return numerics::PiecewisePoly({0.0, t, 1.0}, {Polynomial::constant(bust), rising});
}

double sample_score(Threshold tau, RandomStream& rng) {
  const double t = tau.value();
  double s = 0.0;
  do {
    s += rng.next_uniform();
  } while (s < t);
  return s > 1.0 ? 0.0 : s;
}

double expect(const PayoffSpec& h, Threshold tau) {
  const double t = tau.value();
  return bust_prob(t) * h.h0 + std::exp(t) * h.integral(t, 1.0);
}

double expect_conditional(const PayoffSpec& h, Threshold tau) {
  const double t = tau.value();
  if (t == 1.0) throw DomainError("expect_conditional: no score survives at tau = 1");
  return h.integral(t, 1.0) / (1.0 - t);
}

}  // namespace showdown
