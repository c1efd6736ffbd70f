#pragma once

#include "showdown/payoff.hpp"
#include "showdown/piecewise_poly.hpp"
#include "showdown/random_stream.hpp"

namespace showdown {

/// Greed threshold: keep spinning while the running score is below tau.
class Threshold {
 public:
  explicit Threshold(double tau);  // DomainError unless 0 <= tau <= 1
  double value() const { return tau_; }

 private:
  double tau_;
};

// 1 + e^x (x - 1), accurate near 0. Defined for any real x.
double bust_prob(double x);
inline double bust_prob(Threshold tau) { return bust_prob(tau.value()); }

// e^tau (1 - tau)
double survival_prob(Threshold tau);

// P(final score <= x)
double score_cdf(Threshold tau, double x);

// score_cdf restricted to [0, 1]
numerics::PiecewisePoly score_cdf_piecewise(Threshold tau);

// One player's turn: at least one spin, continue while the sum is below tau,
// 0 if the sum passes 1.
double sample_score(Threshold tau, RandomStream& rng);

// E[h(score)] = bust_prob * h0 + e^tau * integral_tau^1 h
double expect(const PayoffSpec& h, Threshold tau);

// E[h(score) | no bust]; DomainError at tau = 1
double expect_conditional(const PayoffSpec& h, Threshold tau);

struct ScoreDistribution {
  Threshold tau;

  double bust() const { return bust_prob(tau); }
  double cdf(double x) const { return score_cdf(tau, x); }
  double sample(RandomStream& rng) const { return sample_score(tau, rng); }
};

}  // namespace showdown
