#include "showdown/simultaneous_game.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "showdown/errors.hpp"
#include "showdown/root_finding.hpp"
#include "showdown/stopping.hpp"

namespace showdown {

using numerics::PiecewisePoly;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// The advantaged curves degenerate on the box edges.
constexpr double kEdge = 1e-6;

void check_players(int n) {
  if (n < 2) {
    std::ostringstream msg;
    msg << "the simultaneous game needs n >= 2, got " << n;
    throw DomainError(msg.str());
  }
}

// 1 + e^x (y - 1): rival CDF at y for threshold x <= y
double cdf_above(double x, double y) { return 1.0 + std::exp(x) * (y - 1.0); }

// n e^x (c^{n-1} - y p(x)^{n-1}) - (1 - c^n), c = cdf_above(x, y); the b curve
// is its zero set, and it rises through zero on y in [x, 1]
double b_numerator(int n, double x, double y) {
  const double c = cdf_above(x, y);
  return n * std::exp(x) * (std::pow(c, n - 1) - y * std::pow(bust_prob(x), n - 1)) -
         (1.0 - std::pow(c, n));
}

}  // namespace

std::vector<double> SymmetricEquilibrium::profile() const {
  std::vector<double> out(n, threshold);
  if (advantaged_threshold) out.back() = *advantaged_threshold;
  return out;
}

double alpha_residual(int n, double x) {
  const double p = bust_prob(x);
  return std::pow(p, n - 1) - (1.0 - std::pow(p, n)) / (n * std::exp(x));
}

double gamma_residual(int n, double x) {
  return std::pow(bust_prob(x), n - 1) - 1.0 / (1.0 + std::exp(x) * (n - 1));
}

double advantaged_residual_a(int n, double x, double y) {
  const double ex = std::exp(x);
  const double c = cdf_above(x, y);
  const double num = std::exp(y) * (std::pow(c, n) - 1.0) + n * ex;
  const double den = n * ex * bust_prob(y) * (1.0 + ex * (n - 2 + x));
  return std::pow(bust_prob(x), n - 2) - num / den;
}

double advantaged_residual_b(int n, double x, double y) {
  const double c = cdf_above(x, y);
  return std::pow(bust_prob(x), n - 1) -
         std::exp(-x) * (n * std::exp(x) * std::pow(c, n - 1) + std::pow(c, n) - 1.0) / (n * y);
}

double advantaged_curve_a(int n, double x) {
  check_players(n);
  auto f = [n, x](double y) { return advantaged_residual_a(n, x, y); };
  if (f(1.0) <= 0.0) return kInf;
  constexpr double kFloor = 1e-9;
  if (f(kFloor) > 0.0) return -kInf;
  return numerics::solve_root(f, {kFloor, 1.0});
}

double advantaged_curve_b(int n, double x) {
  check_players(n);
  auto f = [n, x](double y) { return b_numerator(n, x, y); };
  return numerics::solve_root(f, {x, 1.0});
}

double alpha(int n) {
  check_players(n);
  return numerics::solve_root([n](double x) { return alpha_residual(n, x); }, {0.0, 1.0});
}

double gamma(int n) {
  check_players(n);
  return numerics::solve_root([n](double x) { return gamma_residual(n, x); }, {0.0, 1.0});
}

std::pair<double, double> epsilon_delta(int n) {
  check_players(n);
  const numerics::CurvePair curves{
      [n](double x) { return advantaged_curve_a(n, x); },
      [n](double x) { return advantaged_curve_b(n, x); },
  };
  return numerics::solve_root_2d(curves, {kEdge, 1.0 - kEdge});
}

SymmetricEquilibrium equilibrium(Variant variant, int n) {
  check_players(n);
  SymmetricEquilibrium eq;
  eq.variant = variant;
  eq.n = n;
  switch (variant) {
    case Variant::External: {
      eq.threshold = alpha(n);
      eq.tie_prob = std::pow(bust_prob(eq.threshold), n);
      eq.win_prob = (1.0 - eq.tie_prob) / n;
      eq.residuals = {alpha_residual(n, eq.threshold)};
      break;
    }
    case Variant::ZeroSum: {
      eq.threshold = gamma(n);
      eq.tie_prob = std::pow(bust_prob(eq.threshold), n);
      eq.win_prob = (1.0 - eq.tie_prob) / n;
      eq.residuals = {gamma_residual(n, eq.threshold)};
      break;
    }
    case Variant::Advantaged: {
      const auto [e, d] = epsilon_delta(n);
      const double pe = bust_prob(e);
      const double adv = std::pow(pe, n - 1) * bust_prob(d) +
                         std::exp(d) * (1.0 - std::pow(cdf_above(e, d), n)) / (std::exp(e) * n);
      eq.threshold = e;
      eq.advantaged_threshold = d;
      eq.advantaged_win_prob = adv;
      eq.win_prob = (1.0 - adv) / (n - 1);
      eq.tie_prob = std::pow(pe, n - 1) * bust_prob(d);
      eq.residuals = {advantaged_residual_a(n, e, d), advantaged_residual_b(n, e, d)};
      break;
    }
  }
  return eq;
}

ProfileOutcome win_probabilities(std::span<const Threshold> thresholds,
                                 std::optional<int> advantaged) {
  const int n = static_cast<int>(thresholds.size());
  check_players(n);
  if (advantaged && (*advantaged < 0 || *advantaged >= n)) {
    throw DomainError("advantaged index outside the player range");
  }
  std::vector<PiecewisePoly> cdfs;
  cdfs.reserve(n);
  for (Threshold t : thresholds) cdfs.push_back(score_cdf_piecewise(t));

  ProfileOutcome out;
  out.advantaged = advantaged;
  out.tie_prob = 1.0;
  for (int i = 0; i < n; ++i) {
    const double u = thresholds[i].value();
    std::vector<PiecewisePoly> rivals;
    for (int j = 0; j < n; ++j) {
      if (j != i) rivals.push_back(cdfs[j]);
    }
    out.win_probs.push_back(std::exp(u) * numerics::piecewise_product_integral(rivals, u, 1.0));
    out.tie_prob *= bust_prob(u);
  }
  return out;
}

ProfileOutcome win_probabilities(std::span<const double> thresholds,
                                 std::optional<int> advantaged) {
  std::vector<Threshold> ts;
  ts.reserve(thresholds.size());
  for (double t : thresholds) ts.emplace_back(t);
  return win_probabilities(std::span<const Threshold>(ts), advantaged);
}

double two_player_win(double x, double y) {
  const Threshold tx(x);
  const Threshold ty(y);
  (void)tx;
  (void)ty;
  if (x <= y) {
    return 0.5 * std::exp(x) *
           (std::exp(y) * (y - 1.0) * (-2.0 * x + y + 1.0) - 2.0 * x + 2.0);
  }
  return -0.5 * std::exp(x) * (x - 1.0) * ((x - 1.0) * std::exp(y) + 2.0);
}

std::vector<double> payoff_map(Variant variant, const ProfileOutcome& outcome) {
  const int n = static_cast<int>(outcome.win_probs.size());
  std::vector<double> pay = outcome.win_probs;
  switch (variant) {
    case Variant::External:
      break;
    case Variant::ZeroSum:
      for (int i = 0; i < n; ++i) {
        const double p = outcome.win_probs[i];
        pay[i] = p - (1.0 - p - outcome.tie_prob) / (n - 1);
      }
      break;
    case Variant::Advantaged:
      pay[outcome.advantaged.value_or(n - 1)] += outcome.tie_prob;
      break;
  }
  return pay;
}

ProfileOutcome evaluate_profile(Variant variant, std::span<const double> thresholds) {
  std::optional<int> adv;
  if (variant == Variant::Advantaged) adv = static_cast<int>(thresholds.size()) - 1;
  ProfileOutcome out = win_probabilities(thresholds, adv);
  out.payoffs = payoff_map(variant, out);
  return out;
}

PayoffSpec stop_payoff_function(Variant variant, int player, std::span<const double> rivals) {
  const int n = static_cast<int>(rivals.size()) + 1;
  check_players(n);
  if (player < 0 || player >= n) throw DomainError("player index outside the player range");

  PiecewisePoly all_below = PiecewisePoly::constant(1.0);
  double all_bust = 1.0;
  for (double u : rivals) {
    const Threshold t(u);
    all_below = all_below * score_cdf_piecewise(t);
    all_bust *= bust_prob(t);
  }

  switch (variant) {
    case Variant::External:
      return PayoffSpec::from_piecewise(std::move(all_below), 0.0);
    case Variant::ZeroSum: {
      const double share = 1.0 / (n - 1);
      return PayoffSpec::from_piecewise(all_below.affine(n * share, -share),
                                        -(1.0 - all_bust) * share);
    }
    case Variant::Advantaged:
      return PayoffSpec::from_piecewise(std::move(all_below), player == n - 1 ? all_bust : 0.0);
  }
  throw ContractViolation("unknown variant");
}

double best_response(Variant variant, int player, std::span<const double> rivals) {
  return optimal_threshold(stop_payoff_function(variant, player, rivals));
}

}  // namespace showdown
