#include "showdown/sequential_game.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

#include "showdown/errors.hpp"
#include "showdown/payoff.hpp"
#include "showdown/root_finding.hpp"
#include "showdown/score_model.hpp"
#include "showdown/stopping.hpp"

namespace showdown {

using numerics::ExpPoly;

namespace {

// Slack for x slightly below theta_r from rounding in callers.
constexpr double kThetaSlack = 1e-12;

// e^x (A(1) - A(x)) for the antiderivative A of f: e^x integral_x^1 f
ExpPoly exp_times_tail_integral(const ExpPoly& f) {
  const ExpPoly anti = f.antiderivative();
  const ExpPoly tail = ExpPoly::constant(anti.eval(1.0L)) - anti;
  return ExpPoly::term(0, 1) * tail;
}

// integral_a^1 of 1 + e^t (t - 1)
double bust_tail_integral(double a) {
  return 1.0 - std::numbers::e - a - std::exp(a) * (a - 2.0);
}

}  // namespace

void SeqState::validate() const {
  if (remaining < 1 || !(best_score >= 0.0 && best_score <= 1.0)) {
    std::ostringstream msg;
    msg << "invalid state: remaining = " << remaining << ", best score = " << best_score;
    throw DomainError(msg.str());
  }
}

void SequentialSolver::check_players(int n) const {
  if (n < 1 || n > kMaxPlayers) {
    std::ostringstream msg;
    msg << "player count " << n << " outside [1, " << kMaxPlayers << "]";
    throw DomainError(msg.str());
  }
}

const ExpPoly& SequentialSolver::bust_power(int k) {
  auto it = bust_powers_.find(k);
  if (it == bust_powers_.end()) {
    it = bust_powers_.emplace(k, ExpPoly::bust_prob().pow(k)).first;
  }
  return it->second;
}

double SequentialSolver::theta(int n) {
  check_players(n);
  if (n == 1) return 0.0;
  if (auto it = thetas_.find(n); it != thetas_.end()) return it->second;

  const ExpPoly& p = bust_power(n - 1);
  const ExpPoly anti = p.antiderivative();
  const long double total = anti.eval(1.0L);
  auto residual = [&](double x) {
    const long double lx = x;
    return static_cast<double>(p.eval(lx) - (total - anti.eval(lx)));
  };
  const double x = numerics::solve_root(residual, {0.0, 1.0});
  thetas_.emplace(n, x);
  return x;
}

double SequentialSolver::theta_residual(int n) {
  const double x = theta(n);
  const ExpPoly& p = bust_power(n - 1);
  return std::abs(p(x) - p.integral(x, 1.0));
}

double SequentialSolver::policy_threshold(const SeqState& state) {
  state.validate();
  return std::max(theta(state.remaining), state.best_score);
}

Decision SequentialSolver::advise(const SeqState& state, double score) {
  if (!(score >= 0.0 && score <= 1.0)) {
    std::ostringstream msg;
    msg << "score " << score << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  return score >= policy_threshold(state) ? Decision::Stop : Decision::Spin;
}

const ExpPoly& SequentialSolver::win_cdf_poly(int r, int m) {
  check_players(r);
  if (m < 1 || m > r) {
    std::ostringstream msg;
    msg << "player index " << m << " outside [1, " << r << "]";
    throw DomainError(msg.str());
  }
  if (auto it = cdfs_.find({r, m}); it != cdfs_.end()) return it->second;

  ExpPoly f;
  if (m == 1) {
    f = exp_times_tail_integral(bust_power(r - 1));
  } else {
    const ExpPoly prev = win_cdf_poly(r - 1, m - 1);
    f = ExpPoly::bust_prob() * prev + exp_times_tail_integral(prev);
  }
  return cdfs_.emplace(std::make_pair(r, m), std::move(f)).first->second;
}

double SequentialSolver::win_cdf(int r, int m, double x) {
  const double lower = theta(r);
  if (!(x >= lower - kThetaSlack && x <= 1.0)) {
    std::ostringstream msg;
    msg << "win_cdf(" << r << ", " << m << "): x = " << x << " outside [theta_" << r << " = "
        << lower << ", 1]";
    throw DomainError(msg.str());
  }
  return win_cdf_poly(r, m)(x);
}

double SequentialSolver::win_probability(int n, int m) {
  check_players(n);
  if (m < 1 || m > n) {
    std::ostringstream msg;
    msg << "player index " << m << " outside [1, " << n << "]";
    throw DomainError(msg.str());
  }
  if (auto it = probs_.find({n, m}); it != probs_.end()) return it->second;

  const double t = theta(n);
  double p;
  if (m == 1) {
    p = std::exp(t) * std::pow(bust_prob(t), n - 1);
  } else {
    p = bust_prob(t) * win_probability(n - 1, m - 1) +
        std::exp(t) * win_cdf_poly(n - 1, m - 1).integral(t, 1.0);
  }
  probs_.emplace(std::make_pair(n, m), p);
  return p;
}

SeqEquilibrium SequentialSolver::win_matrix(int n) {
  check_players(n);
  SeqEquilibrium eq;
  eq.n = n;
  for (int k = 1; k <= n; ++k) eq.thetas.push_back(theta(k));
  for (int m = 1; m <= n; ++m) eq.win_matrix.push_back(win_probability(n, m));
  return eq;
}

double SequentialSolver::current_win_probability(const SeqState& state, double score) {
  const double kappa = policy_threshold(state);
  const int r = state.remaining;
  if (score >= kappa) {
    return score > state.best_score ? std::pow(bust_prob(score), r - 1) : 0.0;
  }
  // final score lands in (kappa, 1] with density e^{kappa - score}
  return std::exp(-score) * win_cdf(r, 1, kappa);
}

double theta(int n) { return SequentialSolver().theta(n); }
double seq_policy(const SeqState& state) { return SequentialSolver().policy_threshold(state); }
Decision advise(const SeqState& state, double score) {
  return SequentialSolver().advise(state, score);
}
double win_cdf_F(int r, int m, double x) { return SequentialSolver().win_cdf(r, m, x); }
SeqEquilibrium win_matrix(int n) { return SequentialSolver().win_matrix(n); }

double coalition_second_threshold(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream msg;
    msg << "coalition_second_threshold: x = " << x << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  const double c = std::exp(x) * (x - 1.0);
  auto g = [c](double t) { return -std::exp(t) * (2.0 * t - 3.0) + t * c - std::numbers::e; };
  try {
    return numerics::solve_root(g, {0.0, 1.0});
  } catch (const BracketError& err) {
    std::ostringstream msg;
    msg << "coalition_second_threshold: no root in [0, 1] at x = " << x << " (" << err.what()
        << ")";
    throw DomainError(msg.str());
  }
}

CoalitionReport coalition_12() {
  // Probability that the first or second player wins when the first stops on x.
  auto memo = std::make_shared<std::map<double, double>>();
  auto p3 = [memo](double x) {
    if (auto it = memo->find(x); it != memo->end()) return it->second;
    const double t = coalition_second_threshold(x);
    const double v = bust_prob(t) * bust_prob(x) + std::exp(t) * bust_tail_integral(t);
    memo->emplace(x, v);
    return v;
  };
  const PayoffSpec spec = PayoffSpec::from_function(p3, p3(0.0));
  const StoppingSolution sol = expected_payoff(spec);

  CoalitionReport report;
  report.pair = Coalition::FirstSecond;
  report.first_threshold = sol.kappa;
  report.second_threshold_after_bust = coalition_second_threshold(0.0);
  report.victim_win_prob = 1.0 - sol.expected_payoff;
  report.nash_win_prob = SequentialSolver().win_probability(3, 3);
  return report;
}

CoalitionReport coalition_13() {
  SequentialSolver solver;
  const double theta2 = solver.theta(2);
  const ExpPoly second_wins = solver.win_cdf_poly(2, 1);
  const double second_first = solver.win_probability(2, 1);

  // Below theta_2 the second player ignores the first's score, so the
  // second player's chance is flat there.
  auto h = [&](double x) { return 1.0 - second_wins(std::max(x, theta2)); };
  const PayoffSpec spec = PayoffSpec::from_function(h, 1.0 - second_first);
  const double rho = optimal_threshold(spec);

  CoalitionReport report;
  report.pair = Coalition::FirstThird;
  report.first_threshold = rho;
  report.second_threshold_after_bust = theta2;
  report.victim_win_prob =
      bust_prob(rho) * second_first + std::exp(rho) * second_wins.integral(rho, 1.0);
  report.nash_win_prob = solver.win_probability(3, 2);
  return report;
}

}  // namespace showdown
