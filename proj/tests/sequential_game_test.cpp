#include <cmath>
#include <numbers>

#include "showdown/errors.hpp"
#include "showdown/quadrature.hpp"
#include "showdown/score_model.hpp"
#include "showdown/sequential_game.hpp"
#include "test_util.hpp"

using namespace showdown;

TEST_CASE("theta") {
  SequentialSolver s;
  CHECK(s.theta(1) == 0.0);
  CHECK_NEAR(s.theta(2), 0.5706, 5e-5);
  CHECK_NEAR(s.theta(10), 0.8730, 5e-5);
  for (int n = 2; n <= SequentialSolver::kMaxPlayers; ++n) {
    CAPTURE(n);
    CHECK(s.theta(n) > s.theta(n - 1));
    CHECK(s.theta_residual(n) < 1e-10);
  }
  CHECK_THROWS_AS(s.theta(0), DomainError);
  CHECK_THROWS_AS(s.theta(SequentialSolver::kMaxPlayers + 1), DomainError);
}

TEST_CASE("policy and advice") {
  SequentialSolver s;
  CHECK(s.policy_threshold({4, 0.0}) == s.theta(4));
  CHECK(s.policy_threshold({1, 0.7}) == 0.7);
  CHECK_NEAR(s.policy_threshold({3, 0.2}), 0.6879, 5e-5);

  CHECK(s.advise({2, 0.0}, 0.56) == Decision::Spin);
  CHECK(s.advise({1, 0.4}, 0.41) == Decision::Stop);
  CHECK(s.advise({5, 0.9}, 0.85) == Decision::Spin);
  CHECK(s.advise({2, 0.0}, s.theta(2)) == Decision::Stop);
  CHECK_THROWS_AS(s.advise({2, 0.0}, 1.2), DomainError);
  CHECK_THROWS_AS(s.policy_threshold({0, 0.0}), DomainError);
  CHECK_THROWS_AS(s.policy_threshold({2, 1.5}), DomainError);

  CHECK(seq_policy({3, 0.0}) == theta(3));
  CHECK(advise({3, 0.0}, 0.70) == Decision::Stop);
}

TEST_CASE("win cdf") {
  SequentialSolver s;
  CHECK_NEAR(s.win_cdf(1, 1, 0.5), 0.824361, 1e-6);
  CHECK_NEAR(s.win_cdf(1, 1, 0.5), 1.0 - bust_prob(0.5), 1e-14);

  const double quad_21 = std::exp(0.6) * numerics::integrate_adaptive(
                                              [](double t) { return bust_prob(t); }, 0.6, 1.0);
  CHECK_NEAR(s.win_cdf(2, 1, 0.6), quad_21, 1e-10);

  // one step of the recursion by quadrature
  const double t2 = s.theta(2);
  const double p22 =
      bust_prob(t2) * 1.0 +
      std::exp(t2) * numerics::integrate_adaptive([&](double x) { return s.win_cdf(1, 1, x); },
                                                  t2, 1.0);
  CHECK_NEAR(p22, 0.5750, 5e-5);
  CHECK_NEAR(p22, s.win_probability(2, 2), 1e-12);

  // F_3^2 by nested quadrature
  auto f21 = [](double x) {
    return std::exp(x) *
           numerics::integrate_adaptive([](double t) { return std::pow(bust_prob(t), 1); }, x, 1.0);
  };
  for (double x : {s.theta(3), 0.75, 0.9}) {
    const double nested =
        bust_prob(x) * f21(x) + std::exp(x) * numerics::integrate_adaptive(f21, x, 1.0, 1e-13);
    CHECK_NEAR(s.win_cdf(3, 2, x), nested, 1e-10);
  }

  CHECK_THROWS_AS(s.win_cdf(3, 1, 0.5), DomainError);
  CHECK_THROWS_AS(s.win_cdf(3, 4, 0.9), DomainError);
  CHECK_NEAR(win_cdf_F(2, 1, 0.6), quad_21, 1e-10);
}

TEST_CASE("win matrix") {
  const SeqEquilibrium e2 = win_matrix(2);
  CHECK_NEAR(e2.win_matrix[0], 0.4250, 5e-5);
  CHECK_NEAR(e2.win_matrix[1], 0.5750, 5e-5);
  const SeqEquilibrium e3 = win_matrix(3);
  CHECK_NEAR(e3.win_matrix[0], 0.2859, 5e-5);
  CHECK_NEAR(e3.win_matrix[1], 0.3248, 5e-5);
  CHECK_NEAR(e3.win_matrix[2], 0.3893, 5e-5);
  CHECK_NEAR(win_matrix(10).win_matrix[9], 0.1088, 5e-5);

  SequentialSolver s;
  for (int n = 2; n <= 10; ++n) {
    CAPTURE(n);
    const SeqEquilibrium eq = s.win_matrix(n);
    CHECK(eq.thetas.front() == 0.0);
    double sum = 0.0;
    for (int m = 0; m < n; ++m) {
      CHECK(eq.win_matrix[m] > 0.0);
      CHECK(eq.win_matrix[m] < 1.0);
      if (m > 0) CHECK(eq.win_matrix[m] > eq.win_matrix[m - 1]);
      sum += eq.win_matrix[m];
    }
    CHECK_NEAR(sum, 1.0, 1e-9);
    CHECK_NEAR(s.current_win_probability({n, 0.0}, 0.0), eq.win_matrix[0], 1e-12);
  }
}

TEST_CASE("win probability of the mover") {
  SequentialSolver s;
  // stopping on or below the best score never wins
  CHECK(s.current_win_probability({2, 0.8}, 0.8) == 0.0);
  CHECK_NEAR(s.current_win_probability({2, 0.5}, 0.9), bust_prob(0.9), 1e-15);
  CHECK(s.current_win_probability({1, 0.5}, 0.6) == 1.0);
}

TEST_CASE("coalition second threshold") {
  // independent scan for the root at x = 0
  auto g0 = [](double t) { return -std::exp(t) * (2.0 * t - 3.0) - t - std::numbers::e; };
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g0(mid) > 0.0 ? lo : hi) = mid;
  }
  CHECK_NEAR(coalition_second_threshold(0.0), lo, 1e-12);
  CHECK_NEAR(coalition_second_threshold(0.0), theta(2), 1e-9);

  const double x = 0.5;
  const double t = coalition_second_threshold(x);
  const double lhs = -std::exp(t) * (2.0 * t - 3.0) + t * std::exp(x) * (x - 1.0);
  CHECK(std::abs(lhs - std::numbers::e) < 1e-10);
  CHECK_THROWS_AS(coalition_second_threshold(1.5), DomainError);
}

TEST_CASE("coalitions") {
  const CoalitionReport c12 = coalition_12();
  CHECK(c12.pair == Coalition::FirstSecond);
  CHECK_NEAR(c12.first_threshold, 0.63386, 1e-4);
  CHECK_NEAR(c12.victim_win_prob, 0.3867, 5e-4);
  CHECK_NEAR(c12.nash_win_prob, 0.3893, 5e-5);
  CHECK(c12.victim_win_prob < c12.nash_win_prob);
  CHECK_NOTHROW(coalition_second_threshold(c12.first_threshold));

  const CoalitionReport c13 = coalition_13();
  CHECK(c13.pair == Coalition::FirstThird);
  CHECK_NEAR(c13.first_threshold, 0.75017, 1e-4);
  CHECK_NEAR(c13.victim_win_prob, 0.32262, 5e-5);
  CHECK_NEAR(c13.nash_win_prob, 0.3248, 5e-5);
  CHECK(c13.victim_win_prob < c13.nash_win_prob);
  CHECK_NEAR(SequentialSolver().win_probability(2, 1), 0.4250, 5e-5);
}
