#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "showdown/payoff.hpp"
#include "showdown/score_model.hpp"

namespace showdown {

// External: a third party pays the winner, nobody is paid on a draw.
// ZeroSum: the losers each pay the winner 1/(n-1); a draw pays nothing.
// Advantaged: one designated player (the last) also wins the draw.
enum class Variant { External, ZeroSum, Advantaged };

struct ProfileOutcome {
  std::vector<double> win_probs;
  double tie_prob = 0.0;  // everybody busts
  std::vector<double> payoffs;
  std::optional<int> advantaged;  // 0-based index that collects the draw
};

struct SymmetricEquilibrium {
  Variant variant = Variant::External;
  int n = 0;
  double threshold = 0.0;                  // alpha, gamma or epsilon
  std::optional<double> advantaged_threshold;  // delta
  double win_prob = 0.0;                   // each player, or each non-advantaged one
  std::optional<double> advantaged_win_prob;
  double tie_prob = 0.0;
  std::vector<double> residuals;  // of the defining equations at the solution

  // Per-player thresholds; the advantaged player is last.
  std::vector<double> profile() const;
};

// Equations whose roots are the symmetric thresholds. Each is negative at
// 0 and positive at 1.
double alpha_residual(int n, double x);
double gamma_residual(int n, double x);

// The pair (epsilon, delta) solves both of these with delta > epsilon.
// `a` is the advantaged player's indifference, `b` the others'.
double advantaged_residual_a(int n, double x, double y);
double advantaged_residual_b(int n, double x, double y);

// The curves y(x) cut out by each equation in the unit box. Curve a returns
// +inf / -inf where it has left the box through the top / bottom.
double advantaged_curve_a(int n, double x);
double advantaged_curve_b(int n, double x);

double alpha(int n);
double gamma(int n);
std::pair<double, double> epsilon_delta(int n);

SymmetricEquilibrium equilibrium(Variant variant, int n);

// Exact win and draw probabilities for independent threshold players.
ProfileOutcome win_probabilities(std::span<const Threshold> thresholds,
                                 std::optional<int> advantaged = std::nullopt);
ProfileOutcome win_probabilities(std::span<const double> thresholds,
                                 std::optional<int> advantaged = std::nullopt);

// Win probability of the first of two players, thresholds x and y.
double two_player_win(double x, double y);

std::vector<double> payoff_map(Variant variant, const ProfileOutcome& outcome);

// Win and draw probabilities plus variant payoffs; Advantaged uses the last player.
ProfileOutcome evaluate_profile(Variant variant, std::span<const double> thresholds);

// Payoff to `player` (0-based, out of rivals.size() + 1) for stopping on each
// score, with the rivals' thresholds in player order (the player omitted).
PayoffSpec stop_payoff_function(Variant variant, int player, std::span<const double> rivals);

double best_response(Variant variant, int player, std::span<const double> rivals);

}  // namespace showdown
