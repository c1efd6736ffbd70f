#pragma once

#include <map>
#include <utility>
#include <vector>

#include "showdown/exp_poly.hpp"

namespace showdown {

// r players still to play (the mover included); best_score is the highest
// final score already on the board.
struct SeqState {
  int remaining = 1;
  double best_score = 0.0;

  void validate() const;  // DomainError if r < 1 or M outside [0, 1]
};

enum class Decision { Stop, Spin };

struct SeqEquilibrium {
  int n = 0;
  std::vector<double> thetas;      // thetas[k] = theta_{k+1}
  std::vector<double> win_matrix;  // win_matrix[m-1] = P(player m of n wins)
};

/// Equilibrium of the sequential game: each player sees every earlier final
/// score. Win-probability functions are built exactly as exponential
/// polynomials and memoized per instance. Not thread-safe; use one instance
/// per thread.
class SequentialSolver {
 public:
  static constexpr int kMaxPlayers = 12;

  // Indifference threshold of the first of n players facing M = 0.
  double theta(int n);

  double policy_threshold(const SeqState& state);
  Decision advise(const SeqState& state, double score);

  // Probability that the m-th of the r remaining players wins when the mover
  // faces best score x >= theta(r).
  const numerics::ExpPoly& win_cdf_poly(int r, int m);
  double win_cdf(int r, int m, double x);

  // Probability that player m of n wins from the start.
  double win_probability(int n, int m);
  SeqEquilibrium win_matrix(int n);

  // Win probability of the mover holding running score `score` and playing
  // the optimal policy from here.
  double current_win_probability(const SeqState& state, double score);

  // |p^{n-1}(theta) - integral_theta^1 p^{n-1}|
  double theta_residual(int n);

 private:
  void check_players(int n) const;
  const numerics::ExpPoly& bust_power(int k);

  std::map<int, double> thetas_;
  std::map<int, numerics::ExpPoly> bust_powers_;
  std::map<std::pair<int, int>, numerics::ExpPoly> cdfs_;
  std::map<std::pair<int, int>, double> probs_;
};

// Convenience wrappers around a fresh solver.
double theta(int n);
double seq_policy(const SeqState& state);
Decision advise(const SeqState& state, double score);
double win_cdf_F(int r, int m, double x);
SeqEquilibrium win_matrix(int n);

enum class Coalition { FirstSecond, FirstThird };

struct CoalitionReport {
  Coalition pair = Coalition::FirstSecond;
  // First-second: Theta_1 of the first player. First-third: rho of the first player.
  double first_threshold = 0.0;
  // First-second only: the second player's threshold after the first busts.
  double second_threshold_after_bust = 0.0;
  double victim_win_prob = 0.0;
  double nash_win_prob = 0.0;  // the victim's probability without the coalition
};

// Root t in [0, 1] of -e^t (2t - 3) + t e^x (x - 1) = e: the second player's
// threshold when the first player finished on x and the pair maximize the
// chance that one of them wins.
double coalition_second_threshold(double x);

CoalitionReport coalition_12();
CoalitionReport coalition_13();

}  // namespace showdown
