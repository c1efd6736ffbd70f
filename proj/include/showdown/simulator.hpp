#pragma once

#include <cstdint>
#include <vector>

#include "showdown/random_stream.hpp"
#include "showdown/simultaneous_game.hpp"

namespace showdown {

// Sequential: players move in order and see earlier final scores.
// Simultaneous: every player spins blind.
enum class Mode { Sequential, Simultaneous };

struct Strategy {
  enum class Kind { Fixed, SequentialPolicy };
  Kind kind = Kind::Fixed;
  // Fixed: the greed threshold. SequentialPolicy: theta_r for this seat,
  // raised to the best score on the board at play time.
  double threshold = 0.0;
};

struct StrategyProfile {
  std::vector<Strategy> players;

  static StrategyProfile fixed(const std::vector<double>& thresholds);
  // Equilibrium policy of the sequential game for n seats.
  static StrategyProfile sequential_policy(int n);

  int size() const { return static_cast<int>(players.size()); }
};

struct SimConfig {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::uint32_t chunk_count = 1;  // chunk c draws from stream c
  unsigned threads = 0;           // 0: hardware concurrency
};

struct PlayOutcome {
  int winner = -1;  // -1 for a draw or a positive tie
  bool draw = false;
  bool positive_tie = false;  // two equal best positive scores
};

struct SimReport {
  int n = 0;
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> wins;
  std::uint64_t draws = 0;
  std::uint64_t positive_ties = 0;

  double win_rate(int player) const;
  double draw_rate() const;
  // sqrt(p (1 - p) / trials)
  static double standard_error(double p, std::uint64_t trials);
  double win_stderr(int player) const { return standard_error(win_rate(player), trials); }
  double draw_stderr() const { return standard_error(draw_rate(), trials); }

  bool operator==(const SimReport&) const = default;
};

PlayOutcome play_once(Mode mode, Variant variant, const StrategyProfile& profile,
                      RandomStream& rng);

// Deterministic in (mode, variant, profile, seed, trials, chunk_count); the
// thread count only changes speed.
SimReport run(Mode mode, Variant variant, const StrategyProfile& profile, const SimConfig& config);

}  // namespace showdown
