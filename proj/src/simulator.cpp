#include "showdown/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "showdown/errors.hpp"
#include "showdown/sequential_game.hpp"

namespace showdown {

StrategyProfile StrategyProfile::fixed(const std::vector<double>& thresholds) {
  StrategyProfile profile;
  for (double t : thresholds) {
    profile.players.push_back({Strategy::Kind::Fixed, Threshold(t).value()});
  }
  return profile;
}

StrategyProfile StrategyProfile::sequential_policy(int n) {
  SequentialSolver solver;
  StrategyProfile profile;
  for (int i = 0; i < n; ++i) {
    profile.players.push_back({Strategy::Kind::SequentialPolicy, solver.theta(n - i)});
  }
  return profile;
}

double SimReport::win_rate(int player) const {
  return static_cast<double>(wins.at(player)) / static_cast<double>(trials);
}

double SimReport::draw_rate() const {
  return static_cast<double>(draws) / static_cast<double>(trials);
}

double SimReport::standard_error(double p, std::uint64_t trials) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

PlayOutcome play_once(Mode mode, Variant variant, const StrategyProfile& profile,
                      RandomStream& rng) {
  const int n = profile.size();
  double best = 0.0;
  int leader = -1;
  bool tied = false;
  for (int i = 0; i < n; ++i) {
    const Strategy& s = profile.players[i];
    double tau = s.threshold;
    if (mode == Mode::Sequential && s.kind == Strategy::Kind::SequentialPolicy) {
      tau = std::max(tau, best);
    }
    const double score = sample_score(Threshold(tau), rng);
    if (score == 0.0) continue;
    if (score > best) {
      best = score;
      leader = i;
      tied = false;
    } else if (score == best) {
      tied = true;
    }
  }

  PlayOutcome out;
  if (leader < 0) {
    if (variant == Variant::Advantaged) {
      out.winner = n - 1;
    } else {
      out.draw = true;
    }
  } else if (tied) {
    out.positive_tie = true;
  } else {
    out.winner = leader;
  }
  return out;
}

SimReport run(Mode mode, Variant variant, const StrategyProfile& profile, const SimConfig& config) {
  const int n = profile.size();
  if (n < 1) throw DomainError("simulation needs at least one player");
  if (config.trials < 1 || config.chunk_count < 1) {
    std::ostringstream msg;
    msg << "simulation needs trials >= 1 and chunk_count >= 1 (got " << config.trials << ", "
        << config.chunk_count << ")";
    throw DomainError(msg.str());
  }

  const std::uint32_t chunks = config.chunk_count;
  std::vector<SimReport> partial(chunks);
  auto run_chunk = [&](std::uint32_t c) {
    const auto begin = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(config.trials) * c / chunks);
    const auto end = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(config.trials) * (c + 1) / chunks);
    SimReport& r = partial[c];
    r.wins.assign(n, 0);
    RandomStream rng(config.seed, c);
    for (std::uint64_t t = begin; t < end; ++t) {
      const PlayOutcome o = play_once(mode, variant, profile, rng);
      if (o.winner >= 0) {
        ++r.wins[o.winner];
      } else if (o.draw) {
        ++r.draws;
      } else {
        ++r.positive_ties;
      }
    }
  };

  unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, chunks);
  if (workers == 1) {
    for (std::uint32_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint32_t c = w; c < chunks; c += workers) run_chunk(c);
      });
    }
    for (auto& th : pool) th.join();
  }

  SimReport report;
  report.n = n;
  report.trials = config.trials;
  report.wins.assign(n, 0);
  for (const SimReport& r : partial) {
    for (int i = 0; i < n; ++i) report.wins[i] += r.wins[i];
    report.draws += r.draws;
    report.positive_ties += r.positive_ties;
  }
  return report;
}

}  // namespace showdown
