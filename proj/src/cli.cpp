#include "showdown/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "showdown/sequential_game.hpp"
#include "showdown/simulator.hpp"
#include "showdown/simultaneous_game.hpp"

namespace showdown::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kTableMaxN = 10;
// Rival thresholds typed with 4 decimals still count as the equilibrium.
constexpr double kEquilibriumMatch = 5e-5;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(const std::string& s, double& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  const char* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(t.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_int(const std::string& s, std::int64_t& out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  const char* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(t.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string format_cell(const Cell& cell, int decimals) {
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  const double v = std::get<double>(cell);
  if (std::isnan(v)) return "";
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << v;
  return os.str();
}

Variant variant_of(Game game) {
  switch (game) {
    case Game::External:
      return Variant::External;
    case Game::ZeroSum:
      return Variant::ZeroSum;
    case Game::Advantaged:
      return Variant::Advantaged;
    case Game::Sequential:
      break;
  }
  throw UsageError("game i has no simultaneous variant");
}

void check_n(Game game, int n) {
  const int lo = game == Game::Sequential ? 1 : 2;
  if (n < lo || n > SequentialSolver::kMaxPlayers) {
    std::ostringstream msg;
    msg << "--n must be in [" << lo << ", " << SequentialSolver::kMaxPlayers << "] for game "
        << game_id(game) << ", got " << n;
    throw UsageError(msg.str());
  }
}

// Seat order for an advantaged game: profile position k holds seat order[k],
// with the advantaged seat moved last.
std::vector<int> advantaged_order(int n, int advantaged) {
  const int adv = advantaged == 0 ? n : advantaged;
  if (adv < 1 || adv > n) {
    std::ostringstream msg;
    msg << "--advantaged must be in [1, " << n << "], got " << advantaged;
    throw UsageError(msg.str());
  }
  std::vector<int> order;
  for (int s = 0; s < n; ++s) {
    if (s != adv - 1) order.push_back(s);
  }
  order.push_back(adv - 1);
  return order;
}

json table_to_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t c = 0; c < row.size() && c < table.header.size(); ++c) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              obj[table.header[c]] = std::isnan(v) ? json(nullptr) : json(v);
            } else {
              obj[table.header[c]] = v;
            }
          },
          row[c]);
    }
    rows.push_back(obj);
  }
  return rows;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw UsageError("unknown format '" + s + "' (expected table, csv or json)");
}

Game parse_game(const std::string& s) {
  if (s == "i") return Game::Sequential;
  if (s == "ii.1") return Game::External;
  if (s == "ii.2") return Game::ZeroSum;
  if (s == "ii.3") return Game::Advantaged;
  throw UsageError("unknown game '" + s + "' (expected i, ii.1, ii.2 or ii.3)");
}

std::string game_id(Game game) {
  switch (game) {
    case Game::Sequential:
      return "i";
    case Game::External:
      return "ii.1";
    case Game::ZeroSum:
      return "ii.2";
    case Game::Advantaged:
      return "ii.3";
  }
  return "?";
}

std::vector<double> parse_thresholds(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    if (!parse_double(item, v) || !(v >= 0.0 && v <= 1.0)) {
      throw UsageError("malformed threshold '" + trim(item) + "' (need a real in [0, 1])");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty threshold list");
  return out;
}

std::string render_csv(const Table& table) {
  std::ostringstream os;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    os << (c ? "," : "") << table.header[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_cell(row[c], 6);
    os << '\n';
  }
  return os.str();
}

Table parse_csv(const std::string& text) {
  Table table;
  std::stringstream ss(text);
  std::string line;
  bool first = true;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && !first) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (first) {
      table.header = fields;
      first = false;
      continue;
    }
    std::vector<Cell> row;
    for (const auto& f : fields) {
      std::int64_t i = 0;
      double d = 0.0;
      if (f.empty()) {
        row.emplace_back(kNaN);
      } else if (parse_int(f, i)) {
        row.emplace_back(i);
      } else if (parse_double(f, d)) {
        row.emplace_back(d);
      } else {
        row.emplace_back(f);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_plain(const Table& table, int decimals) {
  std::vector<std::size_t> width(table.header.size(), 0);
  std::vector<std::vector<std::string>> text;
  for (std::size_t c = 0; c < table.header.size(); ++c) width[c] = table.header[c].size();
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line.push_back(format_cell(row[c], decimals));
      if (c < width.size()) width[c] = std::max(width[c], line.back().size());
    }
    text.push_back(std::move(line));
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(c < width.size() ? width[c] : 0)) << cells[c];
    }
    os << '\n';
  };
  emit(table.header);
  for (const auto& line : text) emit(line);
  return os.str();
}

std::string render(const Table& table, Format format) {
  switch (format) {
    case Format::Table:
      return render_plain(table);
    case Format::Csv:
      return render_csv(table);
    case Format::Json:
      return dump(table_to_json(table));
  }
  return "";
}

Table table_data(int k) {
  Table t;
  switch (k) {
    case 1: {
      SequentialSolver solver;
      t.header = {"n", "theta"};
      for (int m = 1; m <= kTableMaxN; ++m) t.header.push_back("P" + std::to_string(m));
      for (int n = 1; n <= kTableMaxN; ++n) {
        const SeqEquilibrium eq = solver.win_matrix(n);
        std::vector<Cell> row{std::int64_t{n}, eq.thetas.back()};
        for (int m = 1; m <= kTableMaxN; ++m) row.emplace_back(m <= n ? eq.win_matrix[m - 1] : kNaN);
        t.rows.push_back(std::move(row));
      }
      break;
    }
    case 2:
      t.header = {"n", "alpha", "P"};
      for (int n = 2; n <= kTableMaxN; ++n) {
        const auto eq = equilibrium(Variant::External, n);
        t.rows.push_back({std::int64_t{n}, eq.threshold, eq.win_prob});
      }
      break;
    case 3:
      throw UsageError(
          "table 3 is out of scope: its values are quoted from prior work and have no formulas "
          "to recompute");
    case 4:
      t.header = {"n", "gamma", "P_tie", "P"};
      for (int n = 2; n <= kTableMaxN; ++n) {
        const auto eq = equilibrium(Variant::ZeroSum, n);
        t.rows.push_back({std::int64_t{n}, eq.threshold, eq.tie_prob, eq.win_prob});
      }
      break;
    case 5:
      t.header = {"n", "epsilon", "delta", "P_A", "P_N"};
      for (int n = 2; n <= kTableMaxN; ++n) {
        const auto eq = equilibrium(Variant::Advantaged, n);
        t.rows.push_back({std::int64_t{n}, eq.threshold, *eq.advantaged_threshold,
                          *eq.advantaged_win_prob, eq.win_prob});
      }
      break;
    default:
      throw UsageError("unknown table " + std::to_string(k) + " (expected 1, 2, 4 or 5)");
  }
  return t;
}

std::string cmd_table(int k, Format format) { return render(table_data(k), format); }

std::string cmd_equilibrium(Game game, int n, Format format) {
  check_n(game, n);
  json j;
  j["game"] = game_id(game);
  j["n"] = n;
  std::vector<double> thresholds;
  std::vector<double> wins;
  std::vector<double> payoffs;
  double tie = 0.0;

  if (game == Game::Sequential) {
    SequentialSolver solver;
    const SeqEquilibrium eq = solver.win_matrix(n);
    thresholds.assign(eq.thetas.rbegin(), eq.thetas.rend());
    wins = eq.win_matrix;
    payoffs = wins;
    std::vector<double> residuals;
    for (int k = 1; k <= n; ++k) residuals.push_back(solver.theta_residual(k));
    j["thresholds"] = thresholds;
    j["win_probs"] = wins;
    j["tie_prob"] = tie;
    j["payoffs"] = payoffs;
    j["residuals"] = residuals;
    j["thetas"] = eq.thetas;
  } else {
    const Variant v = variant_of(game);
    const SymmetricEquilibrium eq = equilibrium(v, n);
    thresholds = eq.profile();
    const ProfileOutcome out = evaluate_profile(v, thresholds);
    wins = out.win_probs;
    payoffs = out.payoffs;
    tie = out.tie_prob;
    j["thresholds"] = thresholds;
    j["win_probs"] = wins;
    j["tie_prob"] = tie;
    j["payoffs"] = payoffs;
    j["residuals"] = eq.residuals;
    switch (v) {
      case Variant::External:
        j["alpha"] = eq.threshold;
        j["win_prob"] = eq.win_prob;
        break;
      case Variant::ZeroSum:
        j["gamma"] = eq.threshold;
        j["win_prob"] = eq.win_prob;
        break;
      case Variant::Advantaged:
        j["epsilon"] = eq.threshold;
        j["delta"] = *eq.advantaged_threshold;
        j["p_adv"] = *eq.advantaged_win_prob;
        j["p_non"] = eq.win_prob;
        break;
    }
  }
  if (format == Format::Json) return dump(j);

  Table t;
  t.header = {"player", "threshold", "win_prob", "payoff"};
  for (int i = 0; i < n; ++i) {
    t.rows.push_back({std::int64_t{i + 1}, thresholds[i], wins[i], payoffs[i]});
  }
  t.rows.push_back({std::string("tie"), kNaN, tie, kNaN});
  return render(t, format);
}

std::string cmd_simulate(const SimulateArgs& args) {
  check_n(args.game, args.n);
  const int n = args.n;
  const bool nash = trim(args.thresholds) == "nash";
  std::vector<double> seats;
  if (!nash) {
    seats = parse_thresholds(args.thresholds);
    if (static_cast<int>(seats.size()) != n) {
      std::ostringstream msg;
      msg << "--thresholds has " << seats.size() << " values, --n is " << n;
      throw UsageError(msg.str());
    }
  }

  const Mode mode = args.game == Game::Sequential ? Mode::Sequential : Mode::Simultaneous;
  const Variant variant =
      args.game == Game::Sequential ? Variant::External : variant_of(args.game);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (variant == Variant::Advantaged) order = advantaged_order(n, args.advantaged);

  StrategyProfile profile;
  std::vector<double> analytic_wins(n);
  double analytic_draw = 0.0;
  std::vector<double> used(n, kNaN);  // thresholds by seat

  if (args.game == Game::Sequential && nash) {
    profile = StrategyProfile::sequential_policy(n);
    SequentialSolver solver;
    for (int i = 0; i < n; ++i) {
      analytic_wins[i] = solver.win_probability(n, i + 1);
      used[i] = profile.players[i].threshold;
    }
  } else {
    std::vector<double> ordered(n);
    if (nash) {
      ordered = equilibrium(variant, n).profile();
    } else {
      for (int k = 0; k < n; ++k) ordered[k] = seats[order[k]];
    }
    profile = StrategyProfile::fixed(ordered);
    const ProfileOutcome out = evaluate_profile(variant, ordered);
    for (int k = 0; k < n; ++k) {
      analytic_wins[order[k]] = out.win_probs[k];
      used[order[k]] = ordered[k];
    }
    analytic_draw = out.tie_prob;
    if (variant == Variant::Advantaged) {
      analytic_wins[order.back()] += analytic_draw;
      analytic_draw = 0.0;
    }
  }

  SimConfig config;
  config.trials = args.trials;
  config.seed = args.seed;
  config.chunk_count = args.chunks;
  const SimReport report = run(mode, variant, profile, config);

  auto z_score = [](double est, double analytic, double se) {
    return se > 0.0 ? (est - analytic) / se : kNaN;
  };

  Table t;
  t.header = {"outcome", "count", "estimate", "stderr", "analytic", "z"};
  std::vector<double> est(n), se(n), z(n);
  std::vector<std::int64_t> counts(n);
  for (int k = 0; k < n; ++k) {
    const int seat = order[k];
    counts[seat] = static_cast<std::int64_t>(report.wins[k]);
    est[seat] = report.win_rate(k);
    se[seat] = report.win_stderr(k);
    z[seat] = z_score(est[seat], analytic_wins[seat], se[seat]);
  }
  for (int s = 0; s < n; ++s) {
    t.rows.push_back({"player " + std::to_string(s + 1), counts[s], est[s], se[s],
                      analytic_wins[s], z[s]});
  }
  const double draw_est = report.draw_rate();
  const double draw_se = report.draw_stderr();
  t.rows.push_back({std::string("draw"), static_cast<std::int64_t>(report.draws), draw_est,
                    draw_se, analytic_draw, z_score(draw_est, analytic_draw, draw_se)});
  const double tie_est = static_cast<double>(report.positive_ties) / report.trials;
  t.rows.push_back({std::string("positive_tie"), static_cast<std::int64_t>(report.positive_ties),
                    tie_est, SimReport::standard_error(tie_est, report.trials), 0.0, kNaN});

  if (args.format != Format::Json) return render(t, args.format);

  json j;
  j["game"] = game_id(args.game);
  j["n"] = n;
  j["thresholds"] = used;
  j["win_probs"] = analytic_wins;
  j["tie_prob"] = analytic_draw;
  j["payoffs"] = analytic_wins;
  j["residuals"] = z;
  j["trials"] = args.trials;
  j["seed"] = args.seed;
  j["chunks"] = args.chunks;
  j["wins"] = counts;
  j["draws"] = report.draws;
  j["positive_ties"] = report.positive_ties;
  j["estimates"] = est;
  j["stderr"] = se;
  j["draw_estimate"] = draw_est;
  j["draw_stderr"] = draw_se;
  return dump(j);
}

std::string cmd_best_response(Game game, int n, int player, const std::string& rivals,
                              int advantaged, Format format) {
  if (game == Game::Sequential) {
    throw UsageError("best-response applies to the simultaneous games ii.1, ii.2 and ii.3");
  }
  check_n(game, n);
  if (player < 1 || player > n) {
    std::ostringstream msg;
    msg << "--player must be in [1, " << n << "], got " << player;
    throw UsageError(msg.str());
  }
  const std::vector<double> r = parse_thresholds(rivals);
  if (static_cast<int>(r.size()) != n - 1) {
    std::ostringstream msg;
    msg << "--rivals needs " << n - 1 << " values, got " << r.size();
    throw UsageError(msg.str());
  }

  const Variant v = variant_of(game);
  int adv_seat = n - 1;
  if (v == Variant::Advantaged) adv_seat = advantaged_order(n, advantaged).back();
  // The payoff depends on the rivals only through their joint CDF, so only
  // the advantaged/not distinction of the player matters.
  const int internal = (v == Variant::Advantaged && player - 1 == adv_seat) ? n - 1 : 0;
  const double br = best_response(v, internal, r);

  // Equilibrium thresholds by seat.
  const SymmetricEquilibrium eq = equilibrium(v, n);
  std::vector<double> eq_seats(n, eq.threshold);
  if (eq.advantaged_threshold) eq_seats[adv_seat] = *eq.advantaged_threshold;
  bool at_equilibrium = true;
  for (int s = 0, k = 0; s < n; ++s) {
    if (s == player - 1) continue;
    if (std::abs(r[k++] - eq_seats[s]) > kEquilibriumMatch) at_equilibrium = false;
  }

  json j;
  j["game"] = game_id(game);
  j["n"] = n;
  j["player"] = player;
  j["rivals"] = r;
  j["best_response"] = br;
  Table t;
  t.header = {"quantity", "value"};
  t.rows.push_back({std::string("best_response"), br});
  if (at_equilibrium) {
    j["equilibrium_threshold"] = eq_seats[player - 1];
    j["gap"] = std::abs(br - eq_seats[player - 1]);
    t.rows.push_back({std::string("equilibrium"), eq_seats[player - 1]});
    t.rows.push_back({std::string("gap"), std::abs(br - eq_seats[player - 1])});
  }
  if (format == Format::Json) return dump(j);
  if (format == Format::Table) return render_plain(t, 6);
  return render(t, format);
}

std::string cmd_coalition(const std::string& pair, Format format) {
  CoalitionReport rep;
  int victim = 0;
  if (pair == "12") {
    rep = coalition_12();
    victim = 3;
  } else if (pair == "13") {
    rep = coalition_13();
    victim = 2;
  } else {
    throw UsageError("coalition pair '" + pair +
                     "' is not covered: only pairs 12 and 13 of the 3-player game are analyzed");
  }
  json j;
  j["game"] = "i";
  j["n"] = 3;
  j["pair"] = pair;
  j["victim"] = victim;
  j["first_threshold"] = rep.first_threshold;
  j["second_threshold_after_bust"] = rep.second_threshold_after_bust;
  j["victim_win_prob"] = rep.victim_win_prob;
  j["nash_win_prob"] = rep.nash_win_prob;
  j["delta"] = rep.victim_win_prob - rep.nash_win_prob;
  if (format == Format::Json) return dump(j);

  Table t;
  t.header = {"quantity", "value"};
  t.rows.push_back({std::string("first_threshold"), rep.first_threshold});
  t.rows.push_back({std::string("second_threshold_after_bust"), rep.second_threshold_after_bust});
  t.rows.push_back({std::string("victim_player"), std::int64_t{victim}});
  t.rows.push_back({std::string("victim_win_prob"), rep.victim_win_prob});
  t.rows.push_back({std::string("nash_win_prob"), rep.nash_win_prob});
  t.rows.push_back({std::string("delta"), rep.victim_win_prob - rep.nash_win_prob});
  if (format == Format::Table) return render_plain(t, 5);
  return render(t, format);
}

Table figure_data(int id, int grid) {
  if (grid < 2) throw UsageError("--grid must be at least 2");
  auto node = [grid](int k) { return static_cast<double>(k) / (grid - 1); };
  Table t;
  switch (id) {
    case 1: {
      const double a = alpha(2);
      const double eq = two_player_win(a, a);
      t.header = {"y", "p1", "equilibrium"};
      for (int k = 0; k < grid; ++k) {
        const double y = node(k);
        t.rows.push_back({y, two_player_win(a, y), eq});
      }
      break;
    }
    case 2: {
      const double g = gamma(3);
      t.header = {"x", "y", "payoff1"};
      for (int i = 0; i < grid; ++i) {
        for (int k = 0; k < grid; ++k) {
          const std::vector<double> profile{g, node(i), node(k)};
          const ProfileOutcome out = evaluate_profile(Variant::ZeroSum, profile);
          t.rows.push_back({node(i), node(k), out.payoffs[0]});
        }
      }
      break;
    }
    case 3: {
      constexpr double kEdge = 1e-6;
      t.header = {"n", "x", "curve_a", "curve_b"};
      for (int n = 2; n <= kTableMaxN; ++n) {
        for (int k = 0; k < grid; ++k) {
          const double x = std::clamp(node(k), kEdge, 1.0 - kEdge);
          double a = advantaged_curve_a(n, x);
          if (!std::isfinite(a)) a = kNaN;
          t.rows.push_back({std::int64_t{n}, x, a, advantaged_curve_b(n, x)});
        }
      }
      break;
    }
    default:
      throw UsageError("unknown figure " + std::to_string(id) + " (expected 1, 2 or 3)");
  }
  return t;
}

void cmd_figure(int id, int grid, const std::string& path, std::ostream& out) {
  const std::string csv = render_csv(figure_data(id, grid));
  if (path == "-") {
    out << csv;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << csv;
  if (!file) throw UsageError("write to '" + path + "' failed");
}

void run_advise(std::istream& in, std::ostream& out) {
  enum class Ask { Remaining, Best, Score };
  SequentialSolver solver;
  SeqState state;
  Ask ask = Ask::Remaining;

  out << "sequential game advisor; 'quit' exits\n";
  auto prompt = [&] {
    switch (ask) {
      case Ask::Remaining:
        out << "players left including you (1-" << SequentialSolver::kMaxPlayers << "):\n";
        break;
      case Ask::Best:
        out << "best final score so far (0 if none):\n";
        break;
      case Ask::Score:
        out << "running score:\n";
        break;
    }
    out << "> " << std::flush;
  };

  std::string line;
  prompt();
  while (std::getline(in, line)) {
    const std::string s = trim(line);
    if (s == "quit") return;
    bool ok = false;
    switch (ask) {
      case Ask::Remaining: {
        std::int64_t r = 0;
        if (parse_int(s, r) && r >= 1 && r <= SequentialSolver::kMaxPlayers) {
          state.remaining = static_cast<int>(r);
          ask = Ask::Best;
          ok = true;
        }
        break;
      }
      case Ask::Best: {
        double m = 0.0;
        if (parse_double(s, m) && m >= 0.0 && m <= 1.0) {
          state.best_score = m;
          ask = Ask::Score;
          ok = true;
        }
        break;
      }
      case Ask::Score: {
        double x = 0.0;
        if (!parse_double(s, x) || x < 0.0) break;
        ok = true;
        if (x > 1.0) {
          out << "BUST score 0\n";
          ask = Ask::Remaining;
          break;
        }
        const double threshold = solver.policy_threshold(state);
        const Decision d = solver.advise(state, x);
        out << (d == Decision::Stop ? "STOP" : "SPIN") << std::fixed << std::setprecision(4)
            << " threshold=" << threshold
            << " win_prob=" << solver.current_win_probability(state, x) << '\n'
            << std::defaultfloat;
        if (d == Decision::Stop) ask = Ask::Remaining;
        break;
      }
    }
    if (!ok) out << "invalid input '" << s << "'\n";
    prompt();
  }
}

}  // namespace showdown::cli
