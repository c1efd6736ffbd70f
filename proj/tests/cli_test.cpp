#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "showdown/cli.hpp"
#include "showdown/score_model.hpp"
#include "showdown/simultaneous_game.hpp"
#include "test_util.hpp"

using namespace showdown;
using namespace showdown::cli;

namespace {

double num(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  return static_cast<double>(std::get<std::int64_t>(c));
}

// Printed reference cells are compared at one unit of the 4th decimal; the
// strict half-unit check lives in the acceptance suite.
constexpr double kCell = 1e-4;

std::vector<std::string> advise_lines(const std::string& script) {
  std::istringstream in(script);
  std::ostringstream out;
  run_advise(in, out);
  std::vector<std::string> lines;
  std::istringstream split(out.str());
  for (std::string line; std::getline(split, line);) {
    while (line.rfind("> ", 0) == 0) line.erase(0, 2);
    if (line.rfind("STOP", 0) == 0 || line.rfind("SPIN", 0) == 0 || line.rfind("BUST", 0) == 0) {
      lines.push_back(line);
    }
  }
  return lines;
}

}  // namespace

TEST_CASE("golden tables") {
  const Table t1 = table_data(1);
  REQUIRE(t1.rows.size() == 10);
  CHECK(num(t1.rows[0][1]) == 0.0);
  for (int n = 2; n <= 10; ++n) {
    const auto& row = t1.rows[n - 1];
    CAPTURE(n);
    CHECK(num(row[0]) == n);
    CHECK_NEAR(num(row[1]), ref::kTheta[n - 2], kCell);
    for (int m = 1; m <= n; ++m) CHECK_NEAR(num(row[1 + m]), ref::kSeqWin[n - 2][m - 1], kCell);
  }

  const Table t2 = table_data(2);
  const Table t4 = table_data(4);
  const Table t5 = table_data(5);
  REQUIRE(t2.rows.size() == 9);
  REQUIRE(t4.rows.size() == 9);
  REQUIRE(t5.rows.size() == 9);
  for (int i = 0; i < 9; ++i) {
    CAPTURE(i + 2);
    CHECK_NEAR(num(t2.rows[i][1]), ref::kAlpha[i], kCell);
    CHECK_NEAR(num(t2.rows[i][2]), ref::kExternalWin[i], kCell);
    CHECK_NEAR(num(t4.rows[i][1]), ref::kGamma[i], kCell);
    CHECK_NEAR(num(t4.rows[i][2]), ref::kZeroSumTie[i], kCell);
    CHECK_NEAR(num(t4.rows[i][3]), ref::kZeroSumWin[i], kCell);
    CHECK_NEAR(num(t5.rows[i][1]), ref::kEpsilon[i], kCell);
    CHECK_NEAR(num(t5.rows[i][2]), ref::kDelta[i], kCell);
    CHECK_NEAR(num(t5.rows[i][3]), ref::kAdvWin[i], kCell);
    CHECK_NEAR(num(t5.rows[i][4]), ref::kNonAdvWin[i], kCell);
  }

  // rows quoted as examples
  CHECK_NEAR(num(t4.rows[4][1]), 0.8268, 5e-5);
  CHECK_NEAR(num(t4.rows[4][2]), 0.0486, 5e-5);
  CHECK_NEAR(num(t4.rows[4][3]), 0.1586, 5e-5);
  CHECK_NEAR(num(t5.rows[1][1]), 0.6687, 5e-5);
  CHECK_NEAR(num(t5.rows[1][2]), 0.7401, 5e-5);
  CHECK_NEAR(num(t5.rows[1][3]), 0.3720, 5e-5);
  CHECK_NEAR(num(t5.rows[1][4]), 0.3140, 5e-5);

  CHECK_THROWS_AS(table_data(3), UsageError);
  CHECK_THROWS_AS(table_data(6), UsageError);
  try {
    table_data(3);
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("out of scope") != std::string::npos);
  }
}

TEST_CASE("csv round trip") {
  for (int k : {1, 2, 4, 5}) {
    const std::string once = render_csv(table_data(k));
    CHECK(render_csv(parse_csv(once)) == once);
    CHECK(once.find('\r') == std::string::npos);
  }
  const std::string fig = render_csv(figure_data(3, 11));
  CHECK(render_csv(parse_csv(fig)) == fig);
  const std::string first_line = cmd_table(2, Format::Csv).substr(0, 10);
  CHECK(first_line == "n,alpha,P\n");
}

TEST_CASE("parsing") {
  CHECK(parse_game("ii.2") == Game::ZeroSum);
  CHECK(game_id(Game::Advantaged) == "ii.3");
  CHECK_THROWS_AS(parse_game("iii"), UsageError);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
  CHECK(parse_thresholds("0.1, 0.5,1") == std::vector<double>{0.1, 0.5, 1.0});
  CHECK_THROWS_AS(parse_thresholds("0.1,,0.2"), UsageError);
  CHECK_THROWS_AS(parse_thresholds("0.1,abc"), UsageError);
  CHECK_THROWS_AS(parse_thresholds("1.5"), UsageError);
}

TEST_CASE("equilibrium json") {
  using nlohmann::json;
  const json j1 = json::parse(cmd_equilibrium(Game::External, 2, Format::Json));
  for (const char* key : {"game", "n", "thresholds", "win_probs", "tie_prob", "payoffs", "residuals"}) {
    CHECK(j1.contains(key));
  }
  CHECK(j1["game"] == "ii.1");
  CHECK_NEAR(j1["alpha"].get<double>(), 0.5887, 5e-5);
  CHECK_NEAR(j1["win_prob"].get<double>(), 0.4665, 5e-5);

  const json ji = json::parse(cmd_equilibrium(Game::Sequential, 3, Format::Json));
  const std::vector<double> thetas = ji["thetas"];
  const std::vector<double> wins = ji["win_probs"];
  const double want_t[] = {0.0, 0.5706, 0.6879};
  const double want_p[] = {0.2859, 0.3248, 0.3893};
  for (int i = 0; i < 3; ++i) {
    CHECK_NEAR(thetas[i], want_t[i], 5e-5);
    CHECK_NEAR(wins[i], want_p[i], 5e-5);
  }
  CHECK_NOTHROW(cmd_equilibrium(Game::Sequential, 1, Format::Json));

  const json ja = json::parse(cmd_equilibrium(Game::Advantaged, 2, Format::Json));
  CHECK_NEAR(ja["epsilon"].get<double>(), 0.4887, 5e-5);
  CHECK_NEAR(ja["delta"].get<double>(), 0.6118, 5e-5);
  CHECK_NEAR(ja["p_adv"].get<double>(), 0.5366, 5e-5);

  CHECK_THROWS_AS(cmd_equilibrium(Game::External, 1, Format::Json), UsageError);
}

TEST_CASE("simulate command") {
  SimulateArgs args;
  args.game = Game::ZeroSum;
  args.n = 2;
  args.seed = 42;
  args.format = Format::Csv;
  const Table zs = parse_csv(cmd_simulate(args));
  bool saw_draw = false;
  for (const auto& row : zs.rows) {
    if (std::get<std::string>(row[0]) != "draw") continue;
    saw_draw = true;
    const double est = num(row[2]);
    const double se = num(row[3]);
    CHECK(std::abs(est - equilibrium(Variant::ZeroSum, 2).tie_prob) < 4.0 * se);
  }
  CHECK(saw_draw);

  args.game = Game::Sequential;
  args.seed = 7;
  const Table seq = parse_csv(cmd_simulate(args));
  CHECK(std::abs(num(seq.rows[0][2]) - 0.4250) < 0.002);
  CHECK(std::abs(num(seq.rows[1][2]) - 0.5750) < 0.002);

  args.trials = 1;
  const Table one = parse_csv(cmd_simulate(args));
  std::int64_t total = 0;
  for (const auto& row : one.rows) total += std::get<std::int64_t>(row[1]);
  CHECK(total == 1);

  args.thresholds = "0.3,bad";
  CHECK_THROWS_AS(cmd_simulate(args), UsageError);
  args.thresholds = "0.3";
  CHECK_THROWS_AS(cmd_simulate(args), UsageError);
}

TEST_CASE("best response command") {
  const Table t = parse_csv(cmd_best_response(Game::External, 3, 1, "0.6989,0.6989", 0, Format::Csv));
  CHECK_NEAR(num(t.rows[0][1]), 0.6989, 5e-5);
  // the zero-sum reply falls steeply in the rival's threshold (slope near -6),
  // so a rival at the rounded 0.6591 is answered with 0.65874 (fine scan)
  std::ostringstream g2;
  g2.precision(17);
  g2 << gamma(2);
  const Table z = parse_csv(cmd_best_response(Game::ZeroSum, 2, 1, g2.str(), 0, Format::Csv));
  CHECK_NEAR(num(z.rows[0][1]), gamma(2), 1e-6);
  const Table zr = parse_csv(cmd_best_response(Game::ZeroSum, 2, 1, "0.6591", 0, Format::Csv));
  CHECK_NEAR(num(zr.rows[0][1]), 0.65874, 1e-5);
  const Table g = parse_csv(cmd_best_response(Game::External, 2, 1, "0", 0, Format::Csv));
  CHECK_NEAR(num(g.rows[0][1]), best_response(Variant::External, 0, std::vector<double>{0.0}), 1e-6);
  CHECK_THROWS_AS(cmd_best_response(Game::External, 3, 1, "0.5", 0, Format::Csv), UsageError);
  CHECK_THROWS_AS(cmd_best_response(Game::Sequential, 3, 1, "0.5,0.5", 0, Format::Csv), UsageError);
}

TEST_CASE("coalition command") {
  const Table c12 = parse_csv(cmd_coalition("12", Format::Csv));
  CHECK_NEAR(num(c12.rows[0][1]), 0.63386, 1e-4);
  const Table c13 = parse_csv(cmd_coalition("13", Format::Csv));
  CHECK_NEAR(num(c13.rows[0][1]), 0.75017, 1e-4);
  CHECK_THROWS_AS(cmd_coalition("23", Format::Csv), UsageError);
}

TEST_CASE("figures") {
  const double a2 = alpha(2);
  const Table f1 = figure_data(1, 21);
  REQUIRE(f1.rows.size() == 21);
  for (const auto& row : f1.rows) {
    CHECK_NEAR(num(row[1]), two_player_win(a2, num(row[0])), 1e-12);
    CHECK_NEAR(num(row[2]), 0.4665, 5e-5);
  }

  const Table f2 = figure_data(2, 51);
  REQUIRE(f2.rows.size() == 51 * 51);
  double lowest = 1.0;
  for (const auto& row : f2.rows) lowest = std::min(lowest, num(row[2]));
  CHECK(lowest >= -1e-9);

  const Table f3 = figure_data(3, 11);
  CHECK(f3.rows.size() == 9 * 11);

  CHECK_THROWS_AS(figure_data(1, 1), UsageError);
  CHECK_THROWS_AS(figure_data(4, 5), UsageError);
  std::ostringstream sink;
  CHECK_THROWS_AS(cmd_figure(1, 5, "/nonexistent-dir/out.csv", sink), UsageError);
  cmd_figure(1, 5, "-", sink);
  CHECK(sink.str().rfind("y,p1,equilibrium\n", 0) == 0);
}

TEST_CASE("advisor script") {
  // n, M, then running scores; STOP resets to a fresh question
  auto lines = advise_lines("3\n0\n0.70\nquit\n");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].rfind("STOP threshold=0.6879", 0) == 0);

  lines = advise_lines("1\n0.5\n0.45\n0.8\nquit\n");
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].rfind("SPIN", 0) == 0);
  CHECK(lines[1].rfind("STOP", 0) == 0);
  CHECK(lines[1].find("win_prob=1.0000") != std::string::npos);

  lines = advise_lines("2\n0\n0.5706\nquit\n");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].rfind("STOP", 0) == 0);

  lines = advise_lines("2\n0\n1.3\nquit\n");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].rfind("BUST", 0) == 0);

  // junk is rejected without losing state
  lines = advise_lines("3\nfoo\n0\nbar\n0.70\n");
  REQUIRE(lines.size() == 1);
  CHECK(lines[0].rfind("STOP", 0) == 0);
}

TEST_CASE("advisor never stops below the best score") {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> seats(1, 8);
  for (int game = 0; game < 300; ++game) {
    const int n = seats(gen);
    const double m = u(gen);
    double score = u(gen) * m;  // strictly below M
    std::ostringstream script;
    script.precision(17);
    script << n << '\n' << m << '\n' << score << "\nquit\n";
    const auto lines = advise_lines(script.str());
    REQUIRE(lines.size() == 1);
    INFO("n=" << n << " M=" << m << " score=" << score);
    CHECK(lines[0].rfind("SPIN", 0) == 0);
  }
}
