// showdown: equilibria, tables, simulations and live advice for the
// unlimited-spin Showcase Showdown.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "showdown/cli.hpp"

namespace sc = showdown::cli;

int main(int argc, char** argv) {
  CLI::App app{"Showcase Showdown solver"};
  app.require_subcommand(1);

  std::string game = "i";
  int n = 2;
  std::string format = "table";
  double tol = 1e-12;  // parsed only; the solvers run at their built-in 1e-12

  auto common = [&](CLI::App* cmd, bool with_game) {
    if (with_game) {
      cmd->add_option("--game", game, "i | ii.1 | ii.2 | ii.3")->required();
      cmd->add_option("--n", n, "number of players")->required();
    }
    cmd->add_option("--format", format, "table | csv | json");
    cmd->add_option("--tol", tol, "solver tolerance");
  };

  int table_id = 1;
  auto* table = app.add_subcommand("table", "recompute one of the reference tables (1, 2, 4, 5)");
  table->add_option("k", table_id, "table number")->required();
  common(table, false);

  auto* eq = app.add_subcommand("equilibrium", "equilibrium thresholds and probabilities");
  common(eq, true);

  sc::SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo check against the exact values");
  common(simulate, true);
  simulate->add_option("--thresholds", sim.thresholds, "a,b,... in seat order, or nash");
  simulate->add_option("--trials", sim.trials);
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--chunks", sim.chunks, "independent random streams");
  simulate->add_option("--advantaged", sim.advantaged, "seat that wins draws in ii.3 (default last)");

  int player = 1;
  std::string rivals;
  int advantaged = 0;
  auto* br = app.add_subcommand("best-response", "optimal threshold against fixed rivals");
  common(br, true);
  br->add_option("--player", player, "1-based seat");
  br->add_option("--rivals", rivals, "other seats' thresholds, in order")->required();
  br->add_option("--advantaged", advantaged, "seat that wins draws in ii.3 (default last)");

  std::string pair;
  auto* coalition = app.add_subcommand("coalition", "3-player sequential coalitions (12 or 13)");
  coalition->add_option("--pair", pair)->required();
  common(coalition, false);

  int figure_id = 1;
  int grid = 51;
  std::string out_path = "-";
  auto* figure = app.add_subcommand("figure", "CSV grid behind a figure (1, 2, 3)");
  figure->add_option("id", figure_id)->required();
  figure->add_option("--grid", grid);
  figure->add_option("--out", out_path, "output path, - for stdout");

  auto* advise = app.add_subcommand("advise", "interactive advisor for the sequential game");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? sc::kExitOk : sc::kExitUsage;
  }

  try {
    const sc::Format fmt = sc::parse_format(format);
    if (*table) {
      std::cout << sc::cmd_table(table_id, fmt);
    } else if (*eq) {
      std::cout << sc::cmd_equilibrium(sc::parse_game(game), n, fmt);
    } else if (*simulate) {
      sim.game = sc::parse_game(game);
      sim.n = n;
      sim.format = fmt;
      std::cout << sc::cmd_simulate(sim);
    } else if (*br) {
      std::cout << sc::cmd_best_response(sc::parse_game(game), n, player, rivals, advantaged, fmt);
    } else if (*coalition) {
      std::cout << sc::cmd_coalition(pair, fmt);
    } else if (*figure) {
      sc::cmd_figure(figure_id, grid, out_path, std::cout);
    } else if (*advise) {
      sc::run_advise(std::cin, std::cout);
    }
  } catch (const sc::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sc::kExitUsage;
  } catch (const showdown::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return sc::kExitNumerical;
  }
  return sc::kExitOk;
}
