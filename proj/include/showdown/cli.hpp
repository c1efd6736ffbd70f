#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "showdown/errors.hpp"

namespace showdown::cli {

// Bad command-line input; exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

enum class Format { Table, Csv, Json };
enum class Game { Sequential, External, ZeroSum, Advantaged };

Format parse_format(const std::string& s);
Game parse_game(const std::string& s);  // i | ii.1 | ii.2 | ii.3
std::string game_id(Game game);

// Comma-separated list of reals in [0, 1].
std::vector<double> parse_thresholds(const std::string& s);

// A NaN double renders as an empty cell.
using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  bool operator==(const Table&) const = default;
};

// Header row, comma separator, LF endings, reals with 6 decimals.
std::string render_csv(const Table& table);
Table parse_csv(const std::string& text);
// Space-aligned columns, reals with `decimals` decimals.
std::string render_plain(const Table& table, int decimals = 4);
std::string render(const Table& table, Format format);

// Reproduced tables: 1 sequential, 2 external payer, 4 zero-sum,
// 5 advantaged player. Anything else is a UsageError.
Table table_data(int k);
std::string cmd_table(int k, Format format);

std::string cmd_equilibrium(Game game, int n, Format format);

struct SimulateArgs {
  Game game = Game::Sequential;
  int n = 2;
  std::string thresholds = "nash";  // or a comma list in seat order
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 0;
  std::uint32_t chunks = 16;
  int advantaged = 0;  // 1-based seat that wins draws in ii.3; 0 means the last
  Format format = Format::Table;
};
std::string cmd_simulate(const SimulateArgs& args);

// player is 1-based; rivals are the other seats in order.
std::string cmd_best_response(Game game, int n, int player, const std::string& rivals,
                              int advantaged, Format format);

std::string cmd_coalition(const std::string& pair, Format format);

Table figure_data(int id, int grid);
// Writes the CSV grid to `path`, or to `out` when path is "-".
void cmd_figure(int id, int grid, const std::string& path, std::ostream& out);

// Line-oriented advisor for a live sequential game; returns at `quit` or EOF.
void run_advise(std::istream& in, std::ostream& out);

}  // namespace showdown::cli
