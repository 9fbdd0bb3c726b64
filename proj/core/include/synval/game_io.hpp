#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "synval/game.hpp"

namespace synval {

inline constexpr const char* kToolVersion = "1.0.0";

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MissingPolicy { zero, strict };

/// Game file formats.
///
/// structured ("key: value"):
///     players: a,b,c
///     a: 10
///     a,b: 1000000
///     meta.note: anything
///
/// tabular (tab-separated, one coalition per line, for spreadsheets):
///     players<TAB>a,b,c
///     a<TAB>10
///     a,b<TAB>1000000
///
/// Coalition keys join player names with "," in player-list order, no spaces.
/// '#' starts a comment line. Coalitions absent from the file default to 0
/// under MissingPolicy::zero.
enum class FileFormat { structured, tabular };

struct GameFile {
  std::vector<std::string> players;
  std::vector<std::pair<std::string, double>> values;  // file order
  std::vector<std::pair<std::string, std::string>> metadata;
};

GameFile parse_game_file(std::istream& in);
Game game_from_file(const GameFile& f, MissingPolicy policy = MissingPolicy::zero);
Game load_game(const std::string& path, MissingPolicy policy = MissingPolicy::zero);

/// Canonical coalition key for a game's labels ("" for the empty coalition).
std::string coalition_key(const Game& g, Coalition c);

/// Canonical serialization: players line, then every nonzero coalition in
/// ascending mask order. load(save(g)) reproduces the table bit-for-bit.
std::string save_game(const Game& g, FileFormat format = FileFormat::structured);

/// Shortest decimal that round-trips the exact double.
std::string format_double(double x);

/// FNV-1a 64 content digest, as 16 hex chars.
std::string digest_hex(std::string_view bytes);

enum class OutputFormat { pretty, rows, structured };

/// One machine-readable result table: kind + (key, value) rows + run metadata
/// (tool version, tolerance, algorithm tag, input digest). "rows" output is
/// bare tab-separated data; the other formats carry metadata as '#' comments.
struct OutputTable {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::pair<std::string, std::string>> metadata;

  void add_row(std::string key, std::string value);
  void add_row(std::string key, double value);
  void add_meta(std::string key, std::string value);
  void write(std::ostream& out, OutputFormat format) const;
};

}  // namespace synval
