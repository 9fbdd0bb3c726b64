#include "synval/game_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace synval {

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string digest_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xf];
    h >>= 4;
  }
  return std::string(buf, 16);
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos
                                         ? std::string_view::npos
                                         : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

double parse_value(const std::string& text, int line_no) {
  std::string t = trim(text);
  double v = 0.0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + t + "'");
  }
  return v;
}

}  // namespace

GameFile parse_game_file(std::istream& in) {
  GameFile file;
  bool have_players = false;
  bool tabular = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;

    if (!have_players) {
      if (line.rfind("players:", 0) == 0) {
        tabular = false;
        file.players = split(line.substr(8), ',');
      } else if (line.rfind("players\t", 0) == 0) {
        tabular = true;
        file.players = split(line.substr(8), ',');
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected a 'players' header line");
      }
      for (const std::string& p : file.players) {
        if (p.empty()) {
          throw ParseError("line " + std::to_string(line_no) + ": empty player name");
        }
      }
      have_players = true;
      continue;
    }

    std::string key, value;
    if (tabular) {
      std::size_t tab = line.find('\t');
      if (tab == std::string::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": expected key<TAB>value");
      }
      key = trim(line.substr(0, tab));
      value = line.substr(tab + 1);
    } else {
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'key: value'");
      }
      key = trim(line.substr(0, colon));
      value = line.substr(colon + 1);
    }

    if (key.rfind("meta.", 0) == 0) {
      file.metadata.emplace_back(key.substr(5), trim(value));
      continue;
    }
    file.values.emplace_back(key, parse_value(value, line_no));
  }
  if (!have_players) {
    throw ParseError("missing 'players' header line");
  }
  return file;
}

Game game_from_file(const GameFile& f, MissingPolicy policy) {
  int n = static_cast<int>(f.players.size());
  if (n < 1) throw ParseError("no players declared");
  if (n > kMaxPlayers) {
    throw CapacityError("player count " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxPlayers));
  }
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(f.players[i], i).second) {
      throw ParseError("duplicate player name '" + f.players[i] + "'");
    }
  }

  std::size_t table = std::size_t{1} << n;
  std::vector<double> values(table, 0.0);
  std::vector<char> seen(table, 0);
  for (const auto& [key, value] : f.values) {
    Coalition mask = 0;
    if (!key.empty()) {
      for (const std::string& name : split(key, ',')) {
        auto it = index.find(name);
        if (it == index.end()) {
          throw ParseError("unknown player '" + name + "' in key '" + key + "'");
        }
        mask |= singleton(it->second);
      }
    }
    if (seen[mask]) {
      throw ParseError("duplicate coalition key '" + key + "'");
    }
    seen[mask] = 1;
    if (mask == 0 && value != 0.0) {
      throw ParseError("the empty coalition must have value 0");
    }
    values[mask] = value;
  }
  if (policy == MissingPolicy::strict) {
    for (Coalition c = 1; c < table; ++c) {
      if (!seen[c]) {
        throw ParseError("missing coalition value for mask " + std::to_string(c) +
                         " under strict missing-policy");
      }
    }
  }
  return Game(n, std::move(values), f.players);
}

Game load_game(const std::string& path, MissingPolicy policy) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  GameFile f = parse_game_file(in);
  return game_from_file(f, policy);
}

std::string coalition_key(const Game& g, Coalition c) {
  std::string out;
  for (int i = 0; i < g.n_players(); ++i) {
    if (!contains(c, i)) continue;
    if (!out.empty()) out += ',';
    out += g.labels()[i];
  }
  return out;
}

std::string save_game(const Game& g, FileFormat format) {
  char sep = format == FileFormat::tabular ? '\t' : ':';
  std::string out = "players";
  out += format == FileFormat::tabular ? "\t" : ": ";
  for (int i = 0; i < g.n_players(); ++i) {
    if (i) out += ',';
    out += g.labels()[i];
  }
  out += '\n';
  for (Coalition c = 1; c < g.table_size(); ++c) {
    if (g.value(c) == 0.0) continue;  // sparse: zeros are implied
    out += coalition_key(g, c);
    out += sep;
    if (format == FileFormat::structured) out += ' ';
    out += format_double(g.value(c));
    out += '\n';
  }
  return out;
}

void OutputTable::add_row(std::string key, std::string value) {
  rows.emplace_back(std::move(key), std::move(value));
}

void OutputTable::add_row(std::string key, double value) {
  rows.emplace_back(std::move(key), format_double(value));
}

void OutputTable::add_meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void OutputTable::write(std::ostream& out, OutputFormat format) const {
  switch (format) {
    case OutputFormat::rows:
      for (const auto& [k, v] : rows) out << k << '\t' << v << '\n';
      break;
    case OutputFormat::structured:
      out << "# kind: " << kind << '\n';
      for (const auto& [k, v] : metadata) out << "# " << k << ": " << v << '\n';
      for (const auto& [k, v] : rows) out << k << ": " << v << '\n';
      break;
    case OutputFormat::pretty: {
      out << kind;
      if (!metadata.empty()) {
        out << "  (";
        bool first = true;
        for (const auto& [k, v] : metadata) {
          if (!first) out << ", ";
          out << k << '=' << v;
          first = false;
        }
        out << ')';
      }
      out << '\n';
      std::size_t width = 0;
      for (const auto& [k, v] : rows) width = std::max(width, k.size());
      for (const auto& [k, v] : rows) {
        out << "  " << k << std::string(width - k.size() + 2, ' ') << v << '\n';
      }
      break;
    }
  }
}

}  // namespace synval
