#include "synval/game.hpp"

#include <algorithm>
#include <utility>

namespace synval {

double compensated_sum(const std::vector<double>& xs) {
  double sum = 0.0;
  double comp = 0.0;
  for (double x : xs) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

Game::Game(int n_players, std::vector<double> values,
           std::vector<std::string> labels)
    : n_players_(n_players), values_(std::move(values)), labels_(std::move(labels)) {
  if (n_players_ < 1) {
    throw std::invalid_argument("game needs at least one player");
  }
  if (n_players_ > kMaxPlayers) {
    throw CapacityError("player count " + std::to_string(n_players_) +
                        " exceeds the cap of " + std::to_string(kMaxPlayers));
  }
  if (values_.size() != (std::size_t{1} << n_players_)) {
    throw std::invalid_argument("value table size must be 2^n_players");
  }
  if (values_[0] != 0.0) {
    throw std::invalid_argument("v(empty) must be exactly 0");
  }
  if (!labels_.empty()) {
    if (labels_.size() != static_cast<std::size_t>(n_players_)) {
      throw std::invalid_argument("label count must equal n_players");
    }
    custom_labels_ = true;
  } else {
    labels_.reserve(n_players_);
    for (int i = 0; i < n_players_; ++i) {
      labels_.push_back(std::to_string(i + 1));
    }
  }
}

Game Game::zero(int n_players) {
  if (n_players < 1 || n_players > kMaxPlayers) {
    throw std::invalid_argument("invalid player count");
  }
  return Game(n_players, std::vector<double>(std::size_t{1} << n_players, 0.0));
}

void Game::require_player(int i) const {
  if (i < 0 || i >= n_players_) {
    throw std::out_of_range("player index " + std::to_string(i) +
                            " out of range for " + std::to_string(n_players_) +
                            " players");
  }
}

void Game::require_coalition(Coalition c) const {
  if (!is_subset(c, grand_coalition())) {
    throw std::out_of_range("coalition has bits beyond the player set");
  }
}

double marginal_contribution(const Game& g, int player, Coalition c) {
  g.require_player(player);
  g.require_coalition(c);
  return g.value(with_player(c, player)) - g.value(c);
}

bool is_null(const Game& g, int player, double eps) {
  g.require_player(player);
  Coalition bit = singleton(player);
  for (Coalition c = 0; c < g.table_size(); ++c) {
    if (c & bit) continue;
    if (!approx_equal(g.value(c | bit), g.value(c), eps)) return false;
  }
  return true;
}

bool is_dummy(const Game& g, int player, double eps) {
  g.require_player(player);
  Coalition bit = singleton(player);
  double solo = g.value(bit);
  for (Coalition c = 0; c < g.table_size(); ++c) {
    if (c & bit) continue;
    if (!approx_equal(g.value(c | bit), g.value(c) + solo, eps)) return false;
  }
  return true;
}

bool is_game_of_dummies(const Game& g, double eps) {
  for (int i = 0; i < g.n_players(); ++i) {
    if (!is_dummy(g, i, eps)) return false;
  }
  return true;
}

bool are_symmetric(const Game& g, int i, int j, double eps) {
  g.require_player(i);
  g.require_player(j);
  if (i == j) {
    throw std::invalid_argument("symmetry of a player with itself is not defined");
  }
  Coalition bi = singleton(i);
  Coalition bj = singleton(j);
  for (Coalition c = 0; c < g.table_size(); ++c) {
    if (c & (bi | bj)) continue;
    if (!approx_equal(g.value(c | bi), g.value(c | bj), eps)) return false;
  }
  return true;
}

PlayerClass classify_player(const Game& g, int player, double eps) {
  PlayerClass pc;
  pc.player = player;
  pc.is_null = is_null(g, player, eps);
  // null implies dummy (the dummy condition with v({i}) = 0), but only within
  // tolerance; classify both from the definitions to keep the report honest.
  pc.is_dummy = pc.is_null || is_dummy(g, player, eps);
  return pc;
}

std::vector<PlayerClass> classify_players(const Game& g, double eps) {
  std::vector<PlayerClass> out;
  out.reserve(g.n_players());
  for (int i = 0; i < g.n_players(); ++i) {
    out.push_back(classify_player(g, i, eps));
  }
  return out;
}

namespace {

void require_same_players(const Game& a, const Game& b) {
  if (a.n_players() != b.n_players()) {
    throw std::invalid_argument("games have different player counts");
  }
}

}  // namespace

Game add_games(const Game& a, const Game& b) {
  require_same_players(a, b);
  std::vector<double> values(a.table());
  for (std::size_t c = 0; c < values.size(); ++c) values[c] += b.table()[c];
  return Game(a.n_players(), std::move(values),
              a.has_custom_labels() ? a.labels() : std::vector<std::string>{});
}

Game sub_games(const Game& a, const Game& b) {
  require_same_players(a, b);
  std::vector<double> values(a.table());
  for (std::size_t c = 0; c < values.size(); ++c) values[c] -= b.table()[c];
  return Game(a.n_players(), std::move(values),
              a.has_custom_labels() ? a.labels() : std::vector<std::string>{});
}

Game scale_game(const Game& a, double k) {
  std::vector<double> values(a.table());
  for (double& v : values) v *= k;
  values[0] = 0.0;  // -0.0 from k < 0 would trip the constructor
  return Game(a.n_players(), std::move(values),
              a.has_custom_labels() ? a.labels() : std::vector<std::string>{});
}

Game carrier_game(int n_players, Coalition s) {
  if (s == 0) {
    throw std::invalid_argument("carrier game requires a nonempty coalition");
  }
  Game::zero(n_players).require_coalition(s);
  std::vector<double> values(std::size_t{1} << n_players, 0.0);
  for (Coalition c = 0; c < values.size(); ++c) {
    if (is_subset(s, c)) values[c] = 1.0;
  }
  return Game(n_players, std::move(values));
}

Game weighted_carrier_game(int n_players, Coalition s, double alpha) {
  return scale_game(carrier_game(n_players, s), alpha);
}

Game additive_game(const std::vector<double>& weights) {
  int n = static_cast<int>(weights.size());
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("invalid weight count");
  }
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (Coalition c = 1; c < values.size(); ++c) {
    int low = std::countr_zero(c);
    values[c] = values[without_player(c, low)] + weights[low];
  }
  values[0] = 0.0;
  return Game(n, std::move(values));
}

Game erase_player(const Game& g, int player) {
  g.require_player(player);
  std::vector<double> values(g.table_size());
  for (Coalition c = 0; c < values.size(); ++c) {
    values[c] = g.value(without_player(c, player));
  }
  return Game(g.n_players(), std::move(values),
              g.has_custom_labels() ? g.labels() : std::vector<std::string>{});
}

Game restrict_subtract(const Game& g, Coalition s) {
  g.require_coalition(s);
  std::vector<double> values(g.table_size());
  for (Coalition c = 0; c < values.size(); ++c) {
    values[c] = g.value(c) - g.value(c & s);
  }
  return Game(g.n_players(), std::move(values),
              g.has_custom_labels() ? g.labels() : std::vector<std::string>{});
}

Coalition non_null_players(const Game& g, double eps) {
  Coalition out = 0;
  for (int i = 0; i < g.n_players(); ++i) {
    if (!is_null(g, i, eps)) out |= singleton(i);
  }
  return out;
}

std::vector<Coalition> support_closure(const Game& g, double eps) {
  // reach[c] <=> some subset of c has nonzero value; each mask inherits from
  // its one-smaller submasks, so one ascending pass suffices.
  std::vector<char> reach(g.table_size(), 0);
  std::vector<Coalition> out;
  for (Coalition c = 1; c < g.table_size(); ++c) {
    bool r = !approx_zero(g.value(c), eps);
    for (int i = 0; !r && i < g.n_players(); ++i) {
      if (contains(c, i) && reach[without_player(c, i)]) r = true;
    }
    reach[c] = r;
    if (r) out.push_back(c);
  }
  return out;
}

}  // namespace synval
