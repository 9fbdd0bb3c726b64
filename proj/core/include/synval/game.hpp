#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace synval {

/// A coalition is a bitmask over player indices: bit i set <=> player i is a member.
using Coalition = std::uint32_t;

/// Dense value tables are 2^n doubles; 24 players caps a table at 128 MiB and
/// keeps every factorial-ratio weight exact in double precision.
inline constexpr int kMaxPlayers = 24;

inline constexpr double kDefaultEps = 1e-9;

/// Thrown when an input exceeds a hard size cap (n > 24, or an oracle's
/// enumeration cap). Distinct from invalid_argument so the CLI can map it
/// to its own exit code.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Absolute-plus-relative comparison: |a-b| <= eps * max(1, |a|, |b|).
inline bool approx_equal(double a, double b, double eps = kDefaultEps) {
  double scale = std::max(1.0, std::max(std::abs(a), std::abs(b)));
  return std::abs(a - b) <= eps * scale;
}

inline bool approx_zero(double a, double eps = kDefaultEps) {
  return approx_equal(a, 0.0, eps);
}

inline int coalition_size(Coalition c) { return std::popcount(c); }
inline Coalition singleton(int player) { return Coalition{1} << player; }
inline bool contains(Coalition c, int player) { return (c >> player) & 1u; }
inline Coalition with_player(Coalition c, int player) { return c | singleton(player); }
inline Coalition without_player(Coalition c, int player) { return c & ~singleton(player); }
inline bool is_subset(Coalition s, Coalition c) { return (s & ~c) == 0; }

/// Sum with Neumaier's compensation; keeps 2^n-term checksums meaningful at n = 24.
double compensated_sum(const std::vector<double>& xs);

/// A characteristic-function game: n players and a dense table of 2^n coalition
/// values indexed by bitmask. values[0] must be exactly 0. Immutable after
/// construction; safe to share across threads.
class Game {
 public:
  Game(int n_players, std::vector<double> values,
       std::vector<std::string> labels = {});

  static Game zero(int n_players);

  int n_players() const { return n_players_; }
  Coalition grand_coalition() const { return (Coalition{1} << n_players_) - 1; }
  std::size_t table_size() const { return values_.size(); }
  double value(Coalition c) const { return values_[c]; }
  const std::vector<double>& table() const { return values_; }

  /// Player display names; defaults to "1".."n" when none were supplied.
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_custom_labels() const { return custom_labels_; }

  void require_player(int i) const;
  void require_coalition(Coalition c) const;

 private:
  int n_players_;
  std::vector<double> values_;
  std::vector<std::string> labels_;
  bool custom_labels_ = false;
};

struct PlayerClass {
  int player = 0;
  bool is_null = false;
  bool is_dummy = false;
};

/// v(c u {i}) - v(c); zero whenever i is already in c.
double marginal_contribution(const Game& g, int player, Coalition c);

/// Null player: every marginal contribution is zero (within eps).
bool is_null(const Game& g, int player, double eps = kDefaultEps);

/// Dummy player: v(c u {i}) = v(c) + v({i}) for all c avoiding i (within eps).
bool is_dummy(const Game& g, int player, double eps = kDefaultEps);

/// True iff every player is a dummy, i.e. v is additive.
bool is_game_of_dummies(const Game& g, double eps = kDefaultEps);

/// Symmetric players: v(c u {i}) = v(c u {j}) for all c avoiding both.
/// i == j is rejected; self-symmetry is not a defined query.
bool are_symmetric(const Game& g, int i, int j, double eps = kDefaultEps);

PlayerClass classify_player(const Game& g, int player, double eps = kDefaultEps);
std::vector<PlayerClass> classify_players(const Game& g, double eps = kDefaultEps);

// Pointwise game algebra. Exact (no tolerance); operands must agree on n.
Game add_games(const Game& a, const Game& b);
Game sub_games(const Game& a, const Game& b);
Game scale_game(const Game& a, double k);

/// The carrier game over s: value 1 on supersets of s, 0 elsewhere.
/// s must be nonempty.
Game carrier_game(int n_players, Coalition s);

/// scale(carrier_game(n, s), alpha).
Game weighted_carrier_game(int n_players, Coalition s, double alpha);

/// Additive game: v(c) = sum of weights of members. The canonical game of dummies.
Game additive_game(const std::vector<double>& weights);

/// Player-erasure transform: v'(c) = v(c \ {i}). Player i is null in the result.
Game erase_player(const Game& g, int player);

/// Restriction-subtraction transform: v'(c) = v(c) - v(c intersect s).
Game restrict_subtract(const Game& g, Coalition s);

/// The set of players with at least one nonzero marginal contribution.
Coalition non_null_players(const Game& g, double eps = kDefaultEps);

/// Coalitions containing at least one subset of nonzero value, ascending mask order.
std::vector<Coalition> support_closure(const Game& g, double eps = kDefaultEps);

}  // namespace synval
