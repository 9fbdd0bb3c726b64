#pragma once

// Shared test fixtures and independent brute-force oracles. Everything here
// stays free of the fast paths it is used to check.

#include <vector>

#include "synval/axioms.hpp"
#include "synval/game.hpp"

namespace synval::testing {

// The three-player game with a null third player and a large pairwise payoff:
//   v({1}) = 10, v({2}) = 20, v({1,2}) = 1000000,
//   v({3}) = 0, v({1,3}) = 10, v({2,3}) = 20, v({1,2,3}) = 1000000.
// Bit 0 is player "1", bit 1 is "2", bit 2 is "3".
inline Game example1() {
  return Game(3, {0, 10, 20, 1000000, 0, 10, 20, 1000000}, {"1", "2", "3"});
}

// Hand-derived companions to example1().
inline const std::vector<double> kExample1Impact = {250002.5, 250012.5, 0.0};
inline const std::vector<double> kExample1Synergy = {
    0, -249992.5, -249992.5, 499985, 0, -249992.5, -249992.5, 499985};

// Direct Moebius sum over subsets of s, independent of the in-place subset
// transform. O(2^|s|) per dividend; keep n small.
inline double mobius_dividend_direct(const Game& g, Coalition s) {
  double acc = 0.0;
  Coalition t = s;
  while (true) {
    int sign = ((coalition_size(s) - coalition_size(t)) % 2 == 0) ? 1 : -1;
    acc += sign * g.value(t);
    if (t == 0) break;
    t = (t - 1) & s;
  }
  return acc;
}

inline std::vector<Game> quick_corpus(int n_players, int count,
                                      std::uint64_t seed = 42,
                                      Distribution dist = Distribution::uniform_range) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.n_players = n_players;
  cfg.dist = dist;
  cfg.count = count;
  return generate_games(cfg);
}

}  // namespace synval::testing
