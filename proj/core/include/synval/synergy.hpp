#pragma once

#include <utility>
#include <vector>

#include "synval/game.hpp"
#include "synval/values.hpp"

namespace synval {

/// Synergy of every coalition: chi(c) = v(c) - sum of members' Average-Impact
/// values. chi(empty) = 0 and the whole table sums to 0 (within n*2^n*eps).
struct SynergyTable {
  std::vector<double> chi;

  double sum() const { return compensated_sum(chi); }
};

/// Harsanyi dividends: the coefficients of the unique expansion of v into
/// weighted carrier games, pruned of near-zero entries. Masks ascend.
struct CarrierDecomposition {
  int n_players = 0;
  std::vector<std::pair<Coalition, double>> dividends;
};

double synergy_value(const Game& g, Coalition c);
double synergy_value(const Game& g, Coalition c, const ImpactVector& impact);

SynergyTable synergy_table(const Game& g);
SynergyTable synergy_table(const Game& g, const ImpactVector& impact);

/// Closed form for the synergy of a coalition in the weighted carrier game
/// over s:  (1 - 2^(1-|s|)) * alpha        when s is a subset of c,
///          -|c & s| * 2^(1-|s|) * alpha/|s|  otherwise.
/// The subset branch is tested first; the branches disagree where both formulas
/// would apply.
double lemma1_closed_form(int n_players, Coalition s, double alpha, Coalition c);

/// Dividends via the in-place subset-sum transform (O(n 2^n)), equivalent to
/// the Moebius inversion alpha_s = sum_{t <= s} (-1)^(|s|-|t|) v(t).
/// Entries with |alpha| <= prune_eps are dropped.
CarrierDecomposition carrier_decompose(const Game& g, double prune_eps = kDefaultEps);

/// sum of dividends over nonempty s <= c; reconstructs v(c) up to pruning.
double reconstruct_value(const CarrierDecomposition& d, Coalition c);
Game reconstruct_game(const CarrierDecomposition& d);

/// Second, independent route to chi: sum the Lemma-1 closed form over the
/// game's carrier decomposition. Cross-checks synergy_value.
double synergy_via_decomposition(const Game& g, Coalition c);
double synergy_via_decomposition(const CarrierDecomposition& d, Coalition c);

/// The game v - chi, i.e. c |-> sum of members' Average-Impact values.
/// Always a game of dummies.
Game residual_dummy_game(const Game& g);

/// The naive surplus notion v(c) - sum of members' singleton values. A
/// comparison baseline only; it fails Normalized-Synergy on non-additive games.
double surplus_value(const Game& g, Coalition c);
std::vector<double> surplus_table(const Game& g);

}  // namespace synval
