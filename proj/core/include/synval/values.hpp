#pragma once

#include <vector>

#include "synval/game.hpp"

namespace synval {

enum class ImpactKind { shapley, average_shapley };

/// Per-player payoff/impact vector. For kind shapley the entries sum to v(N)
/// (efficiency); for kind average_shapley half the entry sum equals the mean
/// coalition value 2^-n * sum_c v(c).
struct ImpactVector {
  ImpactKind kind = ImpactKind::shapley;
  std::vector<double> values;

  double sum() const { return compensated_sum(values); }
};

/// A game restricted to the subsets of one coalition, with players re-indexed
/// densely in ascending original order. members[k] is the original index of
/// dense player k.
struct Subgame {
  Game game;
  std::vector<int> members;

  /// Dense index of an original player, or -1 if absent.
  int index_of(int original_player) const;
};

Subgame subgame(const Game& g, Coalition c);

/// Shapley value of one player, direct-sum form: the coalition-size coefficients
/// |C|!(n-|C|-1)!/n! are built by the ratio recurrence coef[s] = coef[s-1] * s/(n-s),
/// never from raw factorials.
double shapley(const Game& g, int player);

ImpactVector shapley_vector(const Game& g);

/// Independent oracle: average marginal contribution over all n! player
/// orderings. Capped at n <= 10.
double shapley_permutation_oracle(const Game& g, int player);

/// Aggregated per-size coefficients for the fast average-Shapley kernel:
/// entry w[s] multiplies the marginal contribution of the probed player to any
/// coalition of size s.
///
/// Derivation: substitute the direct Shapley sum into the 2^(1-n)-weighted sub-game
/// average and swap the summation order. A marginal contribution to S
/// (|S| = s, i not in S) is counted once per sub-game C with S u {i} <= C <= N;
/// writing c = |C|, there are C(n-s-1, c-s-1) such sub-games of size c, each
/// contributing the Shapley coefficient s!(c-s-1)!/c!. Hence
///   w(s, n) = 2^(1-n) * sum_{c=s+1}^{n} C(n-s-1, c-s-1) * s!(c-s-1)!/c!.
/// Each term is evaluated as C(n-s-1, k) / ((s+k+1) * C(s+k, k)) with
/// k = c-s-1, keeping everything inside exact double-precision binomials.
struct WeightTable {
  int n_players = 0;
  std::vector<double> w;  // indexed by coalition size 0..n-1

  /// sum_s C(n-1, s) * w[s]; equals 1 for a correct table (the average-Shapley
  /// entry is a convex combination of marginal contributions).
  double convexity_total() const;
};

WeightTable average_shapley_weights(int n_players);

/// Average Shapley value by the literal sub-game sum: 2^(1-n) * sum over
/// sub-games containing the player of that sub-game's Shapley value.
/// Although the value is often described as an average over all 2^n sub-games,
/// the sum ranges only over the 2^(n-1) sub-games containing the player while
/// the normalization stays 2^(1-n); the formula is implemented literally.
/// O(3^n) overall; capped at n <= 16 and kept permanently as a test oracle.
double average_shapley_naive(const Game& g, int player);

/// Fast kernel: sum_{S avoiding i} w(|S|, n) * (v(S u {i}) - v(S)). O(2^n).
double average_shapley_fast(const Game& g, int player);
double average_shapley_fast(const Game& g, int player, const WeightTable& weights);

/// The Average-Impact value: the vector of average Shapley values. Half an
/// entry is the player's average impact over all coalitions, members and
/// non-members alike.
ImpactVector average_impact(const Game& g);

/// Exact binomial coefficient as a double (valid well beyond n = 24).
double binomial(int n, int k);

}  // namespace synval
