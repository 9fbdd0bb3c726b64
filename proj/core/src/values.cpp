#include "synval/values.hpp"

#include <algorithm>
#include <numeric>

namespace synval {

int Subgame::index_of(int original_player) const {
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k] == original_player) return static_cast<int>(k);
  }
  return -1;
}

Subgame subgame(const Game& g, Coalition c) {
  g.require_coalition(c);
  if (c == 0) {
    throw std::invalid_argument("sub-game over the empty coalition is not defined");
  }
  std::vector<int> members;
  for (int i = 0; i < g.n_players(); ++i) {
    if (contains(c, i)) members.push_back(i);
  }
  int k = static_cast<int>(members.size());
  std::vector<double> values(std::size_t{1} << k);
  std::vector<std::string> labels;
  if (g.has_custom_labels()) {
    for (int m : members) labels.push_back(g.labels()[m]);
  }
  for (Coalition dense = 0; dense < values.size(); ++dense) {
    Coalition full = 0;
    for (int b = 0; b < k; ++b) {
      if (contains(dense, b)) full |= singleton(members[b]);
    }
    values[dense] = g.value(full);
  }
  return Subgame{Game(k, std::move(values), std::move(labels)), std::move(members)};
}

namespace {

// coef[s] = s!(n-s-1)!/n! for s = 0..n-1.
std::vector<double> shapley_coefficients(int n) {
  std::vector<double> coef(n);
  coef[0] = 1.0 / n;
  for (int s = 1; s < n; ++s) {
    coef[s] = coef[s - 1] * s / (n - s);
  }
  return coef;
}

double shapley_with_coefficients(const Game& g, int player,
                                 const std::vector<double>& coef) {
  Coalition bit = singleton(player);
  double acc = 0.0;
  for (Coalition c = 0; c < g.table_size(); ++c) {
    if (c & bit) continue;
    acc += coef[coalition_size(c)] * (g.value(c | bit) - g.value(c));
  }
  return acc;
}

}  // namespace

double shapley(const Game& g, int player) {
  g.require_player(player);
  return shapley_with_coefficients(g, player, shapley_coefficients(g.n_players()));
}

ImpactVector shapley_vector(const Game& g) {
  std::vector<double> coef = shapley_coefficients(g.n_players());
  ImpactVector out;
  out.kind = ImpactKind::shapley;
  out.values.reserve(g.n_players());
  for (int i = 0; i < g.n_players(); ++i) {
    out.values.push_back(shapley_with_coefficients(g, i, coef));
  }
  return out;
}

double shapley_permutation_oracle(const Game& g, int player) {
  g.require_player(player);
  int n = g.n_players();
  if (n > 10) {
    throw CapacityError("permutation oracle enumerates n! orderings; capped at n = 10");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  double total = 0.0;
  std::uint64_t count = 0;
  do {
    Coalition before = 0;
    for (int p : order) {
      if (p == player) break;
      before |= singleton(p);
    }
    total += g.value(with_player(before, player)) - g.value(before);
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return total / static_cast<double>(count);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int j = 1; j <= k; ++j) {
    r = r * (n - k + j) / j;
  }
  return r;
}

double WeightTable::convexity_total() const {
  double acc = 0.0;
  for (int s = 0; s < n_players; ++s) {
    acc += binomial(n_players - 1, s) * w[s];
  }
  return acc;
}

WeightTable average_shapley_weights(int n_players) {
  if (n_players < 1 || n_players > kMaxPlayers) {
    throw std::invalid_argument("invalid player count for weight table");
  }
  WeightTable table;
  table.n_players = n_players;
  table.w.resize(n_players);
  double norm = std::ldexp(1.0, 1 - n_players);  // 2^(1-n)
  for (int s = 0; s < n_players; ++s) {
    int m = n_players - 1 - s;
    double acc = 0.0;
    for (int k = 0; k <= m; ++k) {
      // C(m,k) * s! k! / (s+k+1)!  ==  C(m,k) / ((s+k+1) * C(s+k,k))
      acc += binomial(m, k) / ((s + k + 1) * binomial(s + k, k));
    }
    table.w[s] = norm * acc;
  }
  return table;
}

double average_shapley_naive(const Game& g, int player) {
  g.require_player(player);
  int n = g.n_players();
  if (n > 16) {
    throw CapacityError("naive average Shapley is O(3^n); capped at n = 16");
  }
  double acc = 0.0;
  for (Coalition c = 0; c < g.table_size(); ++c) {
    if (!contains(c, player)) continue;
    Subgame sub = subgame(g, c);
    acc += shapley(sub.game, sub.index_of(player));
  }
  return std::ldexp(acc, 1 - n);
}

double average_shapley_fast(const Game& g, int player, const WeightTable& weights) {
  g.require_player(player);
  if (weights.n_players != g.n_players()) {
    throw std::invalid_argument("weight table built for a different player count");
  }
  Coalition bit = singleton(player);
  const double* w = weights.w.data();
  const double* v = g.table().data();
  double acc = 0.0;
  for (Coalition c = 0; c < g.table_size(); ++c) {
    if (c & bit) continue;
    acc += w[coalition_size(c)] * (v[c | bit] - v[c]);
  }
  return acc;
}

double average_shapley_fast(const Game& g, int player) {
  return average_shapley_fast(g, player, average_shapley_weights(g.n_players()));
}

ImpactVector average_impact(const Game& g) {
  WeightTable weights = average_shapley_weights(g.n_players());
  ImpactVector out;
  out.kind = ImpactKind::average_shapley;
  out.values.reserve(g.n_players());
  for (int i = 0; i < g.n_players(); ++i) {
    out.values.push_back(average_shapley_fast(g, i, weights));
  }
  return out;
}

}  // namespace synval
