#include "synval/synergy.hpp"

#include <cmath>

namespace synval {

double synergy_value(const Game& g, Coalition c, const ImpactVector& impact) {
  g.require_coalition(c);
  double acc = g.value(c);
  for (int i = 0; i < g.n_players(); ++i) {
    if (contains(c, i)) acc -= impact.values[i];
  }
  return acc;
}

double synergy_value(const Game& g, Coalition c) {
  return synergy_value(g, c, average_impact(g));
}

SynergyTable synergy_table(const Game& g, const ImpactVector& impact) {
  SynergyTable out;
  out.chi.resize(g.table_size());
  // member-lambda prefix sums: each mask extends its mask-without-lowest-bit
  std::vector<double> member_sum(g.table_size(), 0.0);
  for (Coalition c = 1; c < g.table_size(); ++c) {
    int low = std::countr_zero(c);
    member_sum[c] = member_sum[without_player(c, low)] + impact.values[low];
    out.chi[c] = g.value(c) - member_sum[c];
  }
  out.chi[0] = 0.0;
  return out;
}

SynergyTable synergy_table(const Game& g) {
  return synergy_table(g, average_impact(g));
}

double lemma1_closed_form(int n_players, Coalition s, double alpha, Coalition c) {
  if (s == 0) {
    throw std::invalid_argument("closed form requires a nonempty carrier coalition");
  }
  Game::zero(n_players).require_coalition(s | c);
  int size_s = coalition_size(s);
  double half_pow = std::ldexp(1.0, 1 - size_s);  // 2^(1-|s|)
  if (is_subset(s, c)) {
    return (1.0 - half_pow) * alpha;
  }
  return -coalition_size(c & s) * half_pow * alpha / size_s;
}

CarrierDecomposition carrier_decompose(const Game& g, double prune_eps) {
  std::vector<double> a(g.table());
  // dimension-by-dimension Moebius transform over the subset lattice
  for (int i = 0; i < g.n_players(); ++i) {
    Coalition bit = singleton(i);
    for (Coalition c = 0; c < a.size(); ++c) {
      if (c & bit) a[c] -= a[c ^ bit];
    }
  }
  CarrierDecomposition out;
  out.n_players = g.n_players();
  for (Coalition s = 1; s < a.size(); ++s) {
    if (std::abs(a[s]) > prune_eps) {
      out.dividends.emplace_back(s, a[s]);
    }
  }
  return out;
}

double reconstruct_value(const CarrierDecomposition& d, Coalition c) {
  double acc = 0.0;
  for (const auto& [s, alpha] : d.dividends) {
    if (is_subset(s, c)) acc += alpha;
  }
  return acc;
}

Game reconstruct_game(const CarrierDecomposition& d) {
  std::vector<double> values(std::size_t{1} << d.n_players, 0.0);
  for (const auto& [s, alpha] : d.dividends) {
    for (Coalition c = s; c < values.size(); ++c) {
      if (is_subset(s, c)) values[c] += alpha;
    }
  }
  values[0] = 0.0;
  return Game(d.n_players, std::move(values));
}

double synergy_via_decomposition(const CarrierDecomposition& d, Coalition c) {
  double acc = 0.0;
  for (const auto& [s, alpha] : d.dividends) {
    acc += lemma1_closed_form(d.n_players, s, alpha, c);
  }
  return acc;
}

double synergy_via_decomposition(const Game& g, Coalition c) {
  g.require_coalition(c);
  return synergy_via_decomposition(carrier_decompose(g), c);
}

Game residual_dummy_game(const Game& g) {
  Game add = additive_game(average_impact(g).values);
  return Game(g.n_players(), add.table(),
              g.has_custom_labels() ? g.labels() : std::vector<std::string>{});
}

double surplus_value(const Game& g, Coalition c) {
  g.require_coalition(c);
  double acc = g.value(c);
  for (int i = 0; i < g.n_players(); ++i) {
    if (contains(c, i)) acc -= g.value(singleton(i));
  }
  return acc;
}

std::vector<double> surplus_table(const Game& g) {
  std::vector<double> out(g.table_size(), 0.0);
  std::vector<double> singles(g.table_size(), 0.0);
  for (Coalition c = 1; c < g.table_size(); ++c) {
    int low = std::countr_zero(c);
    singles[c] = singles[without_player(c, low)] + g.value(singleton(low));
    out[c] = g.value(c) - singles[c];
  }
  return out;
}

}  // namespace synval
