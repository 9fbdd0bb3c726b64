#include "synval/axioms.hpp"

#include <cmath>
#include <random>

#include "synval/synergy.hpp"
#include "synval/values.hpp"

namespace synval {

std::string axiom_name(Axiom a) {
  return "P" + std::to_string(static_cast<int>(a));
}

std::optional<Axiom> parse_axiom(std::string_view s) {
  if (s.size() < 2 || (s[0] != 'P' && s[0] != 'p')) return std::nullopt;
  int num = 0;
  for (char ch : s.substr(1)) {
    if (ch < '0' || ch > '9') return std::nullopt;
    num = num * 10 + (ch - '0');
  }
  if (num < 1 || num > 13) return std::nullopt;
  return static_cast<Axiom>(num);
}

std::vector<Axiom> parse_axiom_list(std::string_view s) {
  std::vector<Axiom> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos
                                             ? std::string_view::npos
                                             : comma - pos);
    std::size_t dots = tok.find("..");
    if (dots != std::string_view::npos) {
      auto lo = parse_axiom(tok.substr(0, dots));
      auto hi = parse_axiom(tok.substr(dots + 2));
      if (!lo || !hi || static_cast<int>(*lo) > static_cast<int>(*hi)) {
        throw std::invalid_argument("bad axiom range: " + std::string(tok));
      }
      for (int a = static_cast<int>(*lo); a <= static_cast<int>(*hi); ++a) {
        out.push_back(static_cast<Axiom>(a));
      }
    } else if (!tok.empty()) {
      auto a = parse_axiom(tok);
      if (!a) throw std::invalid_argument("bad axiom id: " + std::string(tok));
      out.push_back(*a);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty axiom list");
  return out;
}

std::string subject_name(Subject s) {
  switch (s) {
    case Subject::shapley: return "shapley";
    case Subject::average_impact: return "impact";
    case Subject::synergy: return "synergy";
    case Subject::surplus: return "surplus";
  }
  return "?";
}

std::optional<Subject> parse_subject(std::string_view s) {
  if (s == "shapley") return Subject::shapley;
  if (s == "impact" || s == "average_impact") return Subject::average_impact;
  if (s == "synergy") return Subject::synergy;
  if (s == "surplus") return Subject::surplus;
  return std::nullopt;
}

bool axiom_applies(Axiom a, Subject s) {
  int id = static_cast<int>(a);
  switch (s) {
    case Subject::shapley: return id <= 4;
    case Subject::synergy:
    case Subject::surplus: return id >= 5 && id <= 10;
    case Subject::average_impact: return id >= 11;
  }
  return false;
}

bool axiom_is_pairwise(Axiom a) {
  return a == Axiom::P4 || a == Axiom::P9 || a == Axiom::P10 || a == Axiom::P13;
}

std::vector<Axiom> applicable_axioms(Subject s) {
  std::vector<Axiom> out;
  for (int id = 1; id <= 13; ++id) {
    Axiom a = static_cast<Axiom>(id);
    if (axiom_applies(a, s)) out.push_back(a);
  }
  return out;
}

Game default_partner(const Game& g) {
  // Subtracting the restriction to {0} changes only player 0's marginals, so
  // P10/P13 get a non-vacuous hypothesis over all of {1..n-1}.
  return restrict_subtract(g, singleton(0));
}

namespace {

struct Reporter {
  AxiomReport rep;
  bool all_violations;

  bool done() const { return !all_violations && !rep.counterexamples.empty(); }

  void compare(double lhs, double rhs, double eps, Coalition c, int i, int j) {
    if (approx_equal(lhs, rhs, eps)) return;
    Counterexample ce;
    ce.coalition = c;
    ce.player = i;
    ce.other_player = j;
    ce.lhs = lhs;
    ce.rhs = rhs;
    ce.deviation = std::abs(lhs - rhs);
    rep.counterexamples.push_back(ce);
  }
};

std::vector<double> synergy_measure(Subject s, const Game& g) {
  if (s == Subject::surplus) return surplus_table(g);
  return synergy_table(g).chi;
}

// whether every marginal contribution of `player` agrees between a and b
bool marginals_agree(const Game& a, const Game& b, int player, double eps) {
  Coalition bit = singleton(player);
  for (Coalition c = 0; c < a.table_size(); ++c) {
    if (c & bit) continue;
    double ma = a.value(c | bit) - a.value(c);
    double mb = b.value(c | bit) - b.value(c);
    if (!approx_equal(ma, mb, eps)) return false;
  }
  return true;
}

void check_p1(const Game& g, Reporter& r, double eps) {
  ImpactVector phi = shapley_vector(g);
  for (int i = 0; i < g.n_players() && !r.done(); ++i) {
    for (int j = i + 1; j < g.n_players() && !r.done(); ++j) {
      if (!are_symmetric(g, i, j, eps)) continue;
      r.compare(phi.values[i], phi.values[j], eps, 0, i, j);
    }
  }
}

void check_p2(const Game& g, Reporter& r, double eps) {
  ImpactVector phi = shapley_vector(g);
  for (int i = 0; i < g.n_players() && !r.done(); ++i) {
    if (is_null(g, i, eps)) r.compare(phi.values[i], 0.0, eps, 0, i, -1);
  }
}

void check_p3(const Game& g, Reporter& r, double eps) {
  ImpactVector phi = shapley_vector(g);
  r.compare(phi.sum(), g.value(g.grand_coalition()), eps, g.grand_coalition(), -1, -1);
}

void check_p4(const Game& a, const Game& b, Reporter& r, double eps) {
  ImpactVector pa = shapley_vector(a);
  ImpactVector pb = shapley_vector(b);
  ImpactVector psum = shapley_vector(add_games(a, b));
  for (int i = 0; i < a.n_players() && !r.done(); ++i) {
    r.compare(psum.values[i], pa.values[i] + pb.values[i], eps, 0, i, -1);
  }
}

void check_p5(const Game& g, Subject s, Reporter& r, double eps) {
  std::vector<double> chi = synergy_measure(s, g);
  for (int i = 0; i < g.n_players() && !r.done(); ++i) {
    for (int j = i + 1; j < g.n_players() && !r.done(); ++j) {
      if (!are_symmetric(g, i, j, eps)) continue;
      Coalition both = singleton(i) | singleton(j);
      for (Coalition c = 0; c < g.table_size() && !r.done(); ++c) {
        if (c & both) continue;
        r.compare(chi[with_player(c, i)], chi[with_player(c, j)], eps, c, i, j);
      }
    }
  }
}

void check_p6(const Game& g, Subject s, Reporter& r, double eps) {
  std::vector<double> chi = synergy_measure(s, g);
  for (int i = 0; i < g.n_players() && !r.done(); ++i) {
    if (!is_null(g, i, eps)) continue;
    Coalition bit = singleton(i);
    for (Coalition c = 0; c < g.table_size() && !r.done(); ++c) {
      if (c & bit) continue;
      r.compare(chi[c], chi[c | bit], eps, c, i, -1);
    }
  }
}

void check_p7(const Game& g, Subject s, Reporter& r, double eps) {
  std::vector<double> chi = synergy_measure(s, g);
  std::vector<double> residual(g.table_size());
  for (Coalition c = 0; c < g.table_size(); ++c) {
    residual[c] = g.value(c) - chi[c];
  }
  for (int i = 0; i < g.n_players() && !r.done(); ++i) {
    Coalition bit = singleton(i);
    double solo = residual[bit];
    for (Coalition c = 0; c < g.table_size() && !r.done(); ++c) {
      if (c & bit) continue;
      r.compare(residual[c | bit], residual[c] + solo, eps, c, i, -1);
    }
  }
}

void check_p8(const Game& g, Subject s, Reporter& r, double scaled_eps) {
  std::vector<double> chi = synergy_measure(s, g);
  r.compare(compensated_sum(chi), 0.0, scaled_eps, 0, -1, -1);
}

void check_p9(const Game& a, const Game& b, Subject s, Reporter& r, double eps) {
  std::vector<double> ca = synergy_measure(s, a);
  std::vector<double> cb = synergy_measure(s, b);
  std::vector<double> csum = synergy_measure(s, add_games(a, b));
  for (Coalition c = 0; c < a.table_size() && !r.done(); ++c) {
    r.compare(csum[c], ca[c] + cb[c], eps, c, -1, -1);
  }
}

void check_p10(const Game& a, const Game& b, Subject s, Reporter& r, double eps) {
  std::vector<double> ca = synergy_measure(s, a);
  std::vector<double> cb = synergy_measure(s, b);
  Coalition agreeing = 0;
  for (int i = 0; i < a.n_players(); ++i) {
    if (marginals_agree(a, b, i, eps)) agreeing |= singleton(i);
  }
  for (Coalition c = 0; c < a.table_size() && !r.done(); ++c) {
    if (!is_subset(c, agreeing)) continue;  // hypothesis: all members agree
    r.compare(ca[c], cb[c], eps, c, -1, -1);
  }
}

void check_p11(const Game& g, Reporter& r, double eps) {
  ImpactVector lam = average_impact(g);
  for (int i = 0; i < g.n_players() && !r.done(); ++i) {
    for (int j = i + 1; j < g.n_players() && !r.done(); ++j) {
      if (!are_symmetric(g, i, j, eps)) continue;
      r.compare(lam.values[i], lam.values[j], eps, 0, i, j);
    }
  }
}

void check_p12(const Game& g, Reporter& r, double scaled_eps) {
  ImpactVector lam = average_impact(g);
  double lhs = 0.5 * lam.sum();
  double rhs = std::ldexp(compensated_sum(g.table()), -g.n_players());
  r.compare(lhs, rhs, scaled_eps, 0, -1, -1);
}

void check_p13(const Game& a, const Game& b, Reporter& r, double eps) {
  ImpactVector la = average_impact(a);
  ImpactVector lb = average_impact(b);
  for (int i = 0; i < a.n_players() && !r.done(); ++i) {
    if (!marginals_agree(a, b, i, eps)) continue;
    r.compare(la.values[i], lb.values[i], eps, 0, i, -1);
  }
}

}  // namespace

AxiomReport check_axiom(Axiom a, Subject s, const Game& g, const Game* other,
                        const CheckOptions& opts) {
  if (!axiom_applies(a, s)) {
    throw std::invalid_argument(axiom_name(a) + " does not apply to subject " +
                                subject_name(s));
  }
  if (axiom_is_pairwise(a)) {
    if (other == nullptr) {
      throw std::invalid_argument(axiom_name(a) + " needs a pair of games");
    }
    if (other->n_players() != g.n_players()) {
      throw std::invalid_argument("paired games must share the player count");
    }
  }

  Reporter r{{}, opts.all_violations};
  r.rep.axiom = a;
  r.rep.subject = s;

  // 2^n-term sum axioms get a domain-size-scaled tolerance
  double scaled =
      opts.eps * g.n_players() * static_cast<double>(g.table_size());
  r.rep.tolerance = (a == Axiom::P8 || a == Axiom::P12) ? scaled : opts.eps;

  switch (a) {
    case Axiom::P1: check_p1(g, r, opts.eps); break;
    case Axiom::P2: check_p2(g, r, opts.eps); break;
    case Axiom::P3: check_p3(g, r, opts.eps); break;
    case Axiom::P4: check_p4(g, *other, r, opts.eps); break;
    case Axiom::P5: check_p5(g, s, r, opts.eps); break;
    case Axiom::P6: check_p6(g, s, r, opts.eps); break;
    case Axiom::P7: check_p7(g, s, r, opts.eps); break;
    case Axiom::P8: check_p8(g, s, r, scaled); break;
    case Axiom::P9: check_p9(g, *other, s, r, opts.eps); break;
    case Axiom::P10: check_p10(g, *other, s, r, opts.eps); break;
    case Axiom::P11: check_p11(g, r, opts.eps); break;
    case Axiom::P12: check_p12(g, r, scaled); break;
    case Axiom::P13: check_p13(g, *other, r, opts.eps); break;
  }
  r.rep.passed = r.rep.counterexamples.empty();
  return r.rep;
}

std::vector<AxiomReport> check_all(Subject s, const Game& g, const Game* other,
                                   const CheckOptions& opts) {
  std::optional<Game> partner;
  std::vector<AxiomReport> out;
  for (Axiom a : applicable_axioms(s)) {
    const Game* pair = other;
    if (axiom_is_pairwise(a) && pair == nullptr) {
      if (!partner) partner = default_partner(g);
      pair = &*partner;
    }
    out.push_back(check_axiom(a, s, g, pair, opts));
  }
  return out;
}

std::optional<Distribution> parse_distribution(std::string_view s) {
  if (s == "uniform") return Distribution::uniform_range;
  if (s == "grid") return Distribution::integer_grid;
  if (s == "carrier") return Distribution::sparse_carrier_mix;
  return std::nullopt;
}

std::string distribution_name(Distribution d) {
  switch (d) {
    case Distribution::uniform_range: return "uniform";
    case Distribution::integer_grid: return "grid";
    case Distribution::sparse_carrier_mix: return "carrier";
  }
  return "?";
}

namespace {

// mt19937_64 with explicit output mapping, so sequences are identical across
// standard libraries
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace

std::vector<Game> generate_games(const GeneratorConfig& cfg) {
  if (cfg.n_players < 1 || cfg.n_players > kMaxPlayers) {
    throw std::invalid_argument("generator: invalid player count");
  }
  if (cfg.count < 0 || cfg.low > cfg.high || cfg.grid_span < 0 ||
      cfg.carrier_terms < 1) {
    throw std::invalid_argument("generator: invalid distribution parameters");
  }
  Rng rng(cfg.seed);
  std::size_t table = std::size_t{1} << cfg.n_players;
  std::vector<Game> out;
  out.reserve(cfg.count);
  for (int k = 0; k < cfg.count; ++k) {
    std::vector<double> values(table, 0.0);
    switch (cfg.dist) {
      case Distribution::uniform_range:
        for (Coalition c = 1; c < table; ++c) {
          values[c] = rng.uniform(cfg.low, cfg.high);
        }
        break;
      case Distribution::integer_grid:
        for (Coalition c = 1; c < table; ++c) {
          values[c] = static_cast<double>(
              static_cast<long long>(rng.below(2 * cfg.grid_span + 1)) -
              cfg.grid_span);
        }
        break;
      case Distribution::sparse_carrier_mix:
        for (int t = 0; t < cfg.carrier_terms; ++t) {
          Coalition s = static_cast<Coalition>(1 + rng.below(table - 1));
          double alpha = rng.uniform(cfg.low, cfg.high);
          for (Coalition c = s; c < table; ++c) {
            if (is_subset(s, c)) values[c] += alpha;
          }
        }
        break;
    }
    values[0] = 0.0;
    out.emplace_back(cfg.n_players, std::move(values));
  }
  return out;
}

}  // namespace synval
