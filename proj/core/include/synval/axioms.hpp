#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synval/game.hpp"

namespace synval {

/// The thirteen properties: P1-P4 are the Shapley axioms, P5-P10 constrain
/// synergy measures, P11-P13 constrain average-impact measures.
enum class Axiom {
  P1 = 1, P2, P3, P4, P5, P6, P7, P8, P9, P10, P11, P12, P13,
};

enum class Subject { shapley, average_impact, synergy, surplus };

std::string axiom_name(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view s);
/// Parses "P8", "P5,P8", or the range form "P5..P10".
std::vector<Axiom> parse_axiom_list(std::string_view s);

std::string subject_name(Subject s);
std::optional<Subject> parse_subject(std::string_view s);

bool axiom_applies(Axiom a, Subject s);
/// P4, P9, P10 and P13 quantify over pairs of games.
bool axiom_is_pairwise(Axiom a);
std::vector<Axiom> applicable_axioms(Subject s);

struct Counterexample {
  Coalition coalition = 0;
  int player = -1;
  int other_player = -1;
  double lhs = 0.0;
  double rhs = 0.0;
  double deviation = 0.0;
};

struct AxiomReport {
  Axiom axiom = Axiom::P1;
  Subject subject = Subject::synergy;
  bool passed = false;
  double tolerance = 0.0;
  std::vector<Counterexample> counterexamples;  // empty iff passed
};

struct CheckOptions {
  double eps = kDefaultEps;
  bool all_violations = false;  // default: stop at the first
};

/// Exhaustively checks one axiom's quantifier domain. Pairwise axioms require
/// `other`; an axiom/subject mismatch throws rather than passing vacuously.
/// P10/P13 quantify over an infinite class of second games, so a pass against
/// any finite set of constructed pairs is evidence, not proof, for those two.
AxiomReport check_axiom(Axiom a, Subject s, const Game& g,
                        const Game* other = nullptr,
                        const CheckOptions& opts = {});

/// Every axiom applicable to the subject, in P1..P13 order. When `other` is
/// absent, pairwise axioms run against default_partner(g).
std::vector<AxiomReport> check_all(Subject s, const Game& g,
                                   const Game* other = nullptr,
                                   const CheckOptions& opts = {});

/// Deterministic second game for pairwise axioms: restrict_subtract(g, {0}),
/// which alters only player 0's marginals. That is exactly the hypothesis
/// class of P10/P13 for every other player.
Game default_partner(const Game& g);

enum class Distribution { uniform_range, integer_grid, sparse_carrier_mix };

std::optional<Distribution> parse_distribution(std::string_view s);
std::string distribution_name(Distribution d);

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int n_players = 3;
  Distribution dist = Distribution::uniform_range;
  double low = -10.0;
  double high = 10.0;
  int grid_span = 10;      // integer-grid values drawn from [-span, span]
  int carrier_terms = 4;   // dividends per sparse-carrier-mix game
  int count = 1;
};

/// Seeded, reproducible game sequence. Identical configs yield identical
/// games; sparse-carrier-mix games are reconstructed from randomly drawn
/// dividends, so their ground-truth decomposition is known.
std::vector<Game> generate_games(const GeneratorConfig& cfg);

}  // namespace synval
