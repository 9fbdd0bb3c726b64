#include <doctest.h>

#include "fixtures.hpp"
#include "synval/axioms.hpp"
#include "synval/synergy.hpp"

using namespace synval;
using synval::testing::example1;
using synval::testing::quick_corpus;

TEST_CASE("axiom parsing") {
  CHECK(parse_axiom("P8") == Axiom::P8);
  CHECK(parse_axiom("p13") == Axiom::P13);
  CHECK_FALSE(parse_axiom("P14").has_value());
  CHECK_FALSE(parse_axiom("Q1").has_value());

  std::vector<Axiom> range = parse_axiom_list("P5..P10");
  REQUIRE(range.size() == 6);
  CHECK(range.front() == Axiom::P5);
  CHECK(range.back() == Axiom::P10);

  std::vector<Axiom> list = parse_axiom_list("P1,P3,P8");
  CHECK(list == std::vector<Axiom>{Axiom::P1, Axiom::P3, Axiom::P8});

  CHECK_THROWS_AS(parse_axiom_list("P9..P2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axiom_list(""), std::invalid_argument);
}

TEST_CASE("subject applicability") {
  CHECK(axiom_applies(Axiom::P3, Subject::shapley));
  CHECK_FALSE(axiom_applies(Axiom::P3, Subject::synergy));
  CHECK(axiom_applies(Axiom::P8, Subject::surplus));
  CHECK(axiom_applies(Axiom::P12, Subject::average_impact));
  CHECK(applicable_axioms(Subject::synergy) ==
        std::vector<Axiom>{Axiom::P5, Axiom::P6, Axiom::P7, Axiom::P8, Axiom::P9,
                           Axiom::P10});

  Game g = example1();
  // mismatch is an error, never a vacuous pass
  CHECK_THROWS_AS(check_axiom(Axiom::P3, Subject::synergy, g), std::invalid_argument);
  // pairwise axioms need a second game
  CHECK_THROWS_AS(check_axiom(Axiom::P9, Subject::synergy, g), std::invalid_argument);
  Game mismatch = Game::zero(2);
  CHECK_THROWS_AS(check_axiom(Axiom::P9, Subject::synergy, g, &mismatch),
                  std::invalid_argument);
}

TEST_CASE("synergy axioms hold on the fixture game") {
  Game g = example1();
  Game partner = default_partner(g);
  for (Axiom a : applicable_axioms(Subject::synergy)) {
    AxiomReport rep = check_axiom(a, Subject::synergy, g,
                                  axiom_is_pairwise(a) ? &partner : nullptr);
    CHECK(rep.passed);
    CHECK(rep.counterexamples.empty());
  }
}

TEST_CASE("impact and shapley axioms hold on the fixture game") {
  Game g = example1();
  std::vector<AxiomReport> impact = check_all(Subject::average_impact, g);
  REQUIRE(impact.size() == 3);
  for (const AxiomReport& rep : impact) CHECK(rep.passed);

  std::vector<AxiomReport> shap = check_all(Subject::shapley, g);
  REQUIRE(shap.size() == 4);
  for (const AxiomReport& rep : shap) CHECK(rep.passed);
}

TEST_CASE("zero game passes everything applicable") {
  Game zero = Game::zero(3);
  for (Subject s : {Subject::shapley, Subject::average_impact, Subject::synergy,
                    Subject::surplus}) {
    for (const AxiomReport& rep : check_all(s, zero)) {
      CHECK(rep.passed);
    }
  }
}

TEST_CASE("the surplus baseline fails normalized-synergy on the carrier game") {
  Game carrier = carrier_game(2, 0b11);
  AxiomReport rep = check_axiom(Axiom::P8, Subject::surplus, carrier);
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.counterexamples.size() == 1);
  CHECK(rep.counterexamples[0].lhs == doctest::Approx(1.0));  // the table sum
  CHECK(rep.counterexamples[0].rhs == 0.0);
  CHECK(rep.counterexamples[0].deviation > rep.tolerance);
}

TEST_CASE("surplus is discriminated within a small random batch") {
  int failures = 0;
  for (const Game& g : quick_corpus(3, 100, 12345)) {
    if (!check_axiom(Axiom::P8, Subject::surplus, g).passed) ++failures;
  }
  CHECK(failures > 0);
}

TEST_CASE("P8 tolerance scales with the table size") {
  Game g = example1();
  AxiomReport rep = check_axiom(Axiom::P8, Subject::synergy, g);
  CHECK(rep.tolerance == doctest::Approx(3 * 8 * kDefaultEps));
  AxiomReport single = check_axiom(Axiom::P6, Subject::synergy, g);
  CHECK(single.tolerance == kDefaultEps);
}

TEST_CASE("report order is fixed and counterexamples only appear on failure") {
  Game carrier = carrier_game(2, 0b11);
  std::vector<AxiomReport> reps = check_all(Subject::surplus, carrier);
  REQUIRE(reps.size() == 6);
  for (std::size_t k = 1; k < reps.size(); ++k) {
    CHECK(static_cast<int>(reps[k].axiom) > static_cast<int>(reps[k - 1].axiom));
  }
  for (const AxiomReport& rep : reps) {
    CHECK(rep.passed == rep.counterexamples.empty());
  }
}

TEST_CASE("generator is deterministic") {
  GeneratorConfig cfg;
  cfg.seed = 99;
  cfg.n_players = 4;
  cfg.count = 5;
  for (Distribution d : {Distribution::uniform_range, Distribution::integer_grid,
                         Distribution::sparse_carrier_mix}) {
    cfg.dist = d;
    std::vector<Game> a = generate_games(cfg);
    std::vector<Game> b = generate_games(cfg);
    REQUIRE(a.size() == 5);
    for (int k = 0; k < 5; ++k) CHECK(a[k].table() == b[k].table());
  }
}

TEST_CASE("generator distributions") {
  GeneratorConfig cfg;
  cfg.seed = 7;
  cfg.n_players = 4;
  cfg.count = 10;

  cfg.dist = Distribution::integer_grid;
  cfg.grid_span = 6;
  for (const Game& g : generate_games(cfg)) {
    for (double v : g.table()) {
      CHECK(v == static_cast<double>(static_cast<long long>(v)));
      CHECK(std::abs(v) <= 6);
    }
  }

  cfg.dist = Distribution::sparse_carrier_mix;
  cfg.carrier_terms = 1;
  for (const Game& g : generate_games(cfg)) {
    // one dividend: a weighted carrier game
    CarrierDecomposition d = carrier_decompose(g, 1e-12);
    CHECK(d.dividends.size() <= 1);
  }

  cfg.count = -1;
  CHECK_THROWS_AS(generate_games(cfg), std::invalid_argument);
  cfg.count = 1;
  cfg.low = 5;
  cfg.high = -5;
  cfg.dist = Distribution::uniform_range;
  CHECK_THROWS_AS(generate_games(cfg), std::invalid_argument);
}

TEST_CASE("all-violations collects more than the first") {
  Game carrier = carrier_game(2, 0b11);
  CheckOptions opts;
  opts.all_violations = true;
  AxiomReport rep = check_axiom(Axiom::P8, Subject::surplus, carrier, nullptr, opts);
  CHECK_FALSE(rep.passed);
  CHECK(rep.counterexamples.size() >= 1);
}
