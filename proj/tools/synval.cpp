// synval: synergy and average-impact analysis of characteristic-function games.
//
// Exit codes: 0 success, 1 input/parse error, 2 axiom-check failure,
// 3 capacity (a size cap was exceeded).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "synval/axioms.hpp"
#include "synval/game.hpp"
#include "synval/game_io.hpp"
#include "synval/synergy.hpp"
#include "synval/values.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitAxiomFailure = 2;
constexpr int kExitCapacity = 3;

struct CommonOpts {
  std::string input;
  std::string format = "pretty";
  double tol = synval::kDefaultEps;
  std::string algo = "fast";
  std::string missing = "zero";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_algo = true) {
  cmd->add_option("--input", opts.input, "game file to read")->required();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"pretty", "rows", "structured"}))
      ->capture_default_str();
  cmd->add_option("--tol", opts.tol, "comparison tolerance")
      ->envname("SYNVAL_TOL")
      ->capture_default_str();
  if (with_algo) {
    cmd->add_option("--algo", opts.algo, "average-Shapley kernel")
        ->check(CLI::IsMember({"fast", "naive"}))
        ->capture_default_str();
  }
  cmd->add_option("--missing", opts.missing, "policy for absent coalitions")
      ->check(CLI::IsMember({"zero", "strict"}))
      ->capture_default_str();
}

synval::OutputFormat output_format(const CommonOpts& opts) {
  if (opts.format == "rows") return synval::OutputFormat::rows;
  if (opts.format == "structured") return synval::OutputFormat::structured;
  return synval::OutputFormat::pretty;
}

struct LoadedGame {
  synval::Game game;
  std::string digest;
};

LoadedGame load(const CommonOpts& opts) {
  std::ifstream in(opts.input, std::ios::binary);
  if (!in) throw synval::ParseError("cannot open '" + opts.input + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  std::istringstream stream(bytes);
  synval::GameFile f = synval::parse_game_file(stream);
  auto policy = opts.missing == "strict" ? synval::MissingPolicy::strict
                                         : synval::MissingPolicy::zero;
  return LoadedGame{synval::game_from_file(f, policy), synval::digest_hex(bytes)};
}

synval::ImpactVector impact_of(const synval::Game& g, const std::string& algo) {
  if (algo == "naive") {
    synval::ImpactVector out;
    out.kind = synval::ImpactKind::average_shapley;
    for (int i = 0; i < g.n_players(); ++i) {
      out.values.push_back(synval::average_shapley_naive(g, i));
    }
    return out;
  }
  return synval::average_impact(g);
}

synval::OutputTable make_table(const std::string& kind, const CommonOpts& opts,
                               const std::string& digest) {
  synval::OutputTable t;
  t.kind = kind;
  t.add_meta("tool", std::string("synval ") + synval::kToolVersion);
  t.add_meta("tol", synval::format_double(opts.tol));
  t.add_meta("algo", opts.algo);
  t.add_meta("input", digest);
  return t;
}

int cmd_synergy(const CommonOpts& opts) {
  LoadedGame lg = load(opts);
  synval::SynergyTable chi = synval::synergy_table(lg.game, impact_of(lg.game, opts.algo));
  synval::OutputTable t = make_table("synergy", opts, lg.digest);
  if (output_format(opts) == synval::OutputFormat::rows) {
    // plot data: coalition size vs synergy
    for (synval::Coalition c = 1; c < lg.game.table_size(); ++c) {
      t.add_row(std::to_string(synval::coalition_size(c)), chi.chi[c]);
    }
  } else {
    for (synval::Coalition c = 1; c < lg.game.table_size(); ++c) {
      t.add_row(synval::coalition_key(lg.game, c), chi.chi[c]);
    }
  }
  t.add_row("sum", chi.sum());
  t.write(std::cout, output_format(opts));
  return kExitOk;
}

int cmd_shapley(const CommonOpts& opts) {
  LoadedGame lg = load(opts);
  synval::ImpactVector phi = synval::shapley_vector(lg.game);
  synval::OutputTable t = make_table("shapley", opts, lg.digest);
  for (int i = 0; i < lg.game.n_players(); ++i) {
    t.add_row(lg.game.labels()[i], phi.values[i]);
  }
  t.write(std::cout, output_format(opts));
  return kExitOk;
}

int cmd_impact(const CommonOpts& opts) {
  LoadedGame lg = load(opts);
  synval::ImpactVector lam = impact_of(lg.game, opts.algo);
  synval::OutputTable t = make_table("impact", opts, lg.digest);
  for (int i = 0; i < lg.game.n_players(); ++i) {
    t.add_row(lg.game.labels()[i], lam.values[i]);
  }
  t.write(std::cout, output_format(opts));
  return kExitOk;
}

int cmd_classify(const CommonOpts& opts) {
  LoadedGame lg = load(opts);
  synval::OutputTable t = make_table("classify", opts, lg.digest);
  for (const synval::PlayerClass& pc :
       synval::classify_players(lg.game, opts.tol)) {
    const char* cls = pc.is_null ? "null" : pc.is_dummy ? "dummy" : "regular";
    t.add_row(lg.game.labels()[pc.player], std::string(cls));
  }
  t.add_row("non_null",
            synval::coalition_key(lg.game, synval::non_null_players(lg.game, opts.tol)));
  t.write(std::cout, output_format(opts));
  return kExitOk;
}

int cmd_decompose(const CommonOpts& opts) {
  LoadedGame lg = load(opts);
  synval::CarrierDecomposition d = synval::carrier_decompose(lg.game, opts.tol);
  synval::OutputTable t = make_table("decomposition", opts, lg.digest);
  for (const auto& [s, alpha] : d.dividends) {
    t.add_row(synval::coalition_key(lg.game, s), alpha);
  }
  t.write(std::cout, output_format(opts));
  return kExitOk;
}

struct CheckOpts {
  CommonOpts common;
  std::string subject = "synergy";
  std::string axioms;
  bool all_violations = false;
};

std::string counterexample_text(const synval::Game& g,
                                const synval::Counterexample& ce) {
  std::string out = "lhs=" + synval::format_double(ce.lhs) +
                    " rhs=" + synval::format_double(ce.rhs) +
                    " dev=" + synval::format_double(ce.deviation);
  if (ce.player >= 0) out += " player=" + g.labels()[ce.player];
  if (ce.other_player >= 0) out += "," + g.labels()[ce.other_player];
  if (ce.coalition != 0) {
    out += " coalition=" + synval::coalition_key(g, ce.coalition);
  }
  return out;
}

int cmd_check(const CheckOpts& opts) {
  LoadedGame lg = load(opts.common);
  auto subject = synval::parse_subject(opts.subject);
  if (!subject) throw synval::ParseError("unknown subject '" + opts.subject + "'");

  std::vector<synval::Axiom> axioms;
  if (opts.axioms.empty()) {
    axioms = synval::applicable_axioms(*subject);
  } else {
    axioms = synval::parse_axiom_list(opts.axioms);
  }

  synval::CheckOptions check_opts;
  check_opts.eps = opts.common.tol;
  check_opts.all_violations = opts.all_violations;

  // pairwise axioms run against a deterministically constructed partner
  synval::Game partner = synval::default_partner(lg.game);

  synval::OutputTable t = make_table("axiom-report", opts.common, lg.digest);
  t.add_meta("subject", opts.subject);
  bool any_failed = false;
  for (synval::Axiom a : axioms) {
    if (!synval::axiom_applies(a, *subject)) {
      throw synval::ParseError(synval::axiom_name(a) +
                               " does not apply to subject '" + opts.subject + "'");
    }
    const synval::Game* other =
        synval::axiom_is_pairwise(a) ? &partner : nullptr;
    synval::AxiomReport rep =
        synval::check_axiom(a, *subject, lg.game, other, check_opts);
    t.add_row(synval::axiom_name(a), std::string(rep.passed ? "pass" : "fail"));
    for (const synval::Counterexample& ce : rep.counterexamples) {
      t.add_row(synval::axiom_name(a) + ".counterexample",
                counterexample_text(lg.game, ce));
    }
    any_failed = any_failed || !rep.passed;
  }
  t.write(std::cout, output_format(opts.common));
  return any_failed ? kExitAxiomFailure : kExitOk;
}

struct GenOpts {
  std::uint64_t seed = 0;
  int n_players = 3;
  int count = 1;
  std::string dist = "uniform";
  double low = -10.0;
  double high = 10.0;
  int grid_span = 10;
  int terms = 4;
};

int cmd_gen(const GenOpts& opts) {
  auto dist = synval::parse_distribution(opts.dist);
  if (!dist) throw synval::ParseError("unknown distribution '" + opts.dist + "'");
  synval::GeneratorConfig cfg;
  cfg.seed = opts.seed;
  cfg.n_players = opts.n_players;
  cfg.dist = *dist;
  cfg.low = opts.low;
  cfg.high = opts.high;
  cfg.grid_span = opts.grid_span;
  cfg.carrier_terms = opts.terms;
  cfg.count = opts.count;
  std::vector<synval::Game> games = synval::generate_games(cfg);
  for (std::size_t k = 0; k < games.size(); ++k) {
    std::cout << "# game " << k << " (seed " << opts.seed << ", "
              << synval::distribution_name(*dist) << ")\n"
              << synval::save_game(games[k]);
    if (k + 1 < games.size()) std::cout << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synergy and average-impact analysis of cooperative games"};
  app.require_subcommand(1);

  CommonOpts synergy_opts;
  add_common(app.add_subcommand("synergy", "per-coalition synergy table"),
             synergy_opts);

  CommonOpts shapley_opts;
  add_common(app.add_subcommand("shapley", "per-player Shapley values"),
             shapley_opts, /*with_algo=*/false);

  CommonOpts impact_opts;
  add_common(app.add_subcommand("impact", "per-player Average-Impact values"),
             impact_opts);

  CommonOpts classify_opts;
  add_common(app.add_subcommand("classify", "null/dummy player classification"),
             classify_opts, /*with_algo=*/false);

  CommonOpts decompose_opts;
  add_common(app.add_subcommand("decompose", "carrier-game dividends"),
             decompose_opts, /*with_algo=*/false);

  CheckOpts check_opts;
  CLI::App* check = app.add_subcommand("check", "verify axioms against a game");
  add_common(check, check_opts.common, /*with_algo=*/false);
  check->add_option("--subject", check_opts.subject,
                    "measure to check: shapley|impact|synergy|surplus")
      ->capture_default_str();
  check->add_option("--axioms", check_opts.axioms,
                    "axiom list, e.g. 'P8' or 'P5..P10' (default: all applicable)");
  check->add_flag("--all-violations", check_opts.all_violations,
                  "report every violation instead of the first");

  GenOpts gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "generate seeded random games");
  gen->add_option("--seed", gen_opts.seed, "RNG seed")->capture_default_str();
  gen->add_option("--n", gen_opts.n_players, "player count")->capture_default_str();
  gen->add_option("--count", gen_opts.count, "number of games")->capture_default_str();
  gen->add_option("--dist", gen_opts.dist, "uniform|grid|carrier")
      ->check(CLI::IsMember({"uniform", "grid", "carrier"}))
      ->capture_default_str();
  gen->add_option("--low", gen_opts.low, "range lower bound")->capture_default_str();
  gen->add_option("--high", gen_opts.high, "range upper bound")->capture_default_str();
  gen->add_option("--grid-span", gen_opts.grid_span, "integer grid half-width")
      ->capture_default_str();
  gen->add_option("--terms", gen_opts.terms, "carrier-mix dividend count")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
    if (app.got_subcommand("synergy")) return cmd_synergy(synergy_opts);
    if (app.got_subcommand("shapley")) return cmd_shapley(shapley_opts);
    if (app.got_subcommand("impact")) return cmd_impact(impact_opts);
    if (app.got_subcommand("classify")) return cmd_classify(classify_opts);
    if (app.got_subcommand("decompose")) return cmd_decompose(decompose_opts);
    if (app.got_subcommand("check")) return cmd_check(check_opts);
    if (app.got_subcommand("gen")) return cmd_gen(gen_opts);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const synval::CapacityError& e) {
    std::cerr << "synval: error E3 (capacity): " << e.what() << '\n';
    return kExitCapacity;
  } catch (const synval::ParseError& e) {
    std::cerr << "synval: error E1 (input): " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "synval: error E1 (input): " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
