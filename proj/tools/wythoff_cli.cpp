// wythoff: solve Wythoff variants, run verification suites, infer and
// evaluate Fibonacci automata.
//
// exit status: 0 ok, 1 verification failure, 2 usage error, 3 I/O error

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wythoff.hpp"

namespace {

using namespace wythoff;
using json = nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GameArgs {
  std::string game = "K";
  std::optional<nat> ell;
  std::optional<nat> k;
  std::optional<nat> bound;

  GameSpec spec() const {
    if (game == "K") {
      if (k) throw UsageError("--k applies to --game W");
      return GameSpec::terminal(ell.value_or(0));
    }
    if (ell) throw UsageError("--ell applies to --game K");
    if (!k) throw UsageError("--game W needs --k");
    if (*k < 1) throw UsageError("--k must be at least 1");
    return GameSpec::blocking(*k);
  }

  nat bound_or_default(const GameSpec& s) const {
    return bound.value_or(s.is_terminal_variant() ? kDefaultBoundK : kDefaultBoundW);
  }
};

void add_game_options(CLI::App* cmd, GameArgs& g) {
  cmd->add_option("--game", g.game, "K (terminal region) or W (blocking)")->check(CLI::IsMember({"K", "W"}));
  cmd->add_option("--ell", g.ell, "terminal threshold of K^l");
  cmd->add_option("--k", g.k, "blocking budget of W^k");
  cmd->add_option("--bound", g.bound, "board bound B (solves [0,B]^2)");
}

json pairs_json(const GameSpec& spec, nat bound, const PposSequence& s) {
  json j;
  j["game"] = std::string(1, static_cast<char>(spec.variant()));
  j["param"] = spec.param();
  j["bound"] = bound;
  j["pairs"] = json::array();
  for (std::size_t n = 0; n < s.size(); ++n) j["pairs"].push_back({{"n", n}, {"a", s[n].a}, {"b", s[n].b}});
  return j;
}

void write_text(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::ios_base::failure("cannot write " + out);
  f << text;
  if (!f) throw std::ios_base::failure("write failed for " + out);
}

void emit_pairs(const PNTable& t, const std::string& format, const std::string& out) {
  if (format == "cache") {
    if (out.empty() || out == "-") throw UsageError("--format cache needs --out PATH");
    cache::save(t, out);
  } else if (format == "json") {
    write_text(pairs_json(t.spec(), t.bound(), ppos_list(t)).dump(2) + "\n", out);
  } else {
    write_text(to_csv(ppos_list(t)), out);
  }
}

int cmd_solve(const GameArgs& g, const std::string& format, const std::string& out) {
  const auto spec = g.spec();
  const auto bound = g.bound_or_default(spec);
  emit_pairs(solve(spec, bound), format, out);
  return kOk;
}

VerificationReport run_suite(const std::string& suite, const GameArgs& g) {
  if (suite == "all") return suites::all();
  if (suite == "kernel") {
    VerificationReport r;
    if (g.ell || g.k) {
      const auto spec = g.spec();
      return suites::kernel(spec, g.bound_or_default(spec));
    }
    for (nat ell = 1; ell <= 4; ++ell) r.merge(suites::kernel(GameSpec::terminal(ell), g.bound.value_or(kDefaultBoundK)));
    for (nat k = 1; k <= 3; ++k) r.merge(suites::kernel(GameSpec::blocking(k), g.bound.value_or(kDefaultBoundW)));
    return r;
  }
  if (suite == "closed-forms") {
    if (g.ell && (*g.ell < 1 || *g.ell > 4)) throw UsageError("closed-forms: --ell must be 1..4");
    VerificationReport r;
    for (nat ell = g.ell.value_or(1); ell <= g.ell.value_or(4); ++ell)
      r.merge(suites::closed_forms(ell, g.bound.value_or(kDefaultBoundK)));
    return r;
  }
  if (suite == "mex") {
    VerificationReport r;
    for (nat ell = g.ell.value_or(0); ell <= g.ell.value_or(9); ++ell)
      r.merge(suites::mex(ell, g.bound.value_or(kDefaultBoundK)));
    return r;
  }
  if (suite == "blocking") {
    if (g.k && (*g.k < 1 || *g.k > 3)) throw UsageError("blocking: --k must be 1..3");
    VerificationReport r;
    for (nat k = g.k.value_or(1); k <= g.k.value_or(3); ++k)
      r.merge(suites::blocking(k, g.bound.value_or(kDefaultBoundW)));
    return r;
  }
  if (suite == "discrepancy") {
    VerificationReport r;
    for (nat ell = g.ell.value_or(1); ell <= g.ell.value_or(8); ++ell)
      r.merge(suites::discrepancy(ell, g.bound.value_or(kDefaultDiscrepancyHorizon)));
    return r;
  }
  if (suite == "redundancy") {
    if (g.ell || g.k) {
      const auto spec = g.spec();
      return suites::redundancy(spec, g.bound.value_or(kDefaultBoundW));
    }
    VerificationReport r;
    for (nat ell = 1; ell <= 4; ++ell) r.merge(suites::redundancy(GameSpec::terminal(ell), g.bound.value_or(kDefaultBoundW)));
    for (nat k = 2; k <= 3; ++k) r.merge(suites::redundancy(GameSpec::blocking(k), g.bound.value_or(kDefaultBoundW)));
    return r;
  }
  if (suite == "morphic") return suites::morphic(g.bound.value_or(kDefaultMorphicHorizon));
  throw UsageError("unknown suite '" + suite + "'");
}

int cmd_verify(const std::string& suite, const GameArgs& g, const std::string& format) {
  const auto report = run_suite(suite, g);
  if (format == "json") {
    json j = json::array();
    for (const auto& e : report.sorted()) {
      json item{{"name", e.name}, {"spec", e.spec}, {"bound", e.bound}, {"verdict", e.pass ? "PASS" : "FAIL"},
                {"seconds", e.seconds}};
      if (e.counterexample) item["counterexample"] = *e.counterexample;
      j.push_back(item);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    report.print(std::cout);
  }
  return report.passed() ? kOk : kVerifyFailed;
}

Symbols read_symbols(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  Symbols s;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      s.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("input symbol '" + tok + "' is not an integer");
    }
  }
  return s;
}

int cmd_infer(const std::string& input, const std::string& types, bool minimal, const std::string& out) {
  const auto prefix = read_symbols(input);
  InferenceResult r;
  if (types == "auto") {
    r = infer_morphism_auto(prefix);
  } else {
    unsigned t = 0;
    try {
      t = static_cast<unsigned>(std::stoul(types));
    } catch (const std::exception&) {
      throw UsageError("--types must be 'auto' or a positive integer");
    }
    if (t == 0) throw UsageError("--types must be at least 1");
    r = infer_morphism(prefix, t);
  }
  if (const auto* f = std::get_if<InferenceFailure>(&r)) {
    std::cerr << "inference failed: " << f->message << "\n";
    return kVerifyFailed;
  }
  const auto& m = std::get<InferredMorphism>(r);
  auto d = promote(m.mu, m.rho);
  if (minimal) d = minimize(d);
  // Keep stdout clean for the automaton when it goes there.
  std::ostream& info = out.empty() || out == "-" ? std::cerr : std::cout;
  info << "t = " << m.t << ", " << m.mu.alphabet_size() << " letters\n";
  info << "mu:  " << to_string(m.mu) << "\n";
  info << "rho: " << to_string(m.rho) << "\n";
  info << "automaton: " << d.size() << " states\n";
  write_text(to_walnut(d), out);
  return kOk;
}

int cmd_eval(const std::string& path, const std::vector<nat>& ns) {
  const auto d = load_walnut(path);
  for (nat n : ns) std::cout << n << " " << eval_dfao(d, n) << "\n";
  return kOk;
}

std::optional<MorphicWord> known_word(const std::string& name) {
  if (name == "fibonacci") return known::fibonacci_word();
  if (name == "g") return known::g_sequence();
  if (name == "g3") return known::g3_sequence();
  if (name == "g4") return known::g4_sequence();
  if (name == "k1-word") return known::k1_pposition_word();
  if (name == "k2-word") return known::k2_pposition_word();
  if (name == "k3-word") return known::k3_pposition_word();
  return std::nullopt;
}

int cmd_export(const std::string& dfao, const std::string& cache_path, const std::string& format,
               const std::string& out) {
  if (dfao.empty() == cache_path.empty()) throw UsageError("export needs exactly one of --dfao NAME or --cache PATH");
  if (!dfao.empty()) {
    const auto w = known_word(dfao);
    if (!w) throw UsageError("unknown automaton '" + dfao + "'");
    write_text(to_walnut(promote(w->mu, w->coding)), out);
    return kOk;
  }
  emit_pairs(cache::load(cache_path), format == "cache" ? "csv" : format, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wythoff variants: exact solving, verification suites, Fibonacci automata"};
  app.require_subcommand(1);

  GameArgs game;
  std::string format = "csv";
  std::string out;

  auto* solve_cmd = app.add_subcommand("solve", "solve [0,B]^2 and export the non-terminal P-pairs");
  add_game_options(solve_cmd, game);
  solve_cmd->add_option("--out", out, "output path (default stdout)");
  solve_cmd->add_option("--format", format, "csv, json or cache")->check(CLI::IsMember({"csv", "json", "cache"}));

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "kernel, closed-forms, mex, blocking, discrepancy, redundancy, morphic, all")
      ->required();
  add_game_options(verify_cmd, game);
  verify_cmd->add_option("--format", format, "csv (table) or json")->check(CLI::IsMember({"csv", "json"}));

  std::string input;
  std::string types = "auto";
  auto* infer_cmd = app.add_subcommand("infer", "infer a phi-morphism from a symbol sequence");
  infer_cmd->add_option("input", input, "whitespace-separated symbols")->required();
  infer_cmd->add_option("--types", types, "auto or the type depth t");
  bool minimal = false;
  infer_cmd->add_flag("--minimize", minimal, "merge states that agree on every canonical input");
  infer_cmd->add_option("--out", out, "Walnut output path (default stdout)");

  std::string automaton;
  std::vector<nat> ns;
  auto* eval_cmd = app.add_subcommand("eval-dfao", "evaluate a Walnut msd_fib automaton");
  eval_cmd->add_option("automaton", automaton, "Walnut file")->required();
  eval_cmd->add_option("n", ns, "arguments")->required();

  std::string dfao_name, cache_path;
  auto* export_cmd = app.add_subcommand("export", "export a built-in automaton or a cached table");
  export_cmd->add_option("--dfao", dfao_name, "fibonacci, g, g3, g4, k1-word, k2-word, k3-word");
  export_cmd->add_option("--cache", cache_path, "cached table to convert");
  export_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json", "cache"}));
  export_cmd->add_option("--out", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(game, format, out);
    if (*verify_cmd) return cmd_verify(suite, game, format);
    if (*infer_cmd) return cmd_infer(input, types, minimal, out);
    if (*eval_cmd) return cmd_eval(automaton, ns);
    if (*export_cmd) return cmd_export(dfao_name, cache_path, format, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const CacheError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const WalnutFormatError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
