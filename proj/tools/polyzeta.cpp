// polyzeta: bases, rewrite systems and reductions of polyzetas from the command line.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "polyzeta/cache.hpp"
#include "polyzeta/error.hpp"
#include "polyzeta/identify.hpp"
#include "polyzeta/numcheck.hpp"
#include "polyzeta/report.hpp"

using namespace polyzeta;

namespace {

constexpr unsigned kMaxWeight = 16;

struct RunConfig {
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;

  std::string alphabet = "y";
  unsigned max_weight = 0;
  std::string side = "both";

  std::string kind;
  std::string word;
  std::string poly;
  std::optional<unsigned> weight;
  bool lyndon_only = false;
  std::string symbols = "zeta";
  std::string regularization = "stuffle";

  unsigned long n = 1000000;
  double tol = 1e-3;
  int digits = 20;
  bool no_refine = false;
  std::optional<unsigned> finite_part;
};

bool json_out(const RunConfig& c) { return c.format == "json"; }

void emit(const std::string& s) { std::fwrite(s.data(), 1, s.size(), stdout); }

void emit(const json& j) { emit(j.dump(2) + "\n"); }

Alphabet alphabet_of(const RunConfig& c) { return parse_alphabet(c.alphabet); }

void check_weight(unsigned w, unsigned lo) {
  if (w < lo || w > kMaxWeight)
    throw UsageError("invalid weight " + std::to_string(w) + " (expected " + std::to_string(lo) + ".." +
                     std::to_string(kMaxWeight) + ")");
}

Cache make_cache(const RunConfig& c) {
  if (c.no_cache) return Cache();
  return Cache(c.cache_dir.empty() ? Cache::default_dir() : std::filesystem::path(c.cache_dir));
}

std::vector<Alphabet> sides_of(const RunConfig& c) {
  if (c.side == "both") return {Alphabet::Y, Alphabet::X};
  return {parse_alphabet(c.side)};
}

SymbolStyle style_of(const RunConfig& c) { return c.symbols == "basis" ? SymbolStyle::Basis : SymbolStyle::Zeta; }

int cmd_lyndon(const RunConfig& c) {
  check_weight(c.max_weight, 1);
  Alphabet a = alphabet_of(c);
  std::vector<Word> words = lyndon_enumerate(a, c.max_weight);
  if (json_out(c)) {
    json list = json::array();
    for (const Word& w : words) list.push_back({{"word", to_json(w)}, {"weight", w.weight()}, {"pretty", pretty(w)}});
    emit(json{{"alphabet", std::string(1, alphabet_name(a))}, {"max_weight", c.max_weight}, {"count", words.size()}, {"words", list}});
  } else {
    std::string out;
    for (const Word& w : words) out += std::to_string(w.weight()) + "  " + to_string(w) + "  " + pretty(w) + "\n";
    emit(out);
  }
  return 0;
}

int cmd_basis(const RunConfig& c, const Cache& cache) {
  Alphabet a = alphabet_of(c);
  BasisKind k = parse_basis_kind(c.kind);
  if (!basis_defined(a, k)) throw UsageError(basis_name(k) + " is defined on Y-words only");
  std::vector<Word> words;
  if (!c.word.empty()) {
    words.push_back(parse_word(a, c.word));
  } else if (c.weight) {
    check_weight(*c.weight, 1);
    words = c.lyndon_only ? lyndon_of_weight(a, *c.weight) : words_of_weight(a, *c.weight);
  } else {
    throw UsageError("basis needs --word or --weight");
  }
  unsigned top = 0;
  for (const Word& w : words) top = std::max(top, w.weight());
  check_weight(std::max(top, 1u), 1);
  Bases bases;
  cache.prime(bases, top);
  json list = json::array();
  std::string out;
  for (const Word& w : words) {
    const RationalPoly& p = bases.get(k, w);
    if (json_out(c))
      list.push_back({{"word", to_json(w)}, {"value", to_json(p)}, {"text", to_string(p)}});
    else
      out += basis_name(k) + "_" + pretty(w) + " = " + to_string(p) + "\n";
  }
  cache.persist(bases);
  if (json_out(c))
    emit(json{{"alphabet", std::string(1, alphabet_name(a))}, {"kind", basis_name(k)}, {"entries", list}});
  else
    emit(out);
  return 0;
}

int cmd_relations(const RunConfig& c, const Cache& cache) {
  check_weight(c.max_weight, 2);
  Bases bases;
  cache.prime(bases, c.max_weight);
  Identification id = cache.identification(c.max_weight, bases);
  cache.persist(bases);
  std::vector<Alphabet> sides = sides_of(c);
  if (json_out(c)) {
    json list = json::array();
    for (Alphabet a : sides) list.push_back(relations_json(id, a));
    emit(sides.size() == 1 ? list[0] : json{{"max_weight", c.max_weight}, {"sides", list}});
  } else {
    emit(relations_text(id, sides));
  }
  return 0;
}

RationalPoly reduce_input(const RunConfig& c) {
  Alphabet a = alphabet_of(c);
  if (!c.word.empty() && !c.poly.empty()) throw UsageError("give either --word or --poly");
  if (!c.word.empty()) {
    Word w = parse_word(a, c.word);
    if (w.empty()) throw UsageError("empty word");
    return RationalPoly::word(w);
  }
  if (!c.poly.empty()) return parse_polynomial(a, c.poly);
  throw UsageError("reduce needs --word or --poly");
}

int cmd_reduce(const RunConfig& c, const Cache& cache) {
  RationalPoly p = reduce_input(c);
  unsigned w = c.max_weight ? c.max_weight : std::max(2u, p.max_weight());
  check_weight(w, 2);
  Bases bases;
  cache.prime(bases, w);
  Identification id = cache.identification(w, bases);
  CPoly expansion = symbolic_expansion(bases, p);
  CPoly value = reduce_zeta(id, bases, p);
  cache.persist(bases);
  SymbolStyle st = style_of(c);
  if (json_out(c)) {
    emit(json{{"alphabet", std::string(1, alphabet_name(p.alphabet()))},
              {"input", to_json(p)},
              {"expansion", to_json(expansion)},
              {"value", to_json(value)},
              {"text", to_string(value, st)}});
  } else {
    emit(to_string(value, st) + "\n");
  }
  return 0;
}

int cmd_gamma(const RunConfig& c, const Cache& cache) {
  Word w = parse_word(Alphabet::Y, c.word);
  if (w.empty()) throw UsageError("gamma needs a nonempty --word");
  Regularization reg;
  if (c.regularization == "stuffle")
    reg = Regularization::Stuffle;
  else if (c.regularization == "shuffle")
    reg = Regularization::Shuffle;
  else
    throw UsageError("unknown regularization '" + c.regularization + "'");
  unsigned mw = c.max_weight ? c.max_weight : std::max(2u, w.weight());
  check_weight(mw, 2);
  Bases bases;
  cache.prime(bases, mw);
  Identification id = cache.identification(mw, bases);
  BridgeSystem bridge(mw, bases);
  CPoly value = gamma_constant(id, bridge, w, reg);
  cache.persist(bases);
  SymbolStyle st = style_of(c);
  if (json_out(c))
    emit(json{{"word", to_json(w)}, {"regularization", c.regularization}, {"value", to_json(value)}, {"text", to_string(value, st)}});
  else
    emit(to_string(value, st) + "\n");
  return 0;
}

int cmd_verify(const RunConfig& c, const Cache& cache) {
  check_weight(c.max_weight, 2);
  if (c.n == 0) throw UsageError("--n must be positive");
  Bases bases;
  cache.prime(bases, c.max_weight);
  Identification id = cache.identification(c.max_weight, bases);
  std::vector<CPoly> eqs;
  std::vector<const Rule*> rules;
  for (Alphabet a : sides_of(c))
    for (const Rule& r : id.system(a).rules()) {
      eqs.push_back(CPoly(r.lhs) - r.rhs);
      rules.push_back(&r);
    }
  std::vector<NumericCheck> res = verify_relations_numeric(bases, eqs, c.n, c.tol);
  cache.persist(bases);
  bool all = true;
  json list = json::array();
  std::string out;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    all = all && res[i].pass;
    const std::string text = to_string(rules[i]->lhs) + " -> " + to_string(rules[i]->rhs);
    if (json_out(c))
      list.push_back({{"rule", to_json(*rules[i])},
                      {"pass", res[i].pass},
                      {"residual", to_string(res[i].residual, 6)},
                      {"model_error", to_string(res[i].error, 6)}});
    else
      out += std::string(res[i].pass ? "PASS " : "FAIL ") + text + "  residual " + to_string(res[i].residual, 6) + "\n";
  }
  if (json_out(c))
    emit(json{{"max_weight", c.max_weight}, {"n", c.n}, {"tol", c.tol}, {"pass", all}, {"checks", list}});
  else
    emit(out);
  return all ? 0 : 3;
}

int cmd_numcheck(const RunConfig& c) {
  if (c.n == 0) throw UsageError("--n must be positive");
  if (c.digits < 1 || c.digits > 60) throw UsageError("--digits must be in 1..60");
  Composition s = Composition::parse(c.word);
  Real value, error(0);
  std::string method;
  if (c.finite_part) {
    value = finite_part_estimate(s, c.n, *c.finite_part);
    method = "finite-part";
  } else {
    Estimate e = mzv_estimate(s, c.n, !c.no_refine);
    value = e.value;
    error = e.error;
    method = c.no_refine ? "partial-sum" : "richardson";
  }
  if (json_out(c)) {
    json j = {{"composition", to_string(s)}, {"n", c.n}, {"method", method}, {"value", to_string(value, c.digits)}};
    if (!c.finite_part) j["model_error"] = to_string(error, 3);
    emit(j);
  } else {
    emit(to_string(value, c.digits) + "\n");
  }
  return 0;
}

int fail(int code, const char* kind, const std::string& message) {
  json err = {{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{
      "Bases, rewrite systems and reductions of polyzetas.\n"
      "Y-words are compositions \"s1,s2,...\" (y_s1 y_s2 ...); X-words are 0/1 strings (x0 x1 ...).\n"
      "Exit codes: 0 ok, 2 usage error, 3 inconsistency or failed verification."};
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", c.cache_dir, "Cache directory (default $POLYZETA_CACHE_DIR or ~/.cache/polyzeta)");
  app.add_flag("--no-cache", c.no_cache, "Neither read nor write the cache");
  app.require_subcommand(1);
  app.fallthrough();

  auto* lyndon = app.add_subcommand("lyndon", "Lyndon words up to a weight (X: length)");
  lyndon->add_option("--alphabet", c.alphabet, "x or y")->check(CLI::IsMember({"x", "y"}));
  lyndon->add_option("--max-weight", c.max_weight, "Largest weight")->required();

  auto* basis = app.add_subcommand("basis", "Elements of the P, S, Pi or Sigma bases");
  basis->add_option("--kind", c.kind, "P, S, Pi or Sigma")->required()->check(CLI::IsMember({"P", "S", "Pi", "Sigma"}));
  basis->add_option("--alphabet", c.alphabet, "x or y")->check(CLI::IsMember({"x", "y"}));
  basis->add_option("--word", c.word, "Index word");
  basis->add_option("--weight", c.weight, "Every word of this weight");
  basis->add_flag("--lyndon", c.lyndon_only, "With --weight: Lyndon words only");

  auto* relations = app.add_subcommand("relations", "Rewrite systems among local coordinates");
  relations->add_option("--max-weight", c.max_weight, "Largest weight (>= 2)")->required();
  relations->add_option("--side", c.side, "x, y or both")->check(CLI::IsMember({"x", "y", "both"}));

  auto* reduce = app.add_subcommand("reduce", "Canonical form of a convergent polyzeta");
  reduce->add_option("--word", c.word, "Convergent word, e.g. 2,1 or 001");
  reduce->add_option("--poly", c.poly, "Polynomial, e.g. \"[2,1] - 1/2*[3]\"");
  reduce->add_option("--alphabet", c.alphabet, "x or y")->check(CLI::IsMember({"x", "y"}));
  reduce->add_option("--max-weight", c.max_weight, "Weight of the rewrite systems (default: input weight)");
  reduce->add_option("--symbols", c.symbols, "zeta or basis")->check(CLI::IsMember({"zeta", "basis"}));

  auto* gamma = app.add_subcommand("gamma", "Regularized constant of a Y-word");
  gamma->add_option("--word", c.word, "Y-word, e.g. 1,1")->required();
  gamma->add_option("--regularization", c.regularization, "stuffle or shuffle")
      ->check(CLI::IsMember({"stuffle", "shuffle"}));
  gamma->add_option("--max-weight", c.max_weight, "Weight of the rewrite systems (default: word weight)");
  gamma->add_option("--symbols", c.symbols, "zeta or basis")->check(CLI::IsMember({"zeta", "basis"}));

  auto* verify = app.add_subcommand("verify", "Numeric check of every derived rule");
  verify->add_option("--max-weight", c.max_weight, "Largest weight (>= 2)")->required();
  verify->add_option("--side", c.side, "x, y or both")->check(CLI::IsMember({"x", "y", "both"}));
  verify->add_option("--n", c.n, "Truncation of the harmonic sums");
  verify->add_option("--tol", c.tol, "Residual tolerance");

  auto* numcheck = app.add_subcommand("numcheck", "Numeric value of a multiple zeta value");
  numcheck->add_option("--word", c.word, "Composition, e.g. 2,1")->required();
  numcheck->add_option("--n", c.n, "Truncation of the harmonic sums");
  numcheck->add_option("--digits", c.digits, "Printed significant digits");
  numcheck->add_flag("--no-refine", c.no_refine, "Plain partial sum, no Richardson step");
  numcheck->add_option("--finite-part", c.finite_part, "Fit log powers up to this degree (divergent input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "usage", e.what());
  }

  try {
    Cache cache = make_cache(c);
    if (*lyndon) return cmd_lyndon(c);
    if (*basis) return cmd_basis(c, cache);
    if (*relations) return cmd_relations(c, cache);
    if (*reduce) return cmd_reduce(c, cache);
    if (*gamma) return cmd_gamma(c, cache);
    if (*verify) return cmd_verify(c, cache);
    if (*numcheck) return cmd_numcheck(c);
    return fail(2, "usage", "no subcommand");
  } catch (const UsageError& e) {
    return fail(2, "usage", e.what());
  } catch (const InconsistencyError& e) {
    return fail(3, "inconsistency", e.what());
  } catch (const std::exception& e) {
    return fail(3, "internal", e.what());
  }
}
