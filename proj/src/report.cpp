#include "polyzeta/report.hpp"

#include <algorithm>

#include "polyzeta/error.hpp"

namespace polyzeta {

json to_json(const Word& w) { return to_string(w); }

json to_json(const Symbol& s) { return to_string(s); }

json to_json(const Monomial& m) {
  json out = json::array();
  for (const auto& [s, e] : m.factors()) out.push_back(json::array({to_string(s), e}));
  return out;
}

json to_json(const CPoly& p) {
  json out = json::array();
  for (const auto& [m, q] : p) out.push_back({{"coeff", to_string(q)}, {"monomial", to_json(m)}});
  return out;
}

json to_json(const RationalPoly& p) {
  json out = json::array();
  for (const auto& [w, q] : p) out.push_back({{"coeff", to_string(q)}, {"word", to_string(w)}});
  return out;
}

json to_json(const Rule& r) {
  return {{"weight", r.lhs.weight()}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"text", to_string(r.rhs)}};
}

json to_json(const LyndonExpansion& e) {
  json terms = json::array();
  for (const auto& [w, q] : e.terms) {
    json factors = json::array();
    for (const auto& [l, i] : lyndon_factorization_grouped(w)) factors.push_back(json::array({to_string(l), i}));
    terms.push_back({{"coeff", to_string(q)}, {"lyndon", factors}});
  }
  return {{"alphabet", std::string(1, alphabet_name(e.alphabet))},
          {"product", e.product == Product::Shuffle ? "shuffle" : "stuffle"},
          {"terms", terms},
          {"text", to_string(e)}};
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const json& j) {
  if (!j.is_string()) throw UsageError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

}  // namespace

Word word_from_json(Alphabet a, const json& j) { return parse_word(a, str(j)); }

Symbol symbol_from_json(const json& j) { return parse_symbol(str(j)); }

CPoly cpoly_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("polynomial must be a JSON array");
  CPoly out;
  for (const json& t : j) {
    Monomial::Factors f;
    for (const json& e : field(t, "monomial")) {
      if (!e.is_array() || e.size() != 2 || !e[1].is_number_unsigned()) throw UsageError("bad monomial factor " + e.dump());
      f.emplace_back(symbol_from_json(e[0]), e[1].get<unsigned>());
    }
    out.add_term(Monomial(std::move(f)), parse_rational(str(field(t, "coeff"))));
  }
  return out;
}

RationalPoly rational_poly_from_json(Alphabet a, const json& j) {
  if (!j.is_array()) throw UsageError("polynomial must be a JSON array");
  RationalPoly out(a);
  for (const json& t : j) out.add_term(word_from_json(a, field(t, "word")), parse_rational(str(field(t, "coeff"))));
  return out;
}

Rule rule_from_json(const json& j) { return Rule{symbol_from_json(field(j, "lhs")), cpoly_from_json(field(j, "rhs"))}; }

json relations_json(const Identification& id, Alphabet side) {
  const RewriteSystem& rs = id.system(side);
  json weights = json::array();
  for (unsigned k = 2; k <= id.max_weight; ++k) {
    json rules = json::array(), irr = json::array();
    for (const Rule& r : rs.rules_of_weight(k)) rules.push_back(to_json(r));
    for (const Symbol& s : rs.irreducibles_of_weight(k)) irr.push_back(to_json(s));
    weights.push_back({{"weight", k}, {"rules", rules}, {"irreducibles", irr}});
  }
  json irr = json::array();
  for (const Symbol& s : rs.irreducibles()) irr.push_back(to_json(s));
  return {{"side", std::string(1, alphabet_name(side))},
          {"max_weight", id.max_weight},
          {"rule_count", rs.rules().size()},
          {"irreducibles", irr},
          {"weights", weights}};
}

std::string relations_text(const Identification& id, const std::vector<Alphabet>& sides) {
  if (sides.empty()) throw UsageError("no side requested");
  auto header = [](Alphabet a) { return a == Alphabet::Y ? std::string("rewriting on Sigma_l") : std::string("rewriting on S_l"); };
  auto line = [](const Rule& r) { return to_string(r.lhs) + " -> " + to_string(r.rhs); };

  std::vector<std::size_t> width(sides.size());
  for (std::size_t c = 0; c < sides.size(); ++c) {
    width[c] = header(sides[c]).size();
    for (const Rule& r : id.system(sides[c]).rules()) width[c] = std::max(width[c], line(r).size());
  }
  const std::size_t pw = std::max<std::size_t>(2, std::to_string(id.max_weight).size());
  auto pad = [](std::string s, std::size_t n) {
    s.resize(std::max(n, s.size()), ' ');
    return s;
  };
  auto row = [&](const std::string& p, const std::vector<std::string>& cells) {
    std::string out = pad(p.empty() ? p : std::string(pw - p.size(), ' ') + p, pw);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out += " | ";
      out += c + 1 == cells.size() ? cells[c] : pad(cells[c], width[c]);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  auto rule_line = [&]() {
    std::string out(pw + 1, '-');
    for (std::size_t w : width) out += "+" + std::string(w + 2, '-');
    return out + "\n";
  };

  std::string out;
  std::vector<std::string> heads;
  for (Alphabet a : sides) heads.push_back(header(a));
  out += row("p", heads);
  out += rule_line();
  for (unsigned k = 2; k <= id.max_weight; ++k) {
    std::vector<std::vector<Rule>> cols;
    std::size_t n = 0;
    for (Alphabet a : sides) {
      cols.push_back(id.system(a).rules_of_weight(k));
      n = std::max(n, cols.back().size());
    }
    if (n == 0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::string> cells;
      for (const auto& col : cols) cells.push_back(i < col.size() ? line(col[i]) : std::string());
      out += row(i == 0 ? std::to_string(k) : std::string(), cells);
    }
    out += rule_line();
  }
  for (Alphabet a : sides) {
    out += std::string("irreducibles (") + alphabet_name(a) + ", weight <= " + std::to_string(id.max_weight) + "):";
    for (const Symbol& s : id.system(a).irreducibles()) out += " " + to_string(s);
    out += "\n";
  }
  return out;
}

}  // namespace polyzeta
