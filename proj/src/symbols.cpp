#include "polyzeta/symbols.hpp"

#include <algorithm>

#include "polyzeta/error.hpp"

namespace polyzeta {

Symbol Symbol::zs(const Word& l) {
  if (l.alphabet() != Alphabet::X || l.size() < 2 || !is_lyndon(l))
    throw UsageError("ZS needs an X-Lyndon word that is not a letter, got " + pretty(l));
  return Symbol(Kind::ZS, l);
}

Symbol Symbol::zsigma(const Word& l) {
  if (l.alphabet() != Alphabet::Y || l.empty() || !is_lyndon(l) || l == Word::y({1}))
    throw UsageError("ZSigma needs a Y-Lyndon word other than y1, got " + pretty(l));
  return Symbol(Kind::ZSigma, l);
}

Symbol Symbol::of_lyndon(const Word& l) { return l.alphabet() == Alphabet::X ? zs(l) : zsigma(l); }

std::optional<Alphabet> Symbol::side() const {
  switch (kind_) {
    case Kind::ZS: return Alphabet::X;
    case Kind::ZSigma: return Alphabet::Y;
    default: return std::nullopt;
  }
}

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  int r = a.word_.raw_compare(b.word_);
  return r < 0 ? std::strong_ordering::less : r > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string kind_name(Symbol::Kind k) {
  switch (k) {
    case Symbol::Kind::Gamma: return "gamma";
    case Symbol::Kind::ZS: return "S";
    default: return "Sigma";
  }
}

Symbol::Kind parse_kind(std::string_view text) {
  if (text == "gamma") return Symbol::Kind::Gamma;
  if (text == "S") return Symbol::Kind::ZS;
  if (text == "Sigma") return Symbol::Kind::ZSigma;
  throw UsageError("unknown symbol kind '" + std::string(text) + "'");
}

std::string to_string(const Symbol& s, SymbolStyle style) {
  if (s.is_gamma()) return "gamma";
  std::string basis = kind_name(s.kind()) + "[" + to_string(s.word()) + "]";
  if (style == SymbolStyle::Basis) return basis;
  const Word& w = s.word();
  bool single = s.kind() == Symbol::Kind::ZSigma ? w.size() == 1 : w == Word::x_zeta(w.weight());
  return "zeta(" + (single ? std::to_string(w.weight()) : basis) + ")";
}

Symbol parse_symbol(std::string_view text) {
  if (text == "gamma") return Symbol::gamma();
  std::size_t open = text.find('[');
  if (open == std::string_view::npos || text.back() != ']') throw UsageError("malformed symbol '" + std::string(text) + "'");
  Symbol::Kind k = parse_kind(text.substr(0, open));
  std::string_view inner = text.substr(open + 1, text.size() - open - 2);
  if (k == Symbol::Kind::ZS) return Symbol::zs(parse_word(Alphabet::X, inner));
  if (k == Symbol::Kind::ZSigma) return Symbol::zsigma(parse_word(Alphabet::Y, inner));
  throw UsageError("malformed symbol '" + std::string(text) + "'");
}

Monomial::Monomial(const Symbol& s, unsigned exponent) {
  if (exponent > 0) {
    factors_.emplace_back(s, exponent);
    weight_ = s.weight() * exponent;
  }
}

Monomial::Monomial(Factors factors) {
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [s, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == s) {
      factors_.back().second += e;
    } else {
      factors_.emplace_back(s, e);
    }
    weight_ += s.weight() * e;
  }
}

unsigned Monomial::degree(const Symbol& s) const {
  for (const auto& [t, e] : factors_)
    if (t == s) return e;
  return 0;
}

Monomial Monomial::without(const Symbol& s) const {
  Monomial m;
  for (const auto& [t, e] : factors_) {
    if (t == s) continue;
    m.factors_.emplace_back(t, e);
    m.weight_ += t.weight() * e;
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.weight_ = a.weight_ + b.weight_;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
  std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.factors_[i].first <=> b.factors_[i].first; c != 0) return c;
    if (auto c = a.factors_[i].second <=> b.factors_[i].second; c != 0) return c;
  }
  return a.factors_.size() <=> b.factors_.size();
}

CPoly::CPoly(const Rational& q) { add_term(Monomial(), q); }

CPoly::CPoly(const Symbol& s, unsigned exponent) { add_term(Monomial(s, exponent), Rational(1)); }

CPoly::CPoly(const Monomial& m, const Rational& q) { add_term(m, q); }

Rational CPoly::constant_term() const { return coefficient(Monomial()); }

Rational CPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool CPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.weight() == terms_.rbegin()->first.weight();
}

std::optional<unsigned> CPoly::weight() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.weight();
}

unsigned CPoly::degree(const Symbol& s) const {
  unsigned d = 0;
  for (const auto& [m, q] : terms_) d = std::max(d, m.degree(s));
  return d;
}

std::set<Symbol> CPoly::symbols() const {
  std::set<Symbol> out;
  for (const auto& [m, q] : terms_)
    for (const auto& [s, e] : m.factors()) out.insert(s);
  return out;
}

void CPoly::add_term(const Monomial& m, const Rational& q) {
  if (polyzeta::is_zero(q)) return;
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (polyzeta::is_zero(it->second)) terms_.erase(it);
  }
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, Rational(-q));
  return *this;
}

CPoly CPoly::scaled(const Rational& q) const {
  CPoly out;
  if (polyzeta::is_zero(q)) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, Rational(c * q));
  return out;
}

CPoly CPoly::pow(unsigned n) const {
  CPoly out(Rational(1)), base = *this;
  while (n) {
    if (n & 1u) out = out * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return out;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly out;
  for (const auto& [m, p] : a.terms_)
    for (const auto& [n, q] : b.terms_) out.add_term(m * n, Rational(p * q));
  return out;
}

CPoly substitute(const CPoly& p, const Symbol& s, const CPoly& value) {
  if (!value.is_zero() && value.weight() != std::optional<unsigned>(s.weight()))
    throw UsageError("inhomogeneous rule for " + to_string(s));
  CPoly out;
  std::vector<CPoly> powers{CPoly(Rational(1))};
  for (const auto& [m, q] : p) {
    unsigned e = m.degree(s);
    if (e == 0) {
      out.add_term(m, q);
      continue;
    }
    while (powers.size() <= e) powers.push_back(powers.back() * value);
    out += (CPoly(m.without(s), q) * powers[e]);
  }
  return out;
}

std::string to_string(const Monomial& m, SymbolStyle style) {
  std::string out;
  for (const auto& [s, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += to_string(s, style);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const CPoly& p, SymbolStyle style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, q] : p) {
    bool negative = sgn(q) < 0;
    Rational a = abs(q);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (m.is_one()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += to_string(m, style);
    }
    first = false;
  }
  return out;
}

std::vector<std::string> discipline_violations(Alphabet side, std::span<const Rule> rules) {
  std::vector<std::string> out;
  std::set<Symbol> lhs;
  for (const Rule& r : rules) {
    std::string name = to_string(r.lhs);
    if (r.lhs.side() != std::optional<Alphabet>(side)) out.push_back(name + ": left side is not a symbol of this side");
    if (!r.rhs.is_zero() && r.rhs.weight() != std::optional<unsigned>(r.lhs.weight()))
      out.push_back(name + ": right side is not homogeneous of the left side's weight");
    if (!lhs.insert(r.lhs).second) out.push_back(name + ": duplicate left side");
  }
  for (const Rule& r : rules)
    for (const Symbol& s : r.rhs.symbols())
      if (lhs.count(s)) out.push_back(to_string(r.lhs) + ": right side contains reducible symbol " + to_string(s));
  return out;
}

RewriteSystem::RewriteSystem(Alphabet side, std::vector<Rule> rules, std::vector<Symbol> irreducibles,
                             unsigned max_weight)
    : side_(side), rules_(std::move(rules)), irreducibles_(std::move(irreducibles)), max_weight_(max_weight) {
  auto problems = discipline_violations(side_, rules_);
  if (!problems.empty()) throw UsageError("rewrite system rejected: " + problems.front());
  std::stable_sort(rules_.begin(), rules_.end(), [](const Rule& a, const Rule& b) { return a.lhs < b.lhs; });
  std::sort(irreducibles_.begin(), irreducibles_.end());
  for (std::size_t i = 0; i < rules_.size(); ++i) index_.emplace(rules_[i].lhs, i);
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    if (index_.count(irreducibles_[i])) throw UsageError(to_string(irreducibles_[i]) + " is both a rule and irreducible");
    if (i && irreducibles_[i] == irreducibles_[i - 1]) throw UsageError("duplicate irreducible " + to_string(irreducibles_[i]));
  }
}

std::vector<Rule> RewriteSystem::rules_of_weight(unsigned k) const {
  std::vector<Rule> out;
  for (const Rule& r : rules_)
    if (r.lhs.weight() == k) out.push_back(r);
  return out;
}

std::vector<Symbol> RewriteSystem::irreducibles_of_weight(unsigned k) const {
  std::vector<Symbol> out;
  for (const Symbol& s : irreducibles_)
    if (s.weight() == k) out.push_back(s);
  return out;
}

const CPoly* RewriteSystem::rhs_of(const Symbol& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? nullptr : &rules_[it->second].rhs;
}

bool RewriteSystem::is_irreducible(const Symbol& s) const {
  return std::binary_search(irreducibles_.begin(), irreducibles_.end(), s);
}

CPoly normal_form(const CPoly& p, const RewriteSystem& rs) {
  CPoly current = p;
  // Under the discipline one sweep suffices; the bound guards against hand-built systems.
  for (std::size_t round = 0; round <= rs.rules().size() + 1; ++round) {
    std::set<Symbol> reducible;
    for (const Symbol& s : current.symbols())
      if (rs.rhs_of(s)) reducible.insert(s);
    if (reducible.empty()) return current;
    std::map<std::pair<Symbol, unsigned>, CPoly> powers;
    CPoly next;
    for (const auto& [m, q] : current) {
      Monomial rest;
      CPoly factor(Rational(1));
      for (const auto& [s, e] : m.factors()) {
        if (!reducible.count(s)) {
          rest = rest * Monomial(s, e);
          continue;
        }
        auto key = std::make_pair(s, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, rs.rhs_of(s)->pow(e)).first;
        factor = factor * it->second;
      }
      next += CPoly(rest, q) * factor;
    }
    current = std::move(next);
  }
  throw InconsistencyError("normal form did not terminate");
}

}  // namespace polyzeta
