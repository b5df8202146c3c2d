#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polyzeta/rational.hpp"
#include "polyzeta/words.hpp"

namespace polyzeta {

// gamma, zeta(S_l) for X-Lyndon l not a letter, zeta(Sigma_l) for Y-Lyndon l != y1.
class Symbol {
 public:
  enum class Kind : std::uint8_t { Gamma, ZS, ZSigma };

  static Symbol gamma() { return Symbol(Kind::Gamma, Word(Alphabet::Y)); }
  static Symbol zs(const Word& l);
  static Symbol zsigma(const Word& l);
  // zeta(k) in its shuffle encoding ZS(x0^{k-1}x1).
  static Symbol zeta(unsigned k) { return zs(Word::x_zeta(k)); }
  // ZS for X-words, ZSigma for Y-words.
  static Symbol of_lyndon(const Word& l);

  Kind kind() const { return kind_; }
  const Word& word() const { return word_; }
  unsigned weight() const { return kind_ == Kind::Gamma ? 1 : word_.weight(); }
  bool is_gamma() const { return kind_ == Kind::Gamma; }
  std::optional<Alphabet> side() const;

  friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b);
  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.kind_ == b.kind_ && a.word_ == b.word_;
  }

 private:
  Symbol(Kind k, Word w) : kind_(k), word_(std::move(w)) {}
  Kind kind_;
  Word word_;
};

enum class SymbolStyle : std::uint8_t {
  Basis,  // gamma, S[011], Sigma[2,1]
  Zeta,   // gamma, zeta(3), zeta(S[0111]), zeta(Sigma[6,2])
};
std::string to_string(const Symbol& s, SymbolStyle style = SymbolStyle::Basis);
std::string kind_name(Symbol::Kind k);  // "gamma", "S", "Sigma"
Symbol::Kind parse_kind(std::string_view text);
// Inverse of to_string(s, Basis).
Symbol parse_symbol(std::string_view text);

// Commutative monomial: symbols with positive exponents, sorted ascending.
class Monomial {
 public:
  using Factors = std::vector<std::pair<Symbol, unsigned>>;

  Monomial() = default;
  explicit Monomial(const Symbol& s, unsigned exponent = 1);
  explicit Monomial(Factors factors);

  const Factors& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned weight() const { return weight_; }
  unsigned degree(const Symbol& s) const;
  // Factor with the given symbol removed (exponent set to zero).
  Monomial without(const Symbol& s) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  Factors factors_;
  unsigned weight_ = 0;
};

// Polynomial in symbols with exact rational coefficients.
class CPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  CPoly() = default;
  explicit CPoly(const Rational& q);
  explicit CPoly(const Symbol& s, unsigned exponent = 1);
  CPoly(const Monomial& m, const Rational& q);

  const Terms& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  bool is_homogeneous() const;
  // Weight of a nonzero homogeneous polynomial.
  std::optional<unsigned> weight() const;
  unsigned degree(const Symbol& s) const;
  bool contains(const Symbol& s) const { return degree(s) > 0; }
  std::set<Symbol> symbols() const;

  void add_term(const Monomial& m, const Rational& q);
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const CPoly& o) { return *this = *this * o; }
  CPoly scaled(const Rational& q) const;
  CPoly pow(unsigned n) const;

  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator-(const CPoly& a) { return a.scaled(Rational(-1)); }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(const CPoly& a, const Rational& q) { return a.scaled(q); }
  friend bool operator==(const CPoly& a, const CPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

inline bool is_zero(const CPoly& p) { return p.is_zero(); }

// Replaces every occurrence of s; value must be homogeneous of weight(s).
CPoly substitute(const CPoly& p, const Symbol& s, const CPoly& value);

template <class T, class F, class R>
T evaluate(const CPoly& p, F&& value_of, R&& from_rational) {
  T total = T(0);
  for (const auto& [m, q] : p) {
    T term = from_rational(q);
    for (const auto& [s, e] : m.factors()) {
      T v = value_of(s);
      for (unsigned i = 0; i < e; ++i) term *= v;
    }
    total += term;
  }
  return total;
}

std::string to_string(const Monomial& m, SymbolStyle style = SymbolStyle::Basis);
std::string to_string(const CPoly& p, SymbolStyle style = SymbolStyle::Basis);

struct Rule {
  Symbol lhs;
  CPoly rhs;
};

// Problems with a rule set: wrong side, inhomogeneous rhs, duplicate lhs, a lhs inside some rhs.
std::vector<std::string> discipline_violations(Alphabet side, std::span<const Rule> rules);

// Frozen rule set for one side. Rules are sorted by (weight, lhs); no lhs occurs in any rhs.
class RewriteSystem {
 public:
  explicit RewriteSystem(Alphabet side = Alphabet::Y) : side_(side) {}
  RewriteSystem(Alphabet side, std::vector<Rule> rules, std::vector<Symbol> irreducibles, unsigned max_weight);

  Alphabet side() const { return side_; }
  const std::vector<Rule>& rules() const { return rules_; }
  std::vector<Rule> rules_of_weight(unsigned k) const;
  const std::vector<Symbol>& irreducibles() const { return irreducibles_; }
  std::vector<Symbol> irreducibles_of_weight(unsigned k) const;
  unsigned max_weight() const { return max_weight_; }

  const CPoly* rhs_of(const Symbol& s) const;
  bool is_irreducible(const Symbol& s) const;

 private:
  Alphabet side_;
  std::vector<Rule> rules_;
  std::vector<Symbol> irreducibles_;
  unsigned max_weight_ = 0;
  std::map<Symbol, std::size_t> index_;
};

CPoly normal_form(const CPoly& p, const RewriteSystem& rs);

}  // namespace polyzeta
