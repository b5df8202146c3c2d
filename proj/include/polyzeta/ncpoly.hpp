#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyzeta/error.hpp"
#include "polyzeta/rational.hpp"
#include "polyzeta/words.hpp"

namespace polyzeta {

template <class C>
concept Coefficient = requires(C a, const C& b, const Rational& q) {
  C(q);
  { a += b };
  { a -= b };
  { C(b * b) };
  { C(b * q) };
  { is_zero(b) } -> std::convertible_to<bool>;
};

namespace detail {
template <class C>
bool coefficient_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail

enum class Product : std::uint8_t { Shuffle, Stuffle };

// Word-level products with multiplicities, in GradedLess order.
using WordCounts = std::vector<std::pair<Word, std::uint64_t>>;
WordCounts shuffle_words(const Word& u, const Word& v);
WordCounts stuffle_words(const Word& u, const Word& v);
WordCounts product_words(Product kind, const Word& u, const Word& v);

template <Coefficient C>
class NCPolynomial {
 public:
  using Terms = std::map<Word, C, GradedLess>;

  NCPolynomial() = default;
  explicit NCPolynomial(Alphabet a) : alphabet_(a) {}
  NCPolynomial(const Word& w, C c) : alphabet_(w.alphabet()) { add_term(w, std::move(c)); }

  static NCPolynomial one(Alphabet a) { return NCPolynomial(Word(a), C(Rational(1))); }
  static NCPolynomial word(const Word& w) { return NCPolynomial(w, C(Rational(1))); }

  Alphabet alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  C coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C(Rational(0)) : it->second;
  }
  const C* find(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
  }

  unsigned max_weight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }
  unsigned min_weight() const { return terms_.empty() ? 0 : terms_.begin()->first.weight(); }

  void add_term(const Word& w, const C& c) {
    if (detail::coefficient_is_zero(c)) return;
    if (w.empty() && w.alphabet() != alphabet_ && !terms_.empty()) {
      add_term(Word(alphabet_), c);
      return;
    }
    adopt(w.alphabet());
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (detail::coefficient_is_zero(it->second)) terms_.erase(it);
    }
  }

  NCPolynomial& operator+=(const NCPolynomial& o) {
    check_alphabet(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  NCPolynomial& operator-=(const NCPolynomial& o) {
    check_alphabet(o);
    for (const auto& [w, c] : o.terms_) add_term(w, C(c * Rational(-1)));
    return *this;
  }
  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator-(const NCPolynomial& a) { return a.scaled(Rational(-1)); }

  NCPolynomial scaled(const Rational& q) const {
    NCPolynomial out(alphabet_);
    if (detail::coefficient_is_zero(q)) return out;
    for (const auto& [w, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, C(c * q));
    return out;
  }
  NCPolynomial scaled(const C& k) const
    requires(!std::same_as<C, Rational>)
  {
    NCPolynomial out(alphabet_);
    for (const auto& [w, c] : terms_) out.add_term(w, C(c * k));
    return out;
  }

  // Concatenation product.
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
    a.check_alphabet(b);
    NCPolynomial out(a.alphabet_ == b.alphabet_ || b.is_zero() ? a.alphabet_ : b.alphabet_);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) out.add_term(u * v, C(cu * cv));
    return out;
  }

  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || a.alphabet_ == b.alphabet_);
  }

  void check_alphabet(const NCPolynomial& o) const {
    if (!terms_.empty() && !o.terms_.empty() && alphabet_ != o.alphabet_)
      throw UsageError("polynomials over different alphabets");
  }

 private:
  void adopt(Alphabet a) {
    if (terms_.empty()) {
      alphabet_ = a;
    } else if (a != alphabet_) {
      throw UsageError("polynomials over different alphabets");
    }
  }

  Alphabet alphabet_ = Alphabet::X;
  Terms terms_;
};

using RationalPoly = NCPolynomial<Rational>;

template <Coefficient C>
NCPolynomial<C> conc(const NCPolynomial<C>& a, const NCPolynomial<C>& b) {
  return a * b;
}

template <Coefficient C>
NCPolynomial<C> lie_bracket(const NCPolynomial<C>& a, const NCPolynomial<C>& b) {
  return a * b - b * a;
}

template <Coefficient C>
NCPolynomial<C> product(Product kind, const NCPolynomial<C>& a, const NCPolynomial<C>& b) {
  a.check_alphabet(b);
  Alphabet alpha = a.is_zero() ? b.alphabet() : a.alphabet();
  if (kind == Product::Stuffle && !a.is_zero() && !b.is_zero() && alpha != Alphabet::Y)
    throw UsageError("stuffle is defined on Y only");
  NCPolynomial<C> out(alpha);
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      C k = C(cu * cv);
      for (const auto& [w, n] : product_words(kind, u, v)) out.add_term(w, C(k * rational_from(n)));
    }
  return out;
}

template <Coefficient C>
NCPolynomial<C> shuffle(const NCPolynomial<C>& a, const NCPolynomial<C>& b) {
  return product(Product::Shuffle, a, b);
}

template <Coefficient C>
NCPolynomial<C> stuffle(const NCPolynomial<C>& a, const NCPolynomial<C>& b) {
  return product(Product::Stuffle, a, b);
}

template <Coefficient C>
NCPolynomial<C> power(Product kind, const NCPolynomial<C>& a, unsigned n) {
  NCPolynomial<C> out = NCPolynomial<C>::one(a.alphabet());
  for (unsigned i = 0; i < n; ++i) out = product(kind, out, a);
  return out;
}

template <Coefficient C>
C pairing(const NCPolynomial<C>& t, const NCPolynomial<C>& p) {
  t.check_alphabet(p);
  C sum = C(Rational(0));
  const auto& small = t.size() <= p.size() ? t : p;
  const auto& large = t.size() <= p.size() ? p : t;
  for (const auto& [w, c] : small)
    if (const C* d = large.find(w)) sum += C(c * *d);
  return sum;
}

template <Coefficient C>
NCPolynomial<C> graded_component(const NCPolynomial<C>& p, unsigned k) {
  NCPolynomial<C> out(p.alphabet());
  for (const auto& [w, c] : p)
    if (w.weight() == k) out.add_term(w, c);
  return out;
}

template <Coefficient C>
NCPolynomial<C> truncated(const NCPolynomial<C>& p, unsigned max_weight) {
  NCPolynomial<C> out(p.alphabet());
  for (const auto& [w, c] : p) {
    if (w.weight() > max_weight) break;
    out.add_term(w, c);
  }
  return out;
}

// Applies a linear map word -> polynomial term by term.
template <Coefficient C, class F>
NCPolynomial<C> map_words(const NCPolynomial<C>& p, Alphabet target, F&& image) {
  NCPolynomial<C> out(target);
  for (const auto& [w, c] : p) {
    NCPolynomial<Rational> img = image(w);
    for (const auto& [v, q] : img) out.add_term(v, C(c * q));
  }
  return out;
}

// Pairs (u, v) of nonempty words, weight(u) + weight(v) <= max_weight, where the
// linear form w -> coeff(w) fails to be multiplicative for the given product.
template <class C, class Coeff>
std::vector<std::pair<Word, Word>> character_defects(Alphabet a, Product kind, unsigned max_weight,
                                                     Coeff&& coeff, std::size_t limit = 16) {
  std::vector<std::pair<Word, Word>> defects;
  std::vector<std::vector<Word>> by_weight(max_weight + 1);
  for (unsigned k = 1; k <= max_weight; ++k) by_weight[k] = words_of_weight(a, k);
  for (unsigned i = 1; i < max_weight; ++i)
    for (unsigned j = 1; i + j <= max_weight; ++j)
      for (const Word& u : by_weight[i])
        for (const Word& v : by_weight[j]) {
          C lhs = C(Rational(0));
          for (const auto& [w, n] : product_words(kind, u, v)) lhs += C(coeff(w) * rational_from(n));
          C rhs = C(coeff(u) * coeff(v));
          lhs -= rhs;
          if (!is_zero(lhs)) {
            defects.emplace_back(u, v);
            if (defects.size() >= limit) return defects;
          }
        }
  return defects;
}

template <Coefficient C, class F>
std::string to_string(const NCPolynomial<C>& p, F&& coeff_text) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p) {
    std::string cs = coeff_text(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (w.empty()) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += pretty(w);
    }
    first = false;
  }
  return out;
}

inline std::string to_string(const RationalPoly& p) {
  return to_string(p, [](const Rational& q) { return to_string(q); });
}

// Terms "[coeff*][word]" joined by + or -, words in parse_word() syntax inside brackets:
// "3/2*[2,1] - [3]" on Y, "[011] - 2*[001]" on X. A bare rational is a multiple of the empty word.
RationalPoly parse_polynomial(Alphabet a, std::string_view text);

}  // namespace polyzeta
