#pragma once

#include <map>

#include "polyzeta/bases.hpp"
#include "polyzeta/ncpoly.hpp"
#include "polyzeta/symbols.hpp"

namespace polyzeta {

using SymbolicPoly = NCPolynomial<CPoly>;

// Noncommutative series with CPoly coefficients, known modulo words of weight > N.
class Series {
 public:
  Series(Alphabet a, unsigned truncation) : truncation_(truncation), terms_(a) {}
  Series(const SymbolicPoly& p, unsigned truncation);

  static Series one(Alphabet a, unsigned truncation);

  Alphabet alphabet() const { return terms_.alphabet(); }
  unsigned truncation() const { return truncation_; }
  const SymbolicPoly& polynomial() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }

  CPoly coefficient(const Word& w) const;
  const CPoly* find(const Word& w) const { return terms_.find(w); }
  void add_term(const Word& w, const CPoly& c);

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }
  friend bool operator==(const Series& a, const Series& b) {
    return a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
  }
  Series scaled(const CPoly& c) const;

  friend Series series_mul(const Series& a, const Series& b);

 private:
  unsigned truncation_;
  SymbolicPoly terms_;
};

Series series_exp(const Series& a);
Series series_log(const Series& a);

enum class MrsBasis : std::uint8_t { P, Pi };

// Decreasing product over Lyndon words l of exp(coeffs[l] * B_l), B = P or Pi, truncated at N.
Series mrs_product(const std::map<Word, CPoly, GradedLess>& coeffs, MrsBasis kind, unsigned N, Bases& bases);
// Same product multiplied out factor by factor with series_exp / series_mul, in the given order.
Series ordered_exponential_product(const std::vector<std::pair<Word, CPoly>>& factors, MrsBasis kind, unsigned N,
                                   Bases& bases);

// Local coordinates ZS(l), l in LynX minus letters / ZSigma(l), l in LynY minus y1, up to weight N.
std::map<Word, CPoly, GradedLess> shuffle_coordinates(unsigned N);
std::map<Word, CPoly, GradedLess> stuffle_coordinates(unsigned N);

Series build_Z_shuffle(unsigned N, Bases& bases);
Series build_Z_stuffle(unsigned N, Bases& bases);
Series build_Z_gamma(unsigned N, Bases& bases);
Series build_Z_gamma(const Series& z_stuffle);

Series B_series(unsigned N);         // exp(gamma y1 - sum_{k>=2} zeta(k) (-y1)^k / k)
Series Bprime_series(unsigned N);    // same without gamma
Series Bx_inverse_series(unsigned N);  // B(x1)^{-1}

Series pi_Y_series(const Series& s);
Series pi_X_series(const Series& s);

bool character_check(const Series& s, Product product);
std::vector<std::pair<Word, Word>> character_violations(const Series& s, Product product, std::size_t limit = 16);

}  // namespace polyzeta
