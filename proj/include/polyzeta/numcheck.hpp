#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "polyzeta/bases.hpp"
#include "polyzeta/symbols.hpp"

namespace polyzeta {

// 64 significant decimal digits.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<64>,
                                           boost::multiprecision::et_off>;

Real to_real(const Rational& q);
std::string to_string(const Real& x, int digits = 20);

class Composition {
 public:
  explicit Composition(std::vector<unsigned> parts);
  static Composition parse(std::string_view text);  // "2,1"
  static Composition from_word(const Word& y_word);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned weight() const;
  std::size_t depth() const { return parts_.size(); }
  bool convergent() const { return parts_[0] >= 2; }
  Word to_word() const { return Word(Alphabet::Y, parts_); }
  Composition tail() const;  // (s2, ..., sr); requires depth >= 2

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<unsigned> parts_;
};
std::string to_string(const Composition& s);

// H_s(n) = sum_{n >= n1 > ... > nr >= 1} n1^{-s1} ... nr^{-sr}.
Rational harmonic_sum_exact(const Composition& s, unsigned long n);
Real harmonic_sum(const Composition& s, unsigned long n);

// Single pass over k = 1..max(checkpoints) evaluating every requested composition
// (and its tails) at each checkpoint.
std::map<Composition, std::vector<Real>> harmonic_sums(const std::set<Composition>& comps,
                                                        const std::vector<unsigned long>& checkpoints);

struct Estimate {
  Real value;
  Real error;  // model bound (1 + log n)^depth / n, one power of log less when refined
};

Estimate mzv_estimate(const Composition& s, unsigned long n, bool refine);
std::map<Composition, Estimate> mzv_estimates(const std::set<Composition>& comps, unsigned long n, bool refine);

// H_1(n) - log n - 1/(2n) + 1/(12 n^2).
Real euler_gamma_estimate(unsigned long n);

// Constant term of the expansion of H_s(N) in powers of log N, fitted on N = n, 2n, 4n, ...
// with terms log^j N and log^j N / N, j <= log_degree.
Real finite_part_estimate(const Composition& s, unsigned long n, unsigned log_degree);

// Numeric values of symbols: ZSigma(l) = sum <Sigma_l|w> zeta(w), ZS(l) = sum <S_l|w> zeta(pi_Y w),
// gamma from euler_gamma_estimate.
class NumericEvaluator {
 public:
  NumericEvaluator(Bases& bases, unsigned long n, bool refine = true);

  void require(const CPoly& p);
  void require(const Symbol& s);
  // Evaluates everything required so far (one harmonic-sum pass).
  void run();

  Estimate value(const Symbol& s);
  Estimate value(const CPoly& p);

 private:
  RationalPoly zeta_expansion(const Symbol& s);  // Y-polynomial on convergent words

  Bases& bases_;
  unsigned long n_;
  bool refine_;
  std::set<Composition> pending_;
  std::map<Composition, Estimate> zetas_;
  std::map<Symbol, Estimate> symbols_;
  bool have_gamma_ = false;
  Estimate gamma_;
};

struct NumericCheck {
  bool pass = false;
  Real residual;
  Real error;  // propagated model error, for information
};

NumericCheck verify_relation_numeric(Bases& bases, const CPoly& equation, unsigned long n, double tol);
NumericCheck verify_relation_numeric(Bases& bases, const Rule& rule, unsigned long n, double tol);
std::vector<NumericCheck> verify_relations_numeric(Bases& bases, std::span<const CPoly> equations, unsigned long n,
                                                   double tol);

}  // namespace polyzeta
