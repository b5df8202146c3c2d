#include "polyzeta/series.hpp"

#include <algorithm>

#include "polyzeta/error.hpp"

namespace polyzeta {

Series::Series(const SymbolicPoly& p, unsigned truncation) : truncation_(truncation), terms_(p.alphabet()) {
  for (const auto& [w, c] : p) add_term(w, c);
}

Series Series::one(Alphabet a, unsigned truncation) {
  Series s(a, truncation);
  s.add_term(Word(a), CPoly(Rational(1)));
  return s;
}

CPoly Series::coefficient(const Word& w) const {
  const CPoly* c = terms_.find(w);
  return c ? *c : CPoly();
}

void Series::add_term(const Word& w, const CPoly& c) {
  if (w.weight() <= truncation_) terms_.add_term(w, c);
}

Series operator+(const Series& a, const Series& b) {
  Series out(a.alphabet(), std::min(a.truncation_, b.truncation_));
  for (const auto& [w, c] : a) out.add_term(w, c);
  for (const auto& [w, c] : b) out.add_term(w, c);
  return out;
}

Series operator-(const Series& a, const Series& b) {
  Series out(a.alphabet(), std::min(a.truncation_, b.truncation_));
  for (const auto& [w, c] : a) out.add_term(w, c);
  for (const auto& [w, c] : b) out.add_term(w, -c);
  return out;
}

Series Series::scaled(const CPoly& k) const {
  Series out(alphabet(), truncation_);
  for (const auto& [w, c] : terms_) out.add_term(w, c * k);
  return out;
}

Series series_mul(const Series& a, const Series& b) {
  a.terms_.check_alphabet(b.terms_);
  const unsigned n = std::min(a.truncation_, b.truncation_);
  Series out(a.size() ? a.alphabet() : b.alphabet(), n);
  for (const auto& [u, cu] : a) {
    if (u.weight() > n) break;
    for (const auto& [v, cv] : b) {
      if (u.weight() + v.weight() > n) break;
      out.terms_.add_term(u * v, cu * cv);
    }
  }
  return out;
}

Series series_exp(const Series& a) {
  if (!a.coefficient(Word(a.alphabet())).is_zero()) throw UsageError("series_exp needs a series without constant term");
  Series out = Series::one(a.alphabet(), a.truncation());
  Series term = out;
  for (unsigned k = 1; k <= a.truncation(); ++k) {
    term = (term * a).scaled(CPoly(Rational(1, k)));
    if (term.size() == 0) break;
    out = out + term;
  }
  return out;
}

Series series_log(const Series& a) {
  if (a.coefficient(Word(a.alphabet())) != CPoly(Rational(1))) throw UsageError("series_log needs constant term 1");
  Series b = a - Series::one(a.alphabet(), a.truncation());
  Series out(a.alphabet(), a.truncation());
  Series power = Series::one(a.alphabet(), a.truncation());
  for (unsigned k = 1; k <= a.truncation(); ++k) {
    power = power * b;
    if (power.size() == 0) break;
    out = out + power.scaled(CPoly(Rational(k % 2 ? 1 : -1, k)));
  }
  return out;
}

namespace {

const RationalPoly& basis_of(Bases& bases, MrsBasis kind, const Word& w) {
  return kind == MrsBasis::P ? bases.P(w) : bases.Pi(w);
}

void check_coordinate(const Word& l, const CPoly& c, MrsBasis kind) {
  if (l.empty() || !is_lyndon(l)) throw UsageError("MRS coordinate indexed by a non-Lyndon word " + pretty(l));
  if (kind == MrsBasis::Pi && l.alphabet() != Alphabet::Y) throw UsageError("Pi coordinates live on Y");
  if (!c.is_zero() && c.weight() != std::optional<unsigned>(l.weight()))
    throw UsageError("coordinate of " + pretty(l) + " is not homogeneous of weight " + std::to_string(l.weight()));
}

}  // namespace

Series mrs_product(const std::map<Word, CPoly, GradedLess>& coeffs, MrsBasis kind, unsigned N, Bases& bases) {
  Alphabet a = kind == MrsBasis::Pi ? Alphabet::Y : (coeffs.empty() ? Alphabet::X : coeffs.begin()->first.alphabet());
  std::vector<std::pair<Word, const CPoly*>> lyn;
  for (const auto& [l, c] : coeffs) {
    check_coordinate(l, c, kind);
    if (l.alphabet() != a) throw UsageError("MRS coordinates over mixed alphabets");
    if (!c.is_zero() && l.weight() <= N) lyn.emplace_back(l, &c);
  }
  // Expanding the product gives sum_w c^w / (i1!...ik!) B_w over words whose decreasing
  // factorization uses only the given Lyndon words.
  std::sort(lyn.begin(), lyn.end(), [](const auto& x, const auto& y) { return x.first.raw_compare(y.first) > 0; });
  Series out(a, N);
  struct Frame {
    std::size_t next;
    unsigned weight;
    Word word;
    CPoly coeff;
    unsigned run;       // multiplicity of the last factor
    std::size_t last;   // index of the last factor
  };
  std::vector<Frame> stack{{0, 0, Word(a), CPoly(Rational(1)), 0, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const RationalPoly& bw = basis_of(bases, kind, f.word);
    for (const auto& [v, q] : bw) out.add_term(v, f.coeff.scaled(q));
    for (std::size_t i = f.next; i < lyn.size(); ++i) {
      const auto& [l, c] = lyn[i];
      if (f.weight + l.weight() > N) continue;
      unsigned run = (i == f.last && f.run > 0) ? f.run + 1 : 1;
      CPoly coeff = (f.coeff * *c).scaled(Rational(1, run));
      stack.push_back(Frame{i, f.weight + l.weight(), f.word * l, std::move(coeff), run, i});
    }
  }
  return out;
}

Series ordered_exponential_product(const std::vector<std::pair<Word, CPoly>>& factors, MrsBasis kind, unsigned N,
                                   Bases& bases) {
  Alphabet a = kind == MrsBasis::Pi ? Alphabet::Y : (factors.empty() ? Alphabet::X : factors.front().first.alphabet());
  Series out = Series::one(a, N);
  for (const auto& [l, c] : factors) {
    check_coordinate(l, c, kind);
    if (l.weight() > N || c.is_zero()) continue;
    Series arg(a, N);
    for (const auto& [v, q] : basis_of(bases, kind, l)) arg.add_term(v, c.scaled(q));
    out = out * series_exp(arg);
  }
  return out;
}

std::map<Word, CPoly, GradedLess> shuffle_coordinates(unsigned N) {
  std::map<Word, CPoly, GradedLess> out;
  for (const Word& l : lyndon_enumerate(Alphabet::X, N))
    if (l.size() >= 2) out.emplace(l, CPoly(Symbol::zs(l)));
  return out;
}

std::map<Word, CPoly, GradedLess> stuffle_coordinates(unsigned N) {
  std::map<Word, CPoly, GradedLess> out;
  for (const Word& l : lyndon_enumerate(Alphabet::Y, N))
    if (!(l == Word::y({1}))) out.emplace(l, CPoly(Symbol::zsigma(l)));
  return out;
}

Series build_Z_shuffle(unsigned N, Bases& bases) {
  if (N == 0) throw UsageError("truncation must be positive");
  return mrs_product(shuffle_coordinates(N), MrsBasis::P, N, bases);
}

Series build_Z_stuffle(unsigned N, Bases& bases) {
  if (N == 0) throw UsageError("truncation must be positive");
  return mrs_product(stuffle_coordinates(N), MrsBasis::Pi, N, bases);
}

Series build_Z_gamma(const Series& z_stuffle) {
  Series g(Alphabet::Y, z_stuffle.truncation());
  g.add_term(Word::y({1}), CPoly(Symbol::gamma()));
  return series_exp(g) * z_stuffle;
}

Series build_Z_gamma(unsigned N, Bases& bases) { return build_Z_gamma(build_Z_stuffle(N, bases)); }

namespace {

// gamma t - sum_{k>=2} zeta(k) (-t)^k / k as a series in the single letter t.
Series b_exponent(Alphabet a, unsigned letter, unsigned N, bool with_gamma) {
  Series e(a, N);
  Word t = Word(a, {letter});
  if (with_gamma) e.add_term(t, CPoly(Symbol::gamma()));
  Word power = t;
  for (unsigned k = 2; k <= N; ++k) {
    power = power * t;
    e.add_term(power, CPoly(Symbol::zeta(k)).scaled(Rational(k % 2 ? 1 : -1, k)));
  }
  return e;
}

}  // namespace

Series B_series(unsigned N) { return series_exp(b_exponent(Alphabet::Y, 1, N, true)); }

Series Bprime_series(unsigned N) { return series_exp(b_exponent(Alphabet::Y, 1, N, false)); }

Series Bx_inverse_series(unsigned N) {
  Series e = b_exponent(Alphabet::X, 1, N, true);
  return series_exp(e.scaled(CPoly(Rational(-1))));
}

Series pi_Y_series(const Series& s) {
  Series out(Alphabet::Y, s.truncation());
  for (const auto& [w, c] : s)
    if (auto y = pi_Y(w)) out.add_term(*y, c);
  return out;
}

Series pi_X_series(const Series& s) {
  Series out(Alphabet::X, s.truncation());
  for (const auto& [w, c] : s) out.add_term(pi_X(w), c);
  return out;
}

std::vector<std::pair<Word, Word>> character_violations(const Series& s, Product product, std::size_t limit) {
  if (s.coefficient(Word(s.alphabet())) != CPoly(Rational(1)))
    throw UsageError("character check needs constant term 1");
  return character_defects<CPoly>(s.alphabet(), product, s.truncation(),
                                  [&](const Word& w) { return s.coefficient(w); }, limit);
}

bool character_check(const Series& s, Product product) { return character_violations(s, product, 1).empty(); }

}  // namespace polyzeta
