#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "polyzeta/error.hpp"
#include "polyzeta/series.hpp"

using namespace polyzeta;

namespace {

CPoly S(std::initializer_list<unsigned> b) { return CPoly(Symbol::zs(Word::x(b))); }
CPoly Sig(std::initializer_list<unsigned> k) { return CPoly(Symbol::zsigma(Word::y(k))); }
CPoly G() { return CPoly(Symbol::gamma()); }
CPoly Q(long p, long q = 1) { return CPoly(Rational(p, q)); }

}  // namespace

TEST_CASE("exp and log are inverse") {
  Series a(Alphabet::Y, 5);
  a.add_term(Word::y({1}), G());
  a.add_term(Word::y({2}), Sig({2}));
  a.add_term(Word::y({2, 1}), Q(3));
  Series e = series_exp(a);
  CHECK(series_log(e) == a);
  CHECK(e.coefficient(Word::y({1, 1})) == G() * G() * Q(1, 2));
  CHECK_THROWS_AS(series_exp(Series::one(Alphabet::Y, 3)), UsageError);
  CHECK_THROWS_AS(series_log(a), UsageError);
}

TEST_CASE("truncation drops heavy words") {
  Series a(Alphabet::X, 2);
  a.add_term(Word::x({0, 1, 1}), Q(1));
  CHECK(a.size() == 0);
  Series b(Alphabet::X, 3), c(Alphabet::X, 2);
  b.add_term(Word::x({0}), Q(1));
  c.add_term(Word::x({1}), Q(1));
  CHECK((b * c).truncation() == 2);
}

TEST_CASE("closed-form product matches ordered exponentials in decreasing order") {
  Bases bases;
  for (unsigned N : {4u, 5u}) {
    for (MrsBasis kind : {MrsBasis::P, MrsBasis::Pi}) {
      auto coords = kind == MrsBasis::P ? shuffle_coordinates(N) : stuffle_coordinates(N);
      std::vector<std::pair<Word, CPoly>> dec(coords.begin(), coords.end());
      std::sort(dec.begin(), dec.end(), [](const auto& x, const auto& y) { return compare(x.first, y.first) > 0; });
      Series fast = mrs_product(coords, kind, N, bases);
      CHECK(fast == ordered_exponential_product(dec, kind, N, bases));
      // the increasing product differs once a commutator fits under the truncation (weight 5)
      std::vector<std::pair<Word, CPoly>> inc(dec.rbegin(), dec.rend());
      CHECK((fast == ordered_exponential_product(inc, kind, N, bases)) == (N < 5));
    }
  }
}

TEST_CASE("coordinates must be Lyndon and homogeneous") {
  Bases bases;
  std::map<Word, CPoly, GradedLess> bad{{Word::x({1, 0}), Q(1)}};
  CHECK_THROWS_AS(mrs_product(bad, MrsBasis::P, 3, bases), UsageError);
  std::map<Word, CPoly, GradedLess> inhom{{Word::x({0, 1}), Q(1)}};
  CHECK_THROWS_AS(mrs_product(inhom, MrsBasis::P, 3, bases), UsageError);
}

TEST_CASE("generating series are characters up to N = 6") {
  Bases bases;
  Series zsh = build_Z_shuffle(6, bases), zst = build_Z_stuffle(6, bases);
  CHECK(character_violations(zsh, Product::Shuffle).empty());
  CHECK(character_violations(zst, Product::Stuffle).empty());
  CHECK(character_check(build_Z_gamma(zst), Product::Stuffle));
  // a perturbed series is caught
  Series broken = zst;
  broken.add_term(Word::y({2, 2}), Q(1));
  CHECK_FALSE(character_check(broken, Product::Stuffle));
}

TEST_CASE("low-weight coefficients") {
  Bases bases;
  Series zsh = build_Z_shuffle(4, bases);
  CHECK(zsh.coefficient(Word::x({0})).is_zero());
  CHECK(zsh.coefficient(Word::x({1})).is_zero());
  CHECK(zsh.coefficient(Word::x({0, 1})) == S({0, 1}));
  CHECK(zsh.coefficient(Word::x({1, 0})) == -S({0, 1}));
  CHECK(zsh.coefficient(Word::x({0, 1, 1})) == S({0, 1, 1}));
  Series zst = build_Z_stuffle(4, bases);
  CHECK(zst.coefficient(Word::y({1})).is_zero());
  CHECK(zst.coefficient(Word::y({2, 1})) == Sig({2, 1}) - Sig({3}) * Rational(1, 2));
  Series zg = build_Z_gamma(zst);
  CHECK(zg.coefficient(Word::y({1})) == G());
  CHECK(zg.coefficient(Word::y({1, 1})) == G() * G() * Rational(1, 2) - Sig({2}) * Rational(1, 2));
}

TEST_CASE("B series") {
  Series b = B_series(4);
  CHECK(b.coefficient(Word::y({1})) == G());
  CPoly z2(Symbol::zeta(2));
  CHECK(b.coefficient(Word::y({1, 1})) == G() * G() * Rational(1, 2) - z2 * Rational(1, 2));
  // only powers of y1 occur
  for (const auto& [w, c] : b)
    for (unsigned l : w.letters()) CHECK(l == 1);
  Series g(Alphabet::Y, 4);
  g.add_term(Word::y({1}), G());
  CHECK(series_exp(g) * Bprime_series(4) == b);
  Series bx = Bx_inverse_series(4);
  CHECK(bx.coefficient(Word::x({1})) == -G());
  CHECK(bx.coefficient(Word::x({1, 1})) == G() * G() * Rational(1, 2) + z2 * Rational(1, 2));
  CHECK(bx.coefficient(Word::x({0})).is_zero());
}

TEST_CASE("projections of series") {
  Series s(Alphabet::X, 3);
  s.add_term(Word::x({0, 1}), Q(2));
  s.add_term(Word::x({1, 0}), Q(5));
  Series y = pi_Y_series(s);
  CHECK(y.size() == 1);
  CHECK(y.coefficient(Word::y({2})) == Q(2));
  CHECK(pi_X_series(y).coefficient(Word::x({0, 1})) == Q(2));
}
