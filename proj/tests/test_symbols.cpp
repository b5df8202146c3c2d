#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyzeta/error.hpp"
#include "polyzeta/symbols.hpp"

using namespace polyzeta;

namespace {

Symbol sig(std::initializer_list<unsigned> k) { return Symbol::zsigma(Word::y(k)); }
Symbol s_(std::initializer_list<unsigned> b) { return Symbol::zs(Word::x(b)); }
CPoly P(const Symbol& s, unsigned e = 1) { return CPoly(s, e); }

}  // namespace

TEST_CASE("symbol construction guards") {
  CHECK_THROWS_AS(Symbol::zsigma(Word::y({1})), UsageError);
  CHECK_THROWS_AS(Symbol::zsigma(Word::y({1, 2})), UsageError);
  CHECK_THROWS_AS(Symbol::zs(Word::x({1})), UsageError);
  CHECK_THROWS_AS(Symbol::zs(Word::x({1, 0})), UsageError);
  CHECK(Symbol::zeta(3) == s_({0, 0, 1}));
  CHECK(Symbol::gamma().weight() == 1);
  CHECK(sig({3, 1}).weight() == 4);
}

TEST_CASE("symbol text") {
  CHECK(to_string(sig({2, 1})) == "Sigma[2,1]");
  CHECK(to_string(s_({0, 1, 1})) == "S[011]");
  CHECK(to_string(Symbol::gamma()) == "gamma");
  CHECK(to_string(sig({3}), SymbolStyle::Zeta) == "zeta(3)");
  CHECK(to_string(s_({0, 0, 1}), SymbolStyle::Zeta) == "zeta(3)");
  CHECK(to_string(sig({6, 2}), SymbolStyle::Zeta) == "zeta(Sigma[6,2])");
  for (const Symbol& s : {sig({2, 1}), s_({0, 1, 1}), Symbol::gamma(), sig({6, 2})}) CHECK(parse_symbol(to_string(s)) == s);
  for (const char* bad : {"Sigma[1]", "S[1]", "Sigma[2,1", "Foo[2]", "Sigma[]"}) CHECK_THROWS_AS(parse_symbol(bad), UsageError);
}

TEST_CASE("symbol order is by weight first") {
  CHECK(Symbol::gamma() < sig({2}));
  CHECK(sig({2}) < sig({3}));
  CHECK(sig({3}) < sig({2, 1}));
}

TEST_CASE("commutative arithmetic") {
  CPoly a = P(sig({2})) + P(sig({3})).scaled(Rational(1, 2));
  CPoly b = P(sig({2})) - CPoly(Rational(1));
  CPoly ab = a * b;
  CHECK(ab == b * a);
  CHECK(ab.coefficient(Monomial(sig({2}), 2)) == 1);
  CHECK(ab - a * b == CPoly());
  CHECK(a.pow(3) == a * a * a);
  CHECK_FALSE(ab.is_homogeneous());
  CHECK(a.weight() == std::nullopt);
  CHECK(P(sig({2}), 2).weight() == 4u);
  CHECK(to_string(P(sig({3})).scaled(Rational(3, 2)) - P(sig({2}), 2)) == "3/2*Sigma[3] - Sigma[2]^2");
  CHECK(to_string(CPoly()) == "0");
  CHECK((P(sig({2})) * P(Symbol::gamma())).degree(Symbol::gamma()) == 1);
}

TEST_CASE("substitution") {
  CPoly p = P(sig({2, 1})) * P(sig({2})) + P(Symbol::gamma());
  CPoly q = substitute(p, sig({2, 1}), P(sig({3})).scaled(Rational(3, 2)));
  CHECK(q == P(sig({3})) * P(sig({2})).scaled(Rational(3, 2)) + P(Symbol::gamma()));
  CHECK_THROWS_AS(substitute(p, sig({2, 1}), P(sig({2}))), UsageError);
  double v = evaluate<double>(q, [](const Symbol& s) { return s.is_gamma() ? 0.5 : 2.0; },
                              [](const Rational& r) { return r.get_d(); });
  CHECK(v == doctest::Approx(6.5));
}

TEST_CASE("rewrite system discipline") {
  std::vector<Rule> ok{{sig({2, 1}), P(sig({3})).scaled(Rational(3, 2))}, {sig({4}), P(sig({2}), 2).scaled(Rational(2, 5))}};
  CHECK(discipline_violations(Alphabet::Y, ok).empty());
  RewriteSystem rs(Alphabet::Y, ok, {sig({2}), sig({3})}, 4);
  CHECK(rs.rules().size() == 2);
  CHECK(rs.is_irreducible(sig({2})));
  CHECK(rs.rhs_of(sig({4})) != nullptr);
  CHECK(normal_form(P(sig({2, 1})) * P(sig({4})), rs) == P(sig({3})) * P(sig({2}), 2).scaled(Rational(3, 5)));

  std::vector<Rule> wrong_side{{s_({0, 1, 1}), P(s_({0, 0, 1}))}};
  CHECK_FALSE(discipline_violations(Alphabet::Y, wrong_side).empty());
  std::vector<Rule> inhom{{sig({2, 1}), P(sig({2}))}};
  CHECK_FALSE(discipline_violations(Alphabet::Y, inhom).empty());
  std::vector<Rule> dup{ok[0], ok[0]};
  CHECK_FALSE(discipline_violations(Alphabet::Y, dup).empty());
  std::vector<Rule> nested{{sig({4}), P(sig({2, 1})) * P(Symbol::gamma())}, {sig({2, 1}), P(sig({3}))}};
  CHECK_FALSE(discipline_violations(Alphabet::Y, nested).empty());
  CHECK_THROWS_AS(RewriteSystem(Alphabet::Y, dup, {}, 4), UsageError);
  CHECK_THROWS_AS(RewriteSystem(Alphabet::Y, ok, {sig({4})}, 4), UsageError);
}

TEST_CASE("normal form of irreducible polynomials is the identity") {
  std::vector<Rule> rules{{sig({2, 1}), P(sig({3})).scaled(Rational(3, 2))}};
  RewriteSystem rs(Alphabet::Y, rules, {sig({2}), sig({3})}, 3);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    CPoly p;
    for (int j = 0; j < 4; ++j) {
      Monomial::Factors f;
      if (unsigned e = rng() % 3) f.emplace_back(sig({2}), e);
      if (unsigned e = rng() % 3) f.emplace_back(sig({3}), e);
      p.add_term(Monomial(f), Rational(long(rng() % 7) - 3));
    }
    CHECK(normal_form(p, rs) == p);
  }
}
