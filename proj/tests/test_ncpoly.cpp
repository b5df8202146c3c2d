#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyzeta/ncpoly.hpp"
#include "support.hpp"

using namespace polyzeta;

namespace {

RationalPoly Y(std::string_view s) { return parse_polynomial(Alphabet::Y, s); }
RationalPoly X(std::string_view s) { return parse_polynomial(Alphabet::X, s); }

RationalPoly counts_poly(Alphabet a, const WordCounts& c) {
  RationalPoly p(a);
  for (const auto& [w, n] : c) p.add_term(w, rational_from(n));
  return p;
}

}  // namespace

TEST_CASE("small products by hand") {
  CHECK(shuffle(X("[0]"), X("[1]")) == X("[01] + [10]"));
  CHECK(shuffle(X("[01]"), X("[0]")) == X("2*[001] + [010]"));
  CHECK(stuffle(Y("[1]"), Y("[1]")) == Y("2*[1,1] + [2]"));
  CHECK(stuffle(Y("[2]"), Y("[1]")) == Y("[2,1] + [1,2] + [3]"));
  CHECK(stuffle(Y("[1]"), Y("[2,1]")) == Y("[1,2,1] + 2*[2,1,1] + [3,1] + [2,2]"));
}

TEST_CASE("word products agree with the naive recursion") {
  std::mt19937_64 rng(2024);
  int cases = 0;
  for (int i = 0; i < 150; ++i) {
    Word u = gen::random_word(rng, Alphabet::X, 5), v = gen::random_word(rng, Alphabet::X, 5);
    CHECK(counts_poly(Alphabet::X, shuffle_words(u, v)) == oracle::to_poly(Alphabet::X, oracle::shuffle(u.letters(), v.letters())));
    Word s = gen::random_word(rng, Alphabet::Y, 5), t = gen::random_word(rng, Alphabet::Y, 5);
    CHECK(counts_poly(Alphabet::Y, stuffle_words(s, t)) == oracle::to_poly(Alphabet::Y, oracle::stuffle(s.letters(), t.letters())));
    cases += 2;
  }
  CHECK(cases >= 200);
}

TEST_CASE("commutativity and associativity on random polynomials, weight <= 5") {
  std::mt19937_64 rng(99);
  int cases = 0;
  for (int i = 0; i < 120; ++i)
    for (Product k : {Product::Shuffle, Product::Stuffle}) {
      Alphabet a = k == Product::Shuffle ? Alphabet::X : Alphabet::Y;
      RationalPoly p = gen::random_poly(rng, a, 2, 3), q = gen::random_poly(rng, a, 2, 3), r = gen::random_poly(rng, a, 1, 2);
      CHECK(product(k, p, q) == product(k, q, p));
      CHECK(product(k, product(k, p, q), r) == product(k, p, product(k, q, r)));
      // distributivity and unit
      CHECK(product(k, p, q + r) == product(k, p, q) + product(k, p, r));
      CHECK(product(k, p, RationalPoly::one(a)) == p);
      ++cases;
    }
  CHECK(cases >= 200);
}

TEST_CASE("weights add, coefficients sum to multinomials") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    Word u = gen::random_word(rng, Alphabet::X, 5), v = gen::random_word(rng, Alphabet::X, 5);
    std::uint64_t total = 0;
    for (const auto& [w, n] : shuffle_words(u, v)) {
      CHECK(w.weight() == u.weight() + v.weight());
      total += n;
    }
    // binomial(|u|+|v|, |u|)
    std::uint64_t b = 1;
    for (std::size_t j = 1; j <= u.size(); ++j) b = b * (v.size() + j) / j;
    CHECK(total == b);
  }
}

TEST_CASE("pairing, components and truncation") {
  RationalPoly p = Y("1/2*[3] + [2,1] - 3*[1]"), q = Y("2*[3] + [1] + [1,1]");
  CHECK(pairing(p, q) == Rational(1 - 3));
  CHECK(graded_component(p, 3) == Y("1/2*[3] + [2,1]"));
  CHECK(truncated(p, 1) == Y("-3*[1]"));
  CHECK(p.max_weight() == 3);
  CHECK((p - p).is_zero());
  CHECK(lie_bracket(X("[0]"), X("[1]")) == X("[01] - [10]"));
}

TEST_CASE("mixing alphabets is rejected") {
  CHECK_THROWS_AS(shuffle(X("[0]"), Y("[1]")), UsageError);
  CHECK_THROWS_AS((void)(X("[0]") + Y("[1]")), UsageError);
  // the unit is neutral whatever alphabet it was built on
  CHECK(X("[01]") * RationalPoly::one(Alphabet::X) == X("[01]"));
}

TEST_CASE("parser and printer") {
  CHECK(to_string(Y("3/2*[2,1] - [3]")) == "-y3 + 3/2*y2y1");
  CHECK(to_string(X("[011] - 2*[001]")) == "-2*x0^2x1 + x0x1^2");
  CHECK(to_string(Y("1 + [2]")) == "1 + y2");
  CHECK(Y("[2] + [2]") == Y("2*[2]"));
  CHECK(Y("[2] - [2]").is_zero());
  for (const char* bad : {"[2", "3/0*[2]", "2*", "[2] +", "[0]", "* [2]", "1/-2*[2]"}) CHECK_THROWS_AS(Y(bad), UsageError);
}
