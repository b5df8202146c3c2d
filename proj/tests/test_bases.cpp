#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyzeta/bases.hpp"
#include "polyzeta/error.hpp"
#include "support.hpp"

using namespace polyzeta;

namespace {

RationalPoly Y(std::string_view s) { return parse_polynomial(Alphabet::Y, s); }
RationalPoly X(std::string_view s) { return parse_polynomial(Alphabet::X, s); }

// Dense inverse transpose of M[v][w] = <Pi_v|w>: the dual basis without the triangular shortcut.
std::map<Word, RationalPoly, GradedLess> dense_dual(Bases& b, unsigned weight) {
  std::vector<Word> ws = words_of_weight(Alphabet::Y, weight);
  const std::size_t n = ws.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    const RationalPoly& pi = b.Pi(ws[i]);
    for (std::size_t j = 0; j < n; ++j) a[j][i] = pi.coefficient(ws[j]);  // transposed
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (a[r][c] == 0) ++r;
    std::swap(a[r], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == c || a[k][c] == 0) continue;
      Rational f = a[k][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] -= f * a[c][j];
    }
  }
  // Row v of the inverse of M^T gives Sigma_v = sum_w a[v][n + w] w.
  std::map<Word, RationalPoly, GradedLess> out;
  for (std::size_t v = 0; v < n; ++v) {
    RationalPoly s(Alphabet::Y);
    for (std::size_t w = 0; w < n; ++w) s.add_term(ws[w], a[v][n + w]);
    out.emplace(ws[v], s);
  }
  return out;
}

// pi1 straight from the definition, enumerating every tuple of nonempty words.
RationalPoly brute_pi1(const Word& w) {
  RationalPoly out(Alphabet::Y);
  const unsigned n = w.weight();
  std::vector<Word> pool;
  for (unsigned k = 1; k <= n; ++k)
    for (const Word& u : words_of_weight(Alphabet::Y, k)) pool.push_back(u);
  std::vector<std::size_t> idx;
  std::function<void(unsigned, std::vector<Word>&)> rec = [&](unsigned left, std::vector<Word>& tuple) {
    if (left == 0) {
      oracle::Counts prod{{{}, 1}};
      for (const Word& u : tuple) {
        oracle::Counts next;
        for (auto& [x, c] : prod)
          for (auto& [y, d] : oracle::stuffle(x, u.letters())) next[y] += c * d;
        prod = next;
      }
      auto it = prod.find(w.letters());
      if (it == prod.end()) return;
      const long k = static_cast<long>(tuple.size());
      Word cat(Alphabet::Y);
      for (const Word& u : tuple) cat = cat * u;
      out.add_term(cat, Rational(k % 2 ? 1 : -1, k) * Rational(static_cast<long>(it->second)));
      return;
    }
    for (const Word& u : pool) {
      if (u.weight() > left) continue;
      tuple.push_back(u);
      rec(left - u.weight(), tuple);
      tuple.pop_back();
    }
  };
  std::vector<Word> t;
  rec(n, t);
  return out;
}

}  // namespace

TEST_CASE("letters and small elements") {
  Bases b;
  CHECK(b.P(Word::x({0, 1})) == X("[01] - [10]"));
  CHECK(b.S(Word::x({0, 1})) == X("[01]"));
  CHECK(b.Pi(Word::y({2})) == Y("[2] - 1/2*[1,1]"));
  CHECK(b.Pi(Word::y({1})) == Y("[1]"));
  CHECK(b.Sigma(Word::y({1, 1})) == Y("1/2*[2] + [1,1]"));
  CHECK(b.Sigma(Word::y({2, 1})) == Y("1/2*[3] + [2,1]"));
  CHECK(b.P(Word::x({0, 1, 1})) == X("[011] - 2*[101] + [110]"));
  CHECK(b.S(Word::x({0, 0, 1, 0, 1})) == X("2*[00011] + [00101]"));
  CHECK(b.S(Word::x({0, 0, 1, 1, 0, 1})) == X("6*[000111] + 3*[001011] + [001101]"));
  CHECK_THROWS_AS(b.Pi(Word::x({0, 1})), UsageError);
}

TEST_CASE("duality on every weight up to 5") {
  Bases b;
  for (unsigned k = 1; k <= 5; ++k) {
    for (auto [a, dual, prim] : {std::tuple{Alphabet::X, BasisKind::S, BasisKind::P}, std::tuple{Alphabet::Y, BasisKind::Sigma, BasisKind::Pi}}) {
      std::vector<Word> ws = words_of_weight(a, k);
      for (const Word& u : ws)
        for (const Word& v : ws) CHECK(pairing(b.get(dual, u), b.get(prim, v)) == (u == v ? 1 : 0));
    }
  }
}

TEST_CASE("triangularity: P and Pi rise, S and Sigma fall") {
  Bases b;
  for (unsigned k = 1; k <= 6; ++k) {
    for (const Word& w : words_of_weight(Alphabet::X, k)) {
      CHECK(b.P(w).coefficient(w) == 1);
      CHECK(b.S(w).coefficient(w) == 1);
      for (const auto& [v, c] : b.P(w)) CHECK(compare(v, w) >= 0);
      for (const auto& [v, c] : b.S(w)) CHECK(compare(v, w) <= 0);
    }
    for (const Word& w : words_of_weight(Alphabet::Y, k)) {
      for (const auto& [v, c] : b.Pi(w)) CHECK(compare(v, w) >= 0);
      for (const auto& [v, c] : b.Sigma(w)) CHECK(compare(v, w) <= 0);
    }
  }
}

TEST_CASE("Sigma agrees with a dense inversion of the Pi matrix") {
  Bases b;
  for (unsigned k = 1; k <= 6; ++k)
    for (const auto& [w, s] : dense_dual(b, k)) CHECK_MESSAGE(b.Sigma(w) == s, pretty(w));
}

TEST_CASE("Sigma of a non-Lyndon word is the normalized stuffle power product") {
  Bases b;
  for (unsigned k = 2; k <= 6; ++k)
    for (const Word& w : words_of_weight(Alphabet::Y, k)) {
      if (is_lyndon(w)) continue;
      RationalPoly p = RationalPoly::one(Alphabet::Y);
      Rational d(1);
      for (const auto& [l, i] : lyndon_factorization_grouped(w)) {
        p = stuffle(p, power(Product::Stuffle, b.Sigma(l), i));
        d *= factorial(i);
      }
      CHECK_MESSAGE(b.Sigma(w) == p.scaled(1 / d), pretty(w));
    }
}

TEST_CASE("pi1 matches its definition") {
  for (unsigned k = 1; k <= 5; ++k)
    for (const Word& w : words_of_weight(Alphabet::Y, k)) CHECK_MESSAGE(pi1_word(w) == brute_pi1(w), pretty(w));
}

TEST_CASE("pi1 is a projector onto primitives") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    Word u = gen::random_word(rng, Alphabet::Y, 3, true), v = gen::random_word(rng, Alphabet::Y, 3, true);
    // primitive for the dual of the stuffle: orthogonal to every product of nonempty words
    const RationalPoly uv = stuffle(RationalPoly::word(u), RationalPoly::word(v));
    for (const Word& w : words_of_weight(Alphabet::Y, u.weight() + v.weight())) CHECK(pairing(pi1_word(w), uv) == 0);
    RationalPoly p = pi1_word(u);
    CHECK(pi1(p) == p);
  }
}

TEST_CASE("Pi on letters is pi1; Pi on Lyndon words is bracketed") {
  Bases b;
  for (unsigned k = 1; k <= 6; ++k) CHECK(b.Pi(Word::y({k})) == pi1_word(Word::y({k})));
  for (const Word& l : lyndon_enumerate(Alphabet::Y, 6)) {
    if (l.size() < 2) continue;
    auto [l1, l2] = standard_factorization(l);
    CHECK(b.Pi(l) == lie_bracket(b.Pi(l1), b.Pi(l2)));
  }
}

TEST_CASE("Lyndon decompositions round trip") {
  Bases b;
  LyndonExpansion e = decompose_stuffle(b, RationalPoly::word(Word::y({2, 1})));
  CHECK(to_string(e) == "-1/2*Sigma[3] + Sigma[2,1]");
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    RationalPoly p = gen::random_poly(rng, Alphabet::Y, 5, 3);
    CHECK(expand(b, decompose_stuffle(b, p)) == p);
    RationalPoly q = gen::random_poly(rng, Alphabet::X, 5, 3);
    CHECK(expand(b, decompose_shuffle(b, q)) == q);
  }
  // an element of the Lyndon basis decomposes to itself
  LyndonExpansion one = decompose_shuffle(b, b.S(Word::x({0, 1, 1})));
  CHECK(one.terms.size() == 1);
  CHECK(one.terms.begin()->first == Word::x({0, 1, 1}));
}

TEST_CASE("concurrent readers see one table") {
  Bases b;
  const RationalPoly& first = b.Sigma(Word::y({3, 1}));
  const RationalPoly& again = b.Sigma(Word::y({3, 1}));
  CHECK(&first == &again);
  CHECK(b.table(Alphabet::Y, BasisKind::Sigma).complete_weights.count(4));
}
