#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "polyzeta/error.hpp"
#include "polyzeta/words.hpp"
#include "support.hpp"

using namespace polyzeta;

TEST_CASE("letter order on both alphabets") {
  CHECK(compare(Word::x({0}), Word::x({1})) < 0);
  CHECK(compare(Word::y({1}), Word::y({2})) > 0);
  CHECK(compare(Word::y({2}), Word::y({3})) > 0);
  // proper prefix is smaller
  CHECK(compare(Word::x({0}), Word::x({0, 0})) < 0);
  CHECK(compare(Word::y({2}), Word::y({2, 1})) < 0);
  CHECK(compare(Word(Alphabet::Y), Word::y({5})) < 0);
  CHECK_THROWS_AS((void)compare(Word::x({0}), Word::y({1})), UsageError);
}

TEST_CASE("weight and accessors") {
  Word w = Word::y({3, 1, 2});
  CHECK(w.weight() == 6);
  CHECK(w.size() == 3);
  CHECK(w[0] == 3);
  CHECK(w.letters() == std::vector<unsigned>{3, 1, 2});
  CHECK(w.prefix(2) == Word::y({3, 1}));
  CHECK(w.suffix_from(1) == Word::y({1, 2}));
  CHECK(Word::x({0, 0, 1}).weight() == 3);
  CHECK(Word::x_zeta(4) == Word::x({0, 0, 0, 1}));
  CHECK_THROWS_AS(Word::y({0}), UsageError);
  CHECK_THROWS_AS(Word::x({2}), UsageError);
}

TEST_CASE("convergence") {
  CHECK(is_convergent(Word::x({0, 1})));
  CHECK_FALSE(is_convergent(Word::x({1, 1})));
  CHECK_FALSE(is_convergent(Word::x({0, 0})));
  CHECK(is_convergent(Word::y({2, 1})));
  CHECK_FALSE(is_convergent(Word::y({1, 2})));
  CHECK(is_convergent(Word(Alphabet::Y)));
}

TEST_CASE("Duval agrees with the rotation definition on every word of weight <= 8") {
  for (Alphabet a : {Alphabet::X, Alphabet::Y})
    for (unsigned n = 1; n <= 8; ++n)
      for (const Word& w : words_of_weight(a, n)) CHECK_MESSAGE(is_lyndon(w) == oracle::lyndon(a, w.letters()), pretty(w));
  CHECK_THROWS_AS((void)is_lyndon(Word(Alphabet::X)), UsageError);
}

TEST_CASE("Lyndon counts follow the necklace formula") {
  // binary Lyndon words of length n; Lyndon compositions of n have the same counts
  const std::vector<std::size_t> expected{2, 1, 2, 3, 6, 9, 18, 30};
  for (unsigned n = 1; n <= 8; ++n) {
    CHECK(lyndon_of_weight(Alphabet::X, n).size() == expected[n - 1]);
    CHECK(lyndon_of_weight(Alphabet::Y, n).size() == (n == 1 ? 1 : expected[n - 1]));
  }
  CHECK(lyndon_enumerate(Alphabet::X, 3).size() == 5);
}

TEST_CASE("enumerations are sorted and complete") {
  for (Alphabet a : {Alphabet::X, Alphabet::Y}) {
    std::vector<Word> all = lyndon_enumerate(a, 7);
    CHECK(std::is_sorted(all.begin(), all.end(), GradedLess{}));
    for (unsigned n = 1; n <= 7; ++n) {
      std::vector<Word> ws = words_of_weight(a, n);
      CHECK(ws.size() == (a == Alphabet::X ? (1u << n) : (1u << (n - 1))));
      for (std::size_t i = 1; i < ws.size(); ++i) CHECK(compare(ws[i - 1], ws[i]) < 0);
    }
  }
}

TEST_CASE("standard factorization") {
  auto [a, b] = standard_factorization(Word::x({0, 0, 1, 0, 1}));
  CHECK(a == Word::x({0, 0, 1}));
  CHECK(b == Word::x({0, 1}));
  auto [c, d] = standard_factorization(Word::y({3, 1, 2}));
  CHECK(c == Word::y({3, 1}));
  CHECK(d == Word::y({2}));
  for (const Word& l : lyndon_enumerate(Alphabet::X, 8)) {
    if (l.size() < 2) continue;
    auto [l1, l2] = standard_factorization(l);
    CHECK(is_lyndon(l1));
    CHECK(is_lyndon(l2));
    CHECK(compare(l1, l2) < 0);
    CHECK(l1 * l2 == l);
    // l2 is the longest proper Lyndon suffix
    for (std::size_t i = 1; i < l.size() - l2.size(); ++i) CHECK_FALSE(is_lyndon(l.suffix_from(i)));
  }
}

TEST_CASE("Lyndon factorization is decreasing and exact") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Alphabet a = i % 2 ? Alphabet::X : Alphabet::Y;
    Word w = gen::random_word(rng, a, 9, true);
    std::vector<Word> f = lyndon_factorization(w);
    Word back(a);
    for (std::size_t j = 0; j < f.size(); ++j) {
      CHECK(is_lyndon(f[j]));
      if (j) CHECK(compare(f[j - 1], f[j]) >= 0);
      back = back * f[j];
    }
    CHECK(back == w);
    unsigned total = 0;
    for (auto& [l, e] : lyndon_factorization_grouped(w)) total += e * l.size();
    CHECK(total == w.size());
  }
}

TEST_CASE("pi_X and pi_Y") {
  CHECK(pi_X(Word::y({3, 1})) == Word::x({0, 0, 1, 1}));
  CHECK(pi_Y(Word::x({0, 0, 1, 1})) == Word::y({3, 1}));
  CHECK_FALSE(pi_Y(Word::x({0, 1, 0})).has_value());
  CHECK(pi_Y(Word(Alphabet::X)) == Word(Alphabet::Y));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Word y = gen::random_word(rng, Alphabet::Y, 10);
    CHECK(pi_Y(pi_X(y)) == y);
    CHECK(pi_X(y).weight() == y.weight());
    CHECK(is_convergent(pi_X(y)) == is_convergent(y));
  }
}

TEST_CASE("text round trips and strict parsing") {
  CHECK(to_string(Word::y({2, 1})) == "2,1");
  CHECK(to_string(Word::x({0, 0, 1})) == "001");
  CHECK(pretty(Word::x({0, 0, 1})) == "x0^2x1");
  CHECK(pretty(Word::y({2, 1, 1})) == "y2y1^2");
  CHECK(pretty(Word(Alphabet::Y)) == "1");
  CHECK(parse_word(Alphabet::Y, "3,1,2") == Word::y({3, 1, 2}));
  CHECK(parse_word(Alphabet::X, "0101") == Word::x({0, 1, 0, 1}));
  for (const char* bad : {"2,,1", "a", "2,1,", ",2", "02", "0", "-1", "2 1"}) CHECK_THROWS_AS(parse_word(Alphabet::Y, bad), UsageError);
  for (const char* bad : {"012", "x0", "0 1"}) CHECK_THROWS_AS(parse_word(Alphabet::X, bad), UsageError);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Word w = gen::random_word(rng, i % 2 ? Alphabet::X : Alphabet::Y, 8);
    CHECK(parse_word(w.alphabet(), to_string(w)) == w);
  }
}

TEST_CASE("order key storage matches the letter order") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Alphabet a = i % 2 ? Alphabet::X : Alphabet::Y;
    Word u = gen::random_word(rng, a, 6), v = gen::random_word(rng, a, 6);
    CHECK((compare(u, v) < 0) == oracle::less(a, u.letters(), v.letters()));
  }
}
