#include "polyzeta/ncpoly.hpp"

#include <cctype>

namespace polyzeta {

namespace {

using Counts = std::map<Word, std::uint64_t, GradedLess>;

Counts prepend_all(unsigned letter, const Counts& src) {
  Counts out;
  for (const auto& [w, n] : src) out.emplace_hint(out.end(), w.prepended(letter), n);
  return out;
}

void merge_into(Counts& dst, const Counts& src) {
  for (const auto& [w, n] : src) dst[w] += n;
}

// Bottom-up table over suffix pairs (u[i:], v[j:]); each cell is used by at most three parents.
WordCounts suffix_product(bool stuffle, const Word& u, const Word& v) {
  const std::size_t m = u.size(), n = v.size();
  Alphabet a = u.empty() ? v.alphabet() : u.alphabet();
  std::vector<Counts> table((m + 1) * (n + 1));
  auto cell = [&](std::size_t i, std::size_t j) -> Counts& { return table[i * (n + 1) + j]; };
  for (std::size_t i = m + 1; i-- > 0;) {
    for (std::size_t j = n + 1; j-- > 0;) {
      Counts& c = cell(i, j);
      if (i == m) {
        c.emplace(j == n ? Word(a) : v.suffix_from(j), 1);
        continue;
      }
      if (j == n) {
        c.emplace(u.suffix_from(i), 1);
        continue;
      }
      c = prepend_all(u[i], cell(i + 1, j));
      merge_into(c, prepend_all(v[j], cell(i, j + 1)));
      if (stuffle) merge_into(c, prepend_all(u[i] + v[j], cell(i + 1, j + 1)));
    }
  }
  Counts& top = cell(0, 0);
  return WordCounts(top.begin(), top.end());
}

}  // namespace

WordCounts shuffle_words(const Word& u, const Word& v) {
  if (!u.empty() && !v.empty() && u.alphabet() != v.alphabet())
    throw UsageError("shuffle of words over different alphabets");
  return suffix_product(false, u, v);
}

WordCounts stuffle_words(const Word& u, const Word& v) {
  if ((!u.empty() && u.alphabet() != Alphabet::Y) || (!v.empty() && v.alphabet() != Alphabet::Y))
    throw UsageError("stuffle is defined on Y only");
  return suffix_product(true, u, v);
}

WordCounts product_words(Product kind, const Word& u, const Word& v) {
  return kind == Product::Shuffle ? shuffle_words(u, v) : stuffle_words(u, v);
}

RationalPoly parse_polynomial(Alphabet a, std::string_view text) {
  RationalPoly out(a);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> UsageError {
    return UsageError("malformed polynomial '" + std::string(text) + "': " + why);
  };
  bool first = true;
  skip();
  if (i == text.size()) throw fail("empty input");
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected + or -");
    }
    first = false;
    Rational coeff(1);
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    bool has_coeff = i > start;
    if (has_coeff) coeff = parse_rational(text.substr(start, i - start));
    skip();
    Word w(a);
    if (has_coeff && i < text.size() && text[i] == '*') {
      ++i;
      skip();
      if (i == text.size() || text[i] != '[') throw fail("expected [word] after *");
    }
    if (i < text.size() && text[i] == '[') {
      std::size_t close = text.find(']', i);
      if (close == std::string_view::npos) throw fail("unterminated [");
      w = parse_word(a, text.substr(i + 1, close - i - 1));
      i = close + 1;
    } else if (!has_coeff) {
      throw fail("expected a coefficient or [word]");
    }
    out.add_term(w, Rational(coeff * sign));
    skip();
  }
  return out;
}

}  // namespace polyzeta
