#include "polyzeta/words.hpp"

#include <algorithm>

#include "polyzeta/error.hpp"

namespace polyzeta {

char alphabet_name(Alphabet a) { return a == Alphabet::X ? 'x' : 'y'; }

Alphabet parse_alphabet(std::string_view text) {
  if (text == "x" || text == "X") return Alphabet::X;
  if (text == "y" || text == "Y") return Alphabet::Y;
  throw UsageError("unknown alphabet '" + std::string(text) + "' (expected x or y)");
}

Letter Letter::x(unsigned i) {
  if (i > 1) throw UsageError("X letters are x0 and x1");
  return Letter{Alphabet::X, i};
}

Letter Letter::y(unsigned k) {
  if (k == 0) throw UsageError("Y letter index must be positive");
  return Letter{Alphabet::Y, k};
}

Word::Word(Alphabet a, const std::vector<unsigned>& letters) : alphabet_(a) {
  keys_.reserve(letters.size());
  for (unsigned l : letters) push(l);
}

Word Word::letter(Letter l) {
  Word w(l.alphabet);
  w.push(l.index);
  return w;
}

Word Word::x_zeta(unsigned k) {
  if (k == 0) throw UsageError("zeta index must be positive");
  std::vector<unsigned> bits(k - 1, 0);
  bits.push_back(1);
  return Word(Alphabet::X, bits);
}

unsigned char Word::encode(unsigned letter) const {
  if (alphabet_ == Alphabet::X) {
    if (letter > 1) throw UsageError("X letters are x0 and x1");
    return static_cast<unsigned char>(letter);
  }
  if (letter == 0) throw UsageError("Y letter index must be positive");
  if (letter > kMaxYIndex) throw UsageError("Y letter index too large");
  return static_cast<unsigned char>(255u - letter);
}

void Word::push(unsigned letter) {
  keys_.push_back(static_cast<char>(encode(letter)));
  weight_ += alphabet_ == Alphabet::X ? 1 : letter;
}

std::vector<unsigned> Word::letters() const {
  std::vector<unsigned> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

Word Word::concat(const Word& other) const {
  if (other.empty()) return *this;
  if (empty()) return other;
  if (alphabet_ != other.alphabet_) throw UsageError("concatenation of words over different alphabets");
  Word w = *this;
  w.keys_ += other.keys_;
  w.weight_ += other.weight_;
  return w;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  Word w(alphabet_);
  w.keys_ = keys_.substr(pos, len);
  if (alphabet_ == Alphabet::X) {
    w.weight_ = static_cast<unsigned>(w.keys_.size());
  } else {
    for (unsigned char c : w.keys_) w.weight_ += 255u - c;
  }
  return w;
}

Word Word::appended(unsigned letter) const {
  Word w = *this;
  w.push(letter);
  return w;
}

Word Word::prepended(unsigned letter) const {
  Word w(alphabet_);
  w.push(letter);
  w.keys_ += keys_;
  w.weight_ += weight_;
  return w;
}

Word operator*(const Word& a, const Word& b) { return a.concat(b); }

std::strong_ordering compare(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet() && !u.empty() && !v.empty())
    throw UsageError("comparison of words over different alphabets");
  int c = u.raw_compare(v);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool is_convergent(const Word& w) {
  if (w.empty()) return true;
  if (w.alphabet() == Alphabet::X) return w[0] == 0 && w[w.size() - 1] == 1;
  return w[0] != 1;
}

namespace {

// Duval: returns the end positions of the decreasing Lyndon factors of keys.
std::vector<std::size_t> duval_cuts(const std::string& s) {
  std::vector<std::size_t> cuts;
  std::size_t n = s.size(), i = 0;
  auto key = [&](std::size_t p) { return static_cast<unsigned char>(s[p]); };
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && key(k) <= key(j)) {
      k = key(k) < key(j) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      i += j - k;
      cuts.push_back(i);
    }
  }
  return cuts;
}

}  // namespace

bool is_lyndon(const Word& w) {
  if (w.empty()) throw UsageError("is_lyndon: empty word");
  return duval_cuts(w.storage()).size() == 1;
}

WordClass classify(const Word& w) {
  return WordClass{is_convergent(w), !w.empty() && is_lyndon(w)};
}

std::vector<Word> lyndon_factorization(const Word& w) {
  std::vector<Word> out;
  std::size_t start = 0;
  for (std::size_t end : duval_cuts(w.storage())) {
    out.push_back(w.slice(start, end - start));
    start = end;
  }
  return out;
}

std::vector<std::pair<Word, unsigned>> lyndon_factorization_grouped(const Word& w) {
  std::vector<std::pair<Word, unsigned>> out;
  for (Word& f : lyndon_factorization(w)) {
    if (!out.empty() && out.back().first == f) {
      ++out.back().second;
    } else {
      out.emplace_back(std::move(f), 1u);
    }
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& l) {
  if (l.size() < 2) throw UsageError("standard factorization needs a Lyndon word of at least two letters");
  if (!is_lyndon(l)) throw UsageError("standard factorization of a non-Lyndon word " + pretty(l));
  for (std::size_t i = 1; i < l.size(); ++i) {
    Word tail = l.suffix_from(i);
    if (is_lyndon(tail)) return {l.prefix(i), tail};
  }
  throw InconsistencyError("Lyndon word without Lyndon proper suffix");
}

namespace {

void compositions(unsigned remaining, Word& current, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (unsigned k = remaining; k >= 1; --k) {
    Word next = current.appended(k);
    std::swap(current, next);
    compositions(remaining - k, current, out);
    std::swap(current, next);
  }
}

}  // namespace

std::vector<Word> words_of_weight(Alphabet a, unsigned weight) {
  std::vector<Word> out;
  if (a == Alphabet::X) {
    if (weight > 24) throw UsageError("weight too large for exhaustive enumeration");
    std::size_t count = std::size_t{1} << weight;
    out.reserve(count);
    for (std::size_t m = 0; m < count; ++m) {
      std::vector<unsigned> bits(weight);
      for (unsigned i = 0; i < weight; ++i) bits[i] = (m >> (weight - 1 - i)) & 1u;
      out.emplace_back(Alphabet::X, bits);
    }
    return out;
  }
  Word current(Alphabet::Y);
  compositions(weight, current, out);
  return out;
}

std::vector<Word> lyndon_enumerate(Alphabet a, unsigned max_weight) {
  if (max_weight == 0) throw UsageError("lyndon_enumerate: max_weight must be positive");
  std::vector<Word> out;
  if (a == Alphabet::X) {
    // Fredricksen-Kessler-Maiorana generation: Lyndon words of length <= n in lexicographic order.
    std::vector<int> w{-1};
    while (!w.empty()) {
      ++w.back();
      out.emplace_back(Alphabet::X, std::vector<unsigned>(w.begin(), w.end()));
      std::size_t m = w.size();
      while (w.size() < max_weight) w.push_back(w[w.size() - m]);
      while (!w.empty() && w.back() == 1) w.pop_back();
    }
  } else {
    for (unsigned k = 1; k <= max_weight; ++k) {
      for (Word& w : words_of_weight(Alphabet::Y, k)) {
        if (is_lyndon(w)) out.push_back(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end(), GradedLess{});
  return out;
}

std::vector<Word> lyndon_of_weight(Alphabet a, unsigned weight) {
  std::vector<Word> out;
  for (Word& w : words_of_weight(a, weight)) {
    if (is_lyndon(w)) out.push_back(std::move(w));
  }
  return out;
}

Word pi_X(const Word& y_word) {
  if (y_word.empty()) return Word(Alphabet::X);
  if (y_word.alphabet() != Alphabet::Y) throw UsageError("pi_X expects a Y-word");
  std::vector<unsigned> bits;
  bits.reserve(y_word.weight());
  for (std::size_t i = 0; i < y_word.size(); ++i) {
    bits.insert(bits.end(), y_word[i] - 1, 0u);
    bits.push_back(1);
  }
  return Word(Alphabet::X, bits);
}

std::optional<Word> pi_Y(const Word& x_word) {
  if (x_word.empty()) return Word(Alphabet::Y);
  if (x_word.alphabet() != Alphabet::X) throw UsageError("pi_Y expects an X-word");
  if (x_word[x_word.size() - 1] == 0) return std::nullopt;
  std::vector<unsigned> ks;
  unsigned run = 0;
  for (std::size_t i = 0; i < x_word.size(); ++i) {
    ++run;
    if (x_word[i] == 1) {
      ks.push_back(run);
      run = 0;
    }
  }
  return Word(Alphabet::Y, ks);
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.alphabet() == Alphabet::X) {
      out.push_back(w[i] ? '1' : '0');
    } else {
      if (i) out.push_back(',');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

Word parse_word(Alphabet a, std::string_view text) {
  std::vector<unsigned> letters;
  if (a == Alphabet::X) {
    for (char c : text) {
      if (c != '0' && c != '1')
        throw UsageError("malformed X-word '" + std::string(text) + "' (expected 0/1 characters)");
      letters.push_back(c == '1' ? 1u : 0u);
    }
    return Word(a, letters);
  }
  if (text.empty()) return Word(a);
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view tok = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    bool ok = !tok.empty() && tok.size() <= 3 && tok[0] != '0' &&
              std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
    unsigned k = ok ? static_cast<unsigned>(std::stoul(std::string(tok))) : 0;
    if (!ok || k > Word::kMaxYIndex)
      throw UsageError("malformed composition '" + std::string(text) + "' (expected s1,s2,... with positive integers)");
    letters.push_back(k);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return Word(a, letters);
}

std::string pretty(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  char name = alphabet_name(w.alphabet());
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out.push_back(name);
    out += std::to_string(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace polyzeta
