#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polyzeta {

enum class Alphabet : std::uint8_t { X, Y };

char alphabet_name(Alphabet a);         // 'x' or 'y'
Alphabet parse_alphabet(std::string_view text);

// x0, x1 on X (index 0 or 1); y_k on Y (index k >= 1).
struct Letter {
  Alphabet alphabet;
  unsigned index;

  static Letter x(unsigned i);
  static Letter y(unsigned k);
  unsigned weight() const { return alphabet == Alphabet::X ? 1 : index; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Immutable word over one alphabet. Letters are stored as order keys so that
// byte-wise comparison of the storage is the word order (x0 < x1, y1 > y2 > ...).
class Word {
 public:
  static constexpr unsigned kMaxYIndex = 250;

  Word() = default;  // empty X-word
  explicit Word(Alphabet a) : alphabet_(a) {}
  Word(Alphabet a, const std::vector<unsigned>& letters);
  Word(Alphabet a, std::initializer_list<unsigned> letters)
      : Word(a, std::vector<unsigned>(letters)) {}

  static Word x(std::initializer_list<unsigned> bits) { return Word(Alphabet::X, bits); }
  static Word y(std::initializer_list<unsigned> ks) { return Word(Alphabet::Y, ks); }
  static Word letter(Letter l);
  // x0^{k-1} x1, the X-encoding of y_k.
  static Word x_zeta(unsigned k);

  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  unsigned weight() const { return weight_; }
  unsigned operator[](std::size_t i) const { return decode(keys_[i]); }
  Letter letter_at(std::size_t i) const { return Letter{alphabet_, (*this)[i]}; }
  std::vector<unsigned> letters() const;

  Word concat(const Word& other) const;
  Word prefix(std::size_t len) const { return slice(0, len); }
  Word suffix_from(std::size_t pos) const { return slice(pos, size() - pos); }
  Word slice(std::size_t pos, std::size_t len) const;
  Word appended(unsigned letter) const;
  Word prepended(unsigned letter) const;

  // Same-alphabet order without checks; used by containers.
  int raw_compare(const Word& other) const { return keys_.compare(other.keys_); }
  const std::string& storage() const { return keys_; }

  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.keys_ == b.keys_;
  }

 private:
  unsigned char encode(unsigned letter) const;
  unsigned decode(unsigned char key) const {
    return alphabet_ == Alphabet::X ? key : 255u - key;
  }
  void push(unsigned letter);

  Alphabet alphabet_ = Alphabet::X;
  unsigned weight_ = 0;
  std::string keys_;
};

Word operator*(const Word& a, const Word& b);

// Lexicographic order, proper prefix smaller. Throws UsageError on mixed alphabets.
std::strong_ordering compare(const Word& u, const Word& v);

// Weight first, then compare(). Deterministic iteration order for all containers.
struct GradedLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.raw_compare(b) < 0;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    return std::hash<std::string>{}(w.storage()) ^ static_cast<std::size_t>(w.alphabet());
  }
};

struct WordClass {
  bool convergent;
  bool lyndon;
};
bool is_convergent(const Word& w);
bool is_lyndon(const Word& w);
WordClass classify(const Word& w);

// All words of exactly the given weight, in compare() order.
std::vector<Word> words_of_weight(Alphabet a, unsigned weight);
std::vector<Word> lyndon_enumerate(Alphabet a, unsigned max_weight);
std::vector<Word> lyndon_of_weight(Alphabet a, unsigned weight);

std::pair<Word, Word> standard_factorization(const Word& l);
// Decreasing factorization l1 >= l2 >= ... into Lyndon words.
std::vector<Word> lyndon_factorization(const Word& w);
// Same factorization with repeated factors grouped: [(l1, i1), ..., (lk, ik)].
std::vector<std::pair<Word, unsigned>> lyndon_factorization_grouped(const Word& w);

Word pi_X(const Word& y_word);
// nullopt is the zero marker: words ending in x0 are annihilated.
std::optional<Word> pi_Y(const Word& x_word);

// "001" for x0x0x1, "2,1" for y2y1; the empty word prints as "".
std::string to_string(const Word& w);
Word parse_word(Alphabet a, std::string_view text);
// Human form used in tables: x0^2x1, y2y1^2, 1 for the empty word.
std::string pretty(const Word& w);

}  // namespace polyzeta
