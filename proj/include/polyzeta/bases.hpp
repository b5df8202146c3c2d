#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "polyzeta/ncpoly.hpp"

namespace polyzeta {

enum class BasisKind : std::uint8_t { P, S, Pi, Sigma };

std::string basis_name(BasisKind k);  // "P", "S", "Pi", "Sigma"
BasisKind parse_basis_kind(std::string_view text);
// Pi and Sigma exist on Y only; P and S on both alphabets (shuffle side).
bool basis_defined(Alphabet a, BasisKind k);

struct BasisTable {
  Alphabet alphabet;
  BasisKind kind;
  std::map<Word, RationalPoly, GradedLess> entries;
  std::set<unsigned> complete_weights;  // weights whose every word is present

  unsigned max_complete_weight() const;
};

// Lazily filled P/S/Pi/Sigma tables. Returned references stay valid for the
// lifetime of the object; population is serialized by an internal lock.
class Bases {
 public:
  Bases();
  Bases(const Bases&) = delete;
  Bases& operator=(const Bases&) = delete;

  const RationalPoly& P(const Word& w) { return get(BasisKind::P, w); }
  const RationalPoly& S(const Word& w) { return get(BasisKind::S, w); }
  const RationalPoly& Pi(const Word& w) { return get(BasisKind::Pi, w); }
  const RationalPoly& Sigma(const Word& w) { return get(BasisKind::Sigma, w); }
  const RationalPoly& get(BasisKind k, const Word& w);

  // Every word of the given weight, in compare() order.
  std::vector<std::pair<Word, const RationalPoly*>> weight_table(Alphabet a, BasisKind k, unsigned weight);
  const BasisTable& table(Alphabet a, BasisKind k) const;
  // Installs precomputed entries of one complete weight (cache load).
  void install(Alphabet a, BasisKind k, unsigned weight, std::map<Word, RationalPoly, GradedLess> entries);

 private:
  BasisTable& table_mut(Alphabet a, BasisKind k);
  RationalPoly compute(BasisKind k, const Word& w);
  void fill_sigma(unsigned weight);

  std::recursive_mutex mutex_;
  std::vector<BasisTable> tables_;
};

// Eulerian projector on Y: pi1(w) = sum_k (-1)^{k-1}/k sum <w | u1 st ... st uk> u1...uk.
RationalPoly pi1(const RationalPoly& p);
RationalPoly pi1_word(const Word& w);

// Polynomial on Lyndon generators. Key w stands for the monomial B_{l1}^{i1} ... B_{lk}^{ik}
// read off the grouped decreasing factorization of w (powers taken with the ambient product);
// the empty word stands for 1.
struct LyndonExpansion {
  Alphabet alphabet = Alphabet::X;
  Product product = Product::Shuffle;
  std::map<Word, Rational, GradedLess> terms;

  friend bool operator==(const LyndonExpansion&, const LyndonExpansion&) = default;
};

LyndonExpansion decompose_shuffle(Bases& bases, const RationalPoly& p);
LyndonExpansion decompose_stuffle(Bases& bases, const RationalPoly& p);
// Re-expands by explicit powers of S_l (shuffle) or Sigma_l (stuffle).
RationalPoly expand(Bases& bases, const LyndonExpansion& e);
std::string to_string(const LyndonExpansion& e);

}  // namespace polyzeta
