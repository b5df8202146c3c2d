#pragma once

// Independent reference implementations used as oracles, and random inputs.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "polyzeta/ncpoly.hpp"

namespace oracle {

using Letters = std::vector<unsigned>;
using Counts = std::map<Letters, long long>;

// Letter order as plain integers: larger key = larger letter.
inline int key(polyzeta::Alphabet a, unsigned letter) { return a == polyzeta::Alphabet::X ? int(letter) : -int(letter); }

// Lexicographic, proper prefix smaller.
inline bool less(polyzeta::Alphabet a, const Letters& u, const Letters& v) {
  for (std::size_t i = 0; i < std::min(u.size(), v.size()); ++i)
    if (u[i] != v[i]) return key(a, u[i]) < key(a, v[i]);
  return u.size() < v.size();
}

// Lyndon iff strictly smaller than every proper rotation (and primitive).
inline bool lyndon(polyzeta::Alphabet a, const Letters& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    Letters r(w.begin() + i, w.end());
    r.insert(r.end(), w.begin(), w.begin() + i);
    if (!less(a, w, r)) return false;
  }
  return true;
}

inline Counts shuffle(const Letters& u, const Letters& v) {
  if (u.empty()) return {{v, 1}};
  if (v.empty()) return {{u, 1}};
  Counts out;
  for (auto& [w, c] : shuffle(Letters(u.begin() + 1, u.end()), v)) {
    Letters x{u[0]};
    x.insert(x.end(), w.begin(), w.end());
    out[x] += c;
  }
  for (auto& [w, c] : shuffle(u, Letters(v.begin() + 1, v.end()))) {
    Letters x{v[0]};
    x.insert(x.end(), w.begin(), w.end());
    out[x] += c;
  }
  return out;
}

inline Counts stuffle(const Letters& u, const Letters& v) {
  if (u.empty()) return {{v, 1}};
  if (v.empty()) return {{u, 1}};
  Counts out;
  auto add = [&](unsigned head, const Counts& rest) {
    for (auto& [w, c] : rest) {
      Letters x{head};
      x.insert(x.end(), w.begin(), w.end());
      out[x] += c;
    }
  };
  Letters ut(u.begin() + 1, u.end()), vt(v.begin() + 1, v.end());
  add(u[0], stuffle(ut, v));
  add(v[0], stuffle(u, vt));
  add(u[0] + v[0], stuffle(ut, vt));
  return out;
}

// All compositions of n in arbitrary order.
inline std::vector<Letters> compositions(unsigned n) {
  if (n == 0) return {{}};
  std::vector<Letters> out;
  for (unsigned first = 1; first <= n; ++first)
    for (Letters rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(rest);
    }
  return out;
}

inline polyzeta::RationalPoly to_poly(polyzeta::Alphabet a, const Counts& c) {
  polyzeta::RationalPoly p(a);
  for (const auto& [w, n] : c) p.add_term(polyzeta::Word(a, w), polyzeta::Rational(static_cast<long>(n)));
  return p;
}

}  // namespace oracle

namespace gen {

inline polyzeta::Word random_word(std::mt19937_64& rng, polyzeta::Alphabet a, unsigned max_weight, bool nonempty = false) {
  std::uniform_int_distribution<unsigned> wd(nonempty ? 1 : 0, max_weight);
  unsigned target = wd(rng);
  std::vector<unsigned> letters;
  unsigned w = 0;
  while (w < target) {
    unsigned l;
    if (a == polyzeta::Alphabet::X) {
      l = std::uniform_int_distribution<unsigned>(0, 1)(rng);
      w += 1;
    } else {
      l = std::uniform_int_distribution<unsigned>(1, target - w)(rng);
      w += l;
    }
    letters.push_back(l);
  }
  return polyzeta::Word(a, letters);
}

inline polyzeta::RationalPoly random_poly(std::mt19937_64& rng, polyzeta::Alphabet a, unsigned max_weight,
                                          unsigned terms) {
  polyzeta::RationalPoly p(a);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (unsigned i = 0; i < terms; ++i) {
    polyzeta::Rational q(num(rng), den(rng));
    q.canonicalize();
    p.add_term(random_word(rng, a, max_weight), q);
  }
  return p;
}

}  // namespace gen
