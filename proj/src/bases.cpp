#include "polyzeta/bases.hpp"

#include <algorithm>

#include "polyzeta/error.hpp"

namespace polyzeta {

std::string basis_name(BasisKind k) {
  switch (k) {
    case BasisKind::P: return "P";
    case BasisKind::S: return "S";
    case BasisKind::Pi: return "Pi";
    default: return "Sigma";
  }
}

BasisKind parse_basis_kind(std::string_view text) {
  if (text == "P") return BasisKind::P;
  if (text == "S") return BasisKind::S;
  if (text == "Pi") return BasisKind::Pi;
  if (text == "Sigma") return BasisKind::Sigma;
  throw UsageError("unknown basis '" + std::string(text) + "' (expected P, S, Pi or Sigma)");
}

bool basis_defined(Alphabet a, BasisKind k) {
  return a == Alphabet::Y || k == BasisKind::P || k == BasisKind::S;
}

unsigned BasisTable::max_complete_weight() const {
  unsigned k = 0;
  while (complete_weights.count(k + 1)) ++k;
  return k;
}

namespace {

std::size_t table_index(Alphabet a, BasisKind k) {
  return static_cast<std::size_t>(a) * 4 + static_cast<std::size_t>(k);
}

void compositions_into(unsigned s, unsigned parts, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (parts == 0) {
    if (s == 0) out.push_back(cur);
    return;
  }
  for (unsigned c = 1; c + (parts - 1) <= s; ++c) {
    cur.push_back(c);
    compositions_into(s - c, parts - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Bases::Bases() {
  for (Alphabet a : {Alphabet::X, Alphabet::Y})
    for (BasisKind k : {BasisKind::P, BasisKind::S, BasisKind::Pi, BasisKind::Sigma})
      tables_.push_back(BasisTable{a, k, {}, {}});
}

BasisTable& Bases::table_mut(Alphabet a, BasisKind k) { return tables_[table_index(a, k)]; }

const BasisTable& Bases::table(Alphabet a, BasisKind k) const { return tables_[table_index(a, k)]; }

const RationalPoly& Bases::get(BasisKind k, const Word& w) {
  if (!basis_defined(w.alphabet(), k)) throw UsageError(basis_name(k) + " is defined on Y-words only");
  std::lock_guard lock(mutex_);
  BasisTable& t = table_mut(w.alphabet(), k);
  if (auto it = t.entries.find(w); it != t.entries.end()) return it->second;
  if (k == BasisKind::Sigma) {
    fill_sigma(w.weight());
    return t.entries.at(w);
  }
  RationalPoly value = compute(k, w);
  return t.entries.emplace(w, std::move(value)).first->second;
}

RationalPoly Bases::compute(BasisKind k, const Word& w) {
  const Alphabet a = w.alphabet();
  if (w.empty()) return RationalPoly::one(a);
  if (w.size() == 1) return k == BasisKind::Pi ? pi1_word(w) : RationalPoly::word(w);
  if (is_lyndon(w)) {
    if (k == BasisKind::S) return RationalPoly::word(w.prefix(1)) * get(k, w.suffix_from(1));
    auto [l1, l2] = standard_factorization(w);
    return lie_bracket(get(k, l1), get(k, l2));
  }
  if (k == BasisKind::S) {
    RationalPoly out = RationalPoly::one(a);
    Rational denom(1);
    for (const auto& [l, i] : lyndon_factorization_grouped(w)) {
      out = shuffle(out, power(Product::Shuffle, get(k, l), i));
      denom *= factorial(i);
    }
    return out.scaled(Rational(1 / denom));
  }
  RationalPoly out = RationalPoly::one(a);
  for (const Word& l : lyndon_factorization(w)) out = out * get(k, l);
  return out;
}

void Bases::fill_sigma(unsigned weight) {
  BasisTable& t = table_mut(Alphabet::Y, BasisKind::Sigma);
  if (t.complete_weights.count(weight)) return;
  // From sum_w w (x) w = sum_v Sigma_v (x) Pi_v: w = sum_v <Pi_v|w> Sigma_v, and <Pi_v|w> != 0 only for v <= w.
  std::vector<Word> words = weight == 0 ? std::vector<Word>{Word(Alphabet::Y)} : words_of_weight(Alphabet::Y, weight);
  std::map<Word, std::vector<std::pair<Word, Rational>>, GradedLess> columns;
  for (const Word& v : words) {
    const RationalPoly& pv = get(BasisKind::Pi, v);
    if (pv.coefficient(v) != 1) throw InconsistencyError("Pi_" + pretty(v) + " lacks a unit leading term");
    for (const auto& [w, c] : pv) {
      if (w.weight() != weight || w.raw_compare(v) < 0)
        throw InconsistencyError("Pi_" + pretty(v) + " is not triangular; dual basis unavailable");
      if (!(w == v)) columns[w].emplace_back(v, c);
    }
  }
  for (const Word& w : words) {
    RationalPoly sigma = RationalPoly::word(w);
    for (const auto& [v, c] : columns[w]) sigma -= t.entries.at(v).scaled(c);
    t.entries.insert_or_assign(w, std::move(sigma));
  }
  t.complete_weights.insert(weight);
}

std::vector<std::pair<Word, const RationalPoly*>> Bases::weight_table(Alphabet a, BasisKind k, unsigned weight) {
  std::vector<std::pair<Word, const RationalPoly*>> out;
  for (const Word& w : words_of_weight(a, weight)) out.emplace_back(w, &get(k, w));
  std::lock_guard lock(mutex_);
  table_mut(a, k).complete_weights.insert(weight);
  return out;
}

void Bases::install(Alphabet a, BasisKind k, unsigned weight, std::map<Word, RationalPoly, GradedLess> entries) {
  std::lock_guard lock(mutex_);
  BasisTable& t = table_mut(a, k);
  for (auto& [w, p] : entries) {
    if (w.alphabet() != a || w.weight() != weight) throw UsageError("basis entry of the wrong weight or alphabet");
    t.entries.insert_or_assign(w, std::move(p));
  }
  t.complete_weights.insert(weight);
}

RationalPoly pi1_word(const Word& w) {
  if (w.empty()) return RationalPoly(Alphabet::Y);
  if (w.alphabet() != Alphabet::Y) throw UsageError("pi1 is defined on Y only");
  RationalPoly out(Alphabet::Y);
  const unsigned total = w.weight();
  // k-fold dual of the stuffle: each letter y_s of w is split into parts sent, in order,
  // to a nonempty subset of the k slots.
  for (unsigned k = 1; k <= total; ++k) {
    using State = std::vector<Word>;
    struct StateLess {
      bool operator()(const State& a, const State& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), GradedLess{});
      }
    };
    std::map<State, std::uint64_t, StateLess> states{{State(k, Word(Alphabet::Y)), 1}};
    unsigned remaining = total;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      const unsigned s = w[pos];
      remaining -= s;
      std::map<State, std::uint64_t, StateLess> next;
      for (const auto& [st, n] : states) {
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
          std::vector<unsigned> slots;
          for (unsigned i = 0; i < k; ++i)
            if (mask & (1u << i)) slots.push_back(i);
          if (slots.size() > s) continue;
          std::size_t empty_after = 0;
          for (unsigned i = 0; i < k; ++i)
            if (st[i].empty() && !(mask & (1u << i))) ++empty_after;
          if (empty_after > remaining) continue;
          std::vector<std::vector<unsigned>> comps;
          std::vector<unsigned> cur;
          compositions_into(s, static_cast<unsigned>(slots.size()), cur, comps);
          for (const auto& c : comps) {
            State ns = st;
            for (std::size_t j = 0; j < slots.size(); ++j) ns[slots[j]] = ns[slots[j]].appended(c[j]);
            next[ns] += n;
          }
        }
      }
      states = std::move(next);
    }
    Rational scale(k % 2 ? 1 : -1, k);
    for (const auto& [st, n] : states) {
      Word u(Alphabet::Y);
      bool full = true;
      for (const Word& part : st) {
        full = full && !part.empty();
        u = u * part;
      }
      if (full) out.add_term(u, Rational(scale * rational_from(n)));
    }
  }
  return out;
}

RationalPoly pi1(const RationalPoly& p) {
  RationalPoly out(Alphabet::Y);
  for (const auto& [w, c] : p) out += pi1_word(w).scaled(c);
  return out;
}

namespace {

LyndonExpansion decompose(Bases& bases, const RationalPoly& p, Product product) {
  LyndonExpansion e;
  e.alphabet = p.alphabet();
  e.product = product;
  const BasisKind kind = product == Product::Shuffle ? BasisKind::S : BasisKind::Sigma;
  if (product == Product::Stuffle && !p.is_zero() && p.alphabet() != Alphabet::Y)
    throw UsageError("stuffle decomposition needs a Y polynomial");
  RationalPoly rem = p;
  // S_w / Sigma_w = w + smaller words: the largest remaining word is always a leading term.
  while (!rem.is_zero()) {
    auto top = std::prev(rem.end());
    Word w = top->first;
    Rational c = top->second;
    Rational denom(1);
    for (const auto& [l, i] : lyndon_factorization_grouped(w)) denom *= factorial(i);
    e.terms.emplace(w, Rational(c / denom));
    rem -= bases.get(kind, w).scaled(c);
    if (rem.find(w)) throw InconsistencyError("basis element " + basis_name(kind) + "_" + pretty(w) + " is not unitriangular");
  }
  return e;
}

}  // namespace

LyndonExpansion decompose_shuffle(Bases& bases, const RationalPoly& p) { return decompose(bases, p, Product::Shuffle); }

LyndonExpansion decompose_stuffle(Bases& bases, const RationalPoly& p) { return decompose(bases, p, Product::Stuffle); }

RationalPoly expand(Bases& bases, const LyndonExpansion& e) {
  const BasisKind kind = e.product == Product::Shuffle ? BasisKind::S : BasisKind::Sigma;
  RationalPoly out(e.alphabet);
  for (const auto& [w, c] : e.terms) {
    RationalPoly term = RationalPoly::one(e.alphabet);
    for (const auto& [l, i] : lyndon_factorization_grouped(w)) term = product(e.product, term, power(e.product, bases.get(kind, l), i));
    out += term.scaled(c);
  }
  return out;
}

std::string to_string(const LyndonExpansion& e) {
  if (e.terms.empty()) return "0";
  const std::string kind = e.product == Product::Shuffle ? "S" : "Sigma";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms) {
    bool negative = sgn(c) < 0;
    Rational a = abs(c);
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string mono;
    for (const auto& [l, i] : lyndon_factorization_grouped(w)) {
      if (!mono.empty()) mono += "*";
      mono += kind + "[" + to_string(l) + "]";
      if (i > 1) mono += "^" + std::to_string(i);
    }
    if (mono.empty()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

}  // namespace polyzeta
