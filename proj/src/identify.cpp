#include "polyzeta/identify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "polyzeta/error.hpp"

namespace polyzeta {

BridgeSystem::BridgeSystem(unsigned N, Bases& bases)
    : N_(N),
      bases_(&bases),
      z_shuffle_(build_Z_shuffle(N, bases)),
      z_stuffle_(build_Z_stuffle(N, bases)),
      z_gamma_(build_Z_gamma(z_stuffle_)),
      y_rhs_(B_series(N) * pi_Y_series(z_shuffle_)),
      x_rhs_(Bx_inverse_series(N) * pi_X_series(z_gamma_)) {}

CPoly BridgeSystem::residual(const Word& w) const {
  if (w.weight() > N_) throw UsageError("bridge truncated below the weight of " + pretty(w));
  if (w.alphabet() == Alphabet::Y) return z_gamma_.coefficient(w) - y_rhs_.coefficient(w);
  return z_shuffle_.coefficient(w) - x_rhs_.coefficient(w);
}

std::vector<BridgeEquation> bridge_equations(const BridgeSystem& bridge, unsigned p) {
  if (p == 0 || p > bridge.truncation()) throw UsageError("bridge equations need 1 <= p <= N");
  std::vector<BridgeEquation> out;
  for (const Word& w : words_of_weight(Alphabet::Y, p)) out.push_back({w, bridge.residual(w)});
  for (const Word& w : words_of_weight(Alphabet::X, p))
    if (w[w.size() - 1] == 1) out.push_back({w, bridge.residual(w)});
  return out;
}

CPoly Identification::transfer(const CPoly& p, Alphabet target) const {
  const auto& vals = values(target);
  CPoly out;
  for (const auto& [m, q] : p) {
    CPoly term{Rational(q)};
    for (const auto& [s, e] : m.factors()) {
      if (s.is_gamma()) {
        term = term * CPoly(s, e);
        continue;
      }
      auto it = vals.find(s);
      if (it == vals.end())
        throw UsageError(to_string(s) + " lies beyond the identified weight " + std::to_string(max_weight));
      term = term * it->second.pow(e);
    }
    out += term;
  }
  return out;
}

namespace {

struct Row {
  std::vector<Rational> coeffs;
  CPoly constant;  // row reads: coeffs . unknowns + constant = 0
  Word origin;
};

std::vector<Symbol> unknowns_of_weight(Alphabet side, unsigned p) {
  std::vector<Symbol> out;
  for (const Word& l : lyndon_of_weight(side, p)) {
    if (side == Alphabet::X && l.size() < 2) continue;
    if (side == Alphabet::Y && l == Word::y({1})) continue;
    out.push_back(Symbol::of_lyndon(l));
  }
  return out;
}

// One elimination pass at weight p producing values over the irreducibles of side T.
void eliminate(const std::vector<BridgeEquation>& eqs, unsigned p, Alphabet T, std::map<Symbol, CPoly>& vals,
               std::vector<Rule>& rules, std::vector<Symbol>& irreducibles, WeightSummary& summary) {
  const Alphabet O = T == Alphabet::Y ? Alphabet::X : Alphabet::Y;
  std::vector<Symbol> cols = unknowns_of_weight(O, p);
  std::vector<Symbol> own = unknowns_of_weight(T, p);
  std::reverse(own.begin(), own.end());  // larger Lyndon words are eliminated first
  cols.insert(cols.end(), own.begin(), own.end());
  std::map<Symbol, std::size_t> col_of;
  for (std::size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);

  std::map<std::pair<Symbol, unsigned>, CPoly> powers;
  auto power_of = [&](const Symbol& s, unsigned e) -> const CPoly& {
    auto key = std::make_pair(s, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    CPoly v;
    if (s.is_gamma()) {
      v = CPoly(s, e);
    } else {
      auto vt = vals.find(s);
      if (vt == vals.end()) throw InconsistencyError("weight " + std::to_string(p) + ": no value for " + to_string(s));
      v = vt->second.pow(e);
    }
    return powers.emplace(key, std::move(v)).first->second;
  };

  std::vector<Row> rows;
  rows.reserve(eqs.size());
  for (const BridgeEquation& eq : eqs) {
    Row r{std::vector<Rational>(cols.size()), CPoly(), eq.word};
    for (const auto& [m, q] : eq.residual) {
      if (m.weight() != p)
        throw InconsistencyError("bridge equation for " + pretty(eq.word) + " is not homogeneous of weight " + std::to_string(p));
      const auto& f = m.factors();
      if (f.size() == 1 && f[0].second == 1 && !f[0].first.is_gamma() && f[0].first.weight() == p) {
        r.coeffs[col_of.at(f[0].first)] += q;
        continue;
      }
      CPoly term{Rational(q)};
      for (const auto& [s, e] : f) term = term * power_of(s, e);
      r.constant += term;
    }
    rows.push_back(std::move(r));
  }

  // Reduced row echelon form over Q.
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols.size() && top < rows.size(); ++c) {
    std::size_t pr = top;
    while (pr < rows.size() && is_zero(rows[pr].coeffs[c])) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[top], rows[pr]);
    Row& piv = rows[top];
    Rational inv = 1 / piv.coeffs[c];
    for (Rational& x : piv.coeffs) x *= inv;
    piv.constant = piv.constant.scaled(inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || is_zero(rows[r].coeffs[c])) continue;
      Rational f = rows[r].coeffs[c];
      for (std::size_t j = c; j < cols.size(); ++j)
        if (!is_zero(piv.coeffs[j])) rows[r].coeffs[j] -= f * piv.coeffs[j];
      rows[r].constant -= piv.constant.scaled(f);
    }
    pivots.push_back(c);
    ++top;
  }
  for (std::size_t r = top; r < rows.size(); ++r)
    if (!rows[r].constant.is_zero())
      throw InconsistencyError("weight " + std::to_string(p) + ": bridge equation for " + pretty(rows[r].origin) +
                               " is inconsistent, residual " + to_string(rows[r].constant));

  std::vector<bool> is_pivot(cols.size(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Symbol> fresh;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (is_pivot[c]) continue;
    if (cols[c].side() != T)
      throw InconsistencyError("weight " + std::to_string(p) + ": " + to_string(cols[c]) + " is not determined by side " +
                               std::string(1, alphabet_name(T)));
    fresh.push_back(cols[c]);
  }
  for (const Symbol& s : fresh) vals.insert_or_assign(s, CPoly(s));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const Row& row = rows[i];
    const Symbol& s = cols[pivots[i]];
    CPoly value = -row.constant;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (!is_pivot[c] && !is_zero(row.coeffs[c])) value -= CPoly(cols[c]).scaled(row.coeffs[c]);
    ++summary.relations_checked;
    summary.max_gamma_degree = std::max(summary.max_gamma_degree, value.degree(Symbol::gamma()));
    if (value.contains(Symbol::gamma()))
      throw InconsistencyError("weight " + std::to_string(p) + ": relation for " + to_string(s) + " depends on gamma");
    if (!value.is_zero() && value.weight() != std::optional<unsigned>(p))
      throw InconsistencyError("weight " + std::to_string(p) + ": relation for " + to_string(s) + " is inhomogeneous");
    if (s.side() == T) rules.push_back(Rule{s, value});
    vals.insert_or_assign(s, std::move(value));
  }
  irreducibles.insert(irreducibles.end(), fresh.begin(), fresh.end());
  (T == Alphabet::Y ? summary.new_irreducibles_y : summary.new_irreducibles_x) = fresh;
}

}  // namespace

Identification local_coordinate_identification(const BridgeSystem& bridge, unsigned max_weight) {
  if (max_weight < 2) throw UsageError("identification needs max_weight >= 2");
  if (max_weight > bridge.truncation()) throw UsageError("bridge truncated below the requested weight");
  Identification id;
  id.max_weight = max_weight;
  std::vector<Rule> rules_y, rules_x;
  std::vector<Symbol> irr_y, irr_x;
  for (unsigned p = 2; p <= max_weight; ++p) {
    std::vector<BridgeEquation> eqs = bridge_equations(bridge, p);
    WeightSummary summary;
    summary.weight = p;
    summary.equations = eqs.size();
    summary.unknowns_y = unknowns_of_weight(Alphabet::Y, p).size();
    summary.unknowns_x = unknowns_of_weight(Alphabet::X, p).size();
    eliminate(eqs, p, Alphabet::Y, id.in_y, rules_y, irr_y, summary);
    eliminate(eqs, p, Alphabet::X, id.in_x, rules_x, irr_x, summary);
    id.summaries.push_back(std::move(summary));
  }
  id.y = RewriteSystem(Alphabet::Y, std::move(rules_y), std::move(irr_y), max_weight);
  id.x = RewriteSystem(Alphabet::X, std::move(rules_x), std::move(irr_x), max_weight);
  return id;
}

Identification local_coordinate_identification(unsigned max_weight, Bases& bases) {
  BridgeSystem bridge(max_weight, bases);
  return local_coordinate_identification(bridge, max_weight);
}

CPoly symbolic_expansion(Bases& bases, const RationalPoly& p) {
  for (const auto& [w, c] : p)
    if (!is_convergent(w))
      throw UsageError("divergent word " + pretty(w) + "; regularized values are available through gamma_constant");
  Alphabet a = p.alphabet();
  LyndonExpansion e = a == Alphabet::Y ? decompose_stuffle(bases, p) : decompose_shuffle(bases, p);
  CPoly out;
  for (const auto& [w, c] : e.terms) {
    Monomial::Factors f;
    for (const auto& [l, i] : lyndon_factorization_grouped(w)) f.emplace_back(Symbol::of_lyndon(l), i);
    out.add_term(Monomial(std::move(f)), c);
  }
  return out;
}

CPoly reduce_zeta(const Identification& id, Bases& bases, const RationalPoly& p) {
  if (p.max_weight() > id.max_weight)
    throw UsageError("rewrite systems derived only up to weight " + std::to_string(id.max_weight));
  return normal_form(symbolic_expansion(bases, p), id.system(p.alphabet()));
}

CPoly reduce_zeta(const Identification& id, Bases& bases, const Word& w) {
  return reduce_zeta(id, bases, RationalPoly::word(w));
}

CPoly reduce_zeta(const Identification& id, Bases& bases, const std::vector<unsigned>& composition) {
  if (composition.empty()) throw UsageError("empty composition");
  return reduce_zeta(id, bases, Word(Alphabet::Y, composition));
}

CPoly gamma_constant(const Identification& id, const BridgeSystem& bridge, const Word& w, Regularization reg) {
  if (w.alphabet() != Alphabet::Y) throw UsageError("gamma_constant takes a Y-word");
  if (w.weight() > id.max_weight || w.weight() > bridge.truncation())
    throw UsageError("rewrite systems derived only up to weight " + std::to_string(id.max_weight));
  if (reg == Regularization::Stuffle) return id.transfer(bridge.z_gamma().coefficient(w), Alphabet::Y);
  return id.transfer(bridge.z_shuffle().coefficient(pi_X(w)), Alphabet::X);
}

bool reduce_random_order(const CPoly& p, std::span<const Rule> rules, std::uint64_t seed, CPoly& out,
                         std::size_t max_steps) {
  std::mt19937_64 rng(seed);
  out = p;
  for (std::size_t step = 0; step < max_steps; ++step) {
    std::vector<const Rule*> applicable;
    for (const Rule& r : rules)
      if (out.contains(r.lhs)) applicable.push_back(&r);
    if (applicable.empty()) return true;
    std::uniform_int_distribution<std::size_t> pick(0, applicable.size() - 1);
    const Rule* r = applicable[pick(rng)];
    CPoly next;
    for (const auto& [m, q] : out) {
      unsigned e = m.degree(r->lhs);
      if (e == 0) {
        next.add_term(m, q);
        continue;
      }
      // one occurrence at a time
      Monomial::Factors f;
      for (const auto& [s, k] : m.factors()) f.emplace_back(s, s == r->lhs ? k - 1 : k);
      next += CPoly(Monomial(std::move(f)), q) * r->rhs;
    }
    out = std::move(next);
  }
  return false;
}

ConfluenceReport check_confluence(Alphabet side, std::span<const Rule> rules, std::uint64_t seed, std::size_t samples) {
  ConfluenceReport report;
  report.violations = discipline_violations(side, rules);
  std::vector<Symbol> pool;
  {
    std::set<Symbol> seen;
    for (const Rule& r : rules) {
      seen.insert(r.lhs);
      for (const Symbol& s : r.rhs.symbols()) seen.insert(s);
    }
    pool.assign(seen.begin(), seen.end());
  }
  if (pool.empty()) return report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> small(-3, 3), count(1, 4), degree(1, 3);
  for (std::size_t i = 0; i < samples; ++i) {
    CPoly p;
    for (int t = count(rng); t > 0; --t) {
      Monomial::Factors f;
      for (int d = degree(rng); d > 0; --d) f.emplace_back(pool[pick(rng)], 1u);
      int c = small(rng);
      p.add_term(Monomial(std::move(f)), Rational(c == 0 ? 1 : c));
    }
    CPoly a, b;
    bool ta = reduce_random_order(p, rules, rng(), a, 2000);
    bool tb = reduce_random_order(p, rules, rng(), b, 2000);
    ++report.samples;
    if (!ta || !tb) {
      report.violations.push_back("reduction of " + to_string(p) + " does not terminate");
    } else if (!(a == b)) {
      report.violations.push_back("reduction of " + to_string(p) + " depends on rule order: " + to_string(a) +
                                  " vs " + to_string(b));
    }
    if (report.violations.size() > 20) break;
  }
  return report;
}

ConfluenceReport check_confluence(const RewriteSystem& rs, std::uint64_t seed, std::size_t samples) {
  return check_confluence(rs.side(), rs.rules(), seed, samples);
}

std::size_t count_monomials(const std::vector<unsigned>& generator_weights, unsigned k) {
  std::vector<std::size_t> ways(k + 1, 0);
  ways[0] = 1;
  for (unsigned g : generator_weights) {
    if (g == 0) throw UsageError("generators must have positive weight");
    for (unsigned j = g; j <= k; ++j) ways[j] += ways[j - g];
  }
  return ways[k];
}

std::vector<DimensionRow> dimension_report(const Identification& id) {
  std::vector<unsigned> wy, wx;
  for (const Symbol& s : id.y.irreducibles()) wy.push_back(s.weight());
  for (const Symbol& s : id.x.irreducibles()) wx.push_back(s.weight());
  std::vector<DimensionRow> out;
  for (unsigned k = 2; k <= id.max_weight; ++k) {
    DimensionRow r;
    r.weight = k;
    r.monomials_y = count_monomials(wy, k);
    r.monomials_x = count_monomials(wx, k);
    r.irreducibles_y = id.y.irreducibles_of_weight(k).size();
    r.irreducibles_x = id.x.irreducibles_of_weight(k).size();
    r.rules_y = id.y.rules_of_weight(k).size();
    r.rules_x = id.x.rules_of_weight(k).size();
    r.lyndon_y = unknowns_of_weight(Alphabet::Y, k).size();
    r.lyndon_x = unknowns_of_weight(Alphabet::X, k).size();
    out.push_back(r);
  }
  return out;
}

}  // namespace polyzeta
