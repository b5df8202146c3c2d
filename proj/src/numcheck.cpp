#include "polyzeta/numcheck.hpp"

#include <algorithm>
#include <sstream>

#include "polyzeta/error.hpp"

namespace polyzeta {

Real to_real(const Rational& q) {
  Real num(q.get_num().get_str()), den(q.get_den().get_str());
  return num / den;
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw UsageError("composition must have at least one part");
  for (unsigned s : parts_)
    if (s == 0) throw UsageError("composition parts must be positive");
}

Composition Composition::parse(std::string_view text) {
  Word w = parse_word(Alphabet::Y, text);
  if (w.empty()) throw UsageError("empty composition");
  return Composition(w.letters());
}

Composition Composition::from_word(const Word& y_word) {
  if (y_word.alphabet() != Alphabet::Y || y_word.empty()) throw UsageError("composition needs a nonempty Y-word");
  return Composition(y_word.letters());
}

unsigned Composition::weight() const {
  unsigned w = 0;
  for (unsigned s : parts_) w += s;
  return w;
}

Composition Composition::tail() const {
  if (parts_.size() < 2) throw UsageError("tail of a depth-1 composition");
  return Composition(std::vector<unsigned>(parts_.begin() + 1, parts_.end()));
}

std::string to_string(const Composition& s) { return to_string(s.to_word()); }

Rational harmonic_sum_exact(const Composition& s, unsigned long n) {
  // H[j] holds H_{(s_j, ..., s_r)}(k) as k advances; deeper tails are updated first.
  const auto& p = s.parts();
  std::vector<Rational> h(p.size() + 1, Rational(0));
  h[p.size()] = 1;
  for (unsigned long k = 1; k <= n; ++k) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      mpz_class d;
      mpz_ui_pow_ui(d.get_mpz_t(), k, p[j]);
      h[j] += h[j + 1] / Rational(d);
    }
  }
  return h[0];
}

std::map<Composition, std::vector<Real>> harmonic_sums(const std::set<Composition>& comps,
                                                        const std::vector<unsigned long>& checkpoints) {
  std::set<Composition> closed;
  for (const Composition& c : comps) {
    Composition t = c;
    closed.insert(t);
    while (t.depth() > 1) {
      t = t.tail();
      closed.insert(t);
    }
  }
  std::vector<Composition> order(closed.begin(), closed.end());
  std::stable_sort(order.begin(), order.end(), [](const Composition& a, const Composition& b) { return a.depth() > b.depth(); });
  std::map<Composition, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index.emplace(order[i], i);
  std::vector<std::size_t> tail_of(order.size(), SIZE_MAX);
  unsigned max_part = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i].depth() > 1) tail_of[i] = index.at(order[i].tail());
    max_part = std::max(max_part, order[i].parts()[0]);
  }
  std::vector<unsigned long> marks = checkpoints;
  std::sort(marks.begin(), marks.end());
  std::map<Composition, std::vector<Real>> out;
  for (const Composition& c : comps) out[c].resize(checkpoints.size());

  std::vector<Real> h(order.size(), Real(0));
  std::vector<Real> inv_pow(max_part + 1);
  const Real one(1);
  std::size_t next_mark = 0;
  auto record = [&](unsigned long k) {
    while (next_mark < marks.size() && marks[next_mark] == k) {
      for (std::size_t ci = 0; ci < checkpoints.size(); ++ci) {
        if (checkpoints[ci] != k) continue;
        for (auto& [c, vals] : out) vals[ci] = h[index.at(c)];
      }
      ++next_mark;
    }
  };
  record(0);
  const unsigned long last = marks.empty() ? 0 : marks.back();
  for (unsigned long k = 1; k <= last; ++k) {
    inv_pow[1] = one / Real(k);
    for (unsigned s = 2; s <= max_part; ++s) mpfr_mul(inv_pow[s].backend().data(), inv_pow[s - 1].backend().data(), inv_pow[1].backend().data(), MPFR_RNDN);
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto* hi = h[i].backend().data();
      const auto* ip = inv_pow[order[i].parts()[0]].backend().data();
      if (tail_of[i] == SIZE_MAX) {
        mpfr_add(hi, hi, ip, MPFR_RNDN);
      } else {
        mpfr_fma(hi, h[tail_of[i]].backend().data(), ip, hi, MPFR_RNDN);
      }
    }
    record(k);
  }
  return out;
}

Real harmonic_sum(const Composition& s, unsigned long n) { return harmonic_sums({s}, {n}).at(s)[0]; }

namespace {

Real model_error(const Composition& s, unsigned long n, bool refine) {
  Real l = 1 + log(Real(n));
  std::size_t d = s.depth() - (refine ? 1 : 0);
  Real e(1);
  for (std::size_t i = 0; i < d; ++i) e *= l;
  return e / Real(n);
}

}  // namespace

std::map<Composition, Estimate> mzv_estimates(const std::set<Composition>& comps, unsigned long n, bool refine) {
  if (n == 0) throw UsageError("n must be positive");
  for (const Composition& c : comps)
    if (!c.convergent()) throw UsageError("divergent composition (" + to_string(c) + "): s1 must be at least 2");
  std::vector<unsigned long> marks{n};
  if (refine) marks.push_back(2 * n);
  auto sums = harmonic_sums(comps, marks);
  std::map<Composition, Estimate> out;
  for (const Composition& c : comps) {
    const auto& v = sums.at(c);
    Real value = refine ? Real(2 * v[1] - v[0]) : v[0];
    out.emplace(c, Estimate{value, model_error(c, n, refine)});
  }
  return out;
}

Estimate mzv_estimate(const Composition& s, unsigned long n, bool refine) { return mzv_estimates({s}, n, refine).at(s); }

Real euler_gamma_estimate(unsigned long n) {
  if (n == 0) throw UsageError("n must be positive");
  Real h = harmonic_sum(Composition({1}), n);
  Real nn(n);
  return h - log(nn) - 1 / (2 * nn) + 1 / (12 * nn * nn);
}

Real finite_part_estimate(const Composition& s, unsigned long n, unsigned log_degree) {
  const std::size_t m = 2 * (log_degree + 1);
  std::vector<unsigned long> marks;
  for (std::size_t i = 0; i < m; ++i) marks.push_back(n << i);
  std::vector<Real> h = harmonic_sums({s}, marks).at(s);
  // Unknowns a_j (log^j N) and b_j (log^j N / N); Gaussian elimination with partial pivoting.
  std::vector<std::vector<Real>> a(m, std::vector<Real>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    Real N(marks[i]), L = log(N), p(1);
    for (unsigned j = 0; j <= log_degree; ++j) {
      a[i][j] = p;
      a[i][log_degree + 1 + j] = p / N;
      p *= L;
    }
    a[i][m] = h[i];
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t best = c;
    for (std::size_t r = c + 1; r < m; ++r)
      if (abs(a[r][c]) > abs(a[best][c])) best = r;
    std::swap(a[c], a[best]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c) continue;
      Real f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return a[0][m] / a[0][0];
}

NumericEvaluator::NumericEvaluator(Bases& bases, unsigned long n, bool refine) : bases_(bases), n_(n), refine_(refine) {
  if (n == 0) throw UsageError("n must be positive");
}

RationalPoly NumericEvaluator::zeta_expansion(const Symbol& s) {
  if (s.kind() == Symbol::Kind::ZSigma) return bases_.Sigma(s.word());
  RationalPoly out(Alphabet::Y);
  for (const auto& [w, q] : bases_.S(s.word())) {
    auto y = pi_Y(w);
    if (!y) throw UsageError("no convergent value for " + to_string(s) + ": S-expansion meets " + pretty(w));
    out.add_term(*y, q);
  }
  return out;
}

void NumericEvaluator::require(const Symbol& s) {
  if (s.is_gamma()) {
    if (!have_gamma_) {
      gamma_ = Estimate{euler_gamma_estimate(n_), Real(1) / (Real(n_) * Real(n_) * Real(n_) * Real(n_))};
      have_gamma_ = true;
    }
    return;
  }
  if (symbols_.count(s)) return;
  for (const auto& [w, q] : zeta_expansion(s)) {
    if (!is_convergent(w) || w.empty()) throw UsageError("no convergent value for " + to_string(s));
    Composition c = Composition::from_word(w);
    if (!zetas_.count(c)) pending_.insert(c);
  }
}

void NumericEvaluator::require(const CPoly& p) {
  for (const Symbol& s : p.symbols()) require(s);
}

void NumericEvaluator::run() {
  if (pending_.empty()) return;
  for (auto& [c, e] : mzv_estimates(pending_, n_, refine_)) zetas_.insert_or_assign(c, e);
  pending_.clear();
}

Estimate NumericEvaluator::value(const Symbol& s) {
  if (s.is_gamma()) {
    require(s);
    return gamma_;
  }
  if (auto it = symbols_.find(s); it != symbols_.end()) return it->second;
  require(s);
  run();
  Estimate e{Real(0), Real(0)};
  for (const auto& [w, q] : zeta_expansion(s)) {
    const Estimate& z = zetas_.at(Composition::from_word(w));
    Real r = to_real(q);
    e.value += r * z.value;
    e.error += abs(r) * z.error;
  }
  symbols_.emplace(s, e);
  return e;
}

Estimate NumericEvaluator::value(const CPoly& p) {
  require(p);
  run();
  Estimate out{Real(0), Real(0)};
  for (const auto& [m, q] : p) {
    Real r = to_real(q), v = r, bound = abs(r);
    for (const auto& [s, e] : m.factors()) {
      Estimate x = value(s);
      for (unsigned i = 0; i < e; ++i) {
        v *= x.value;
        bound *= abs(x.value) + x.error;
      }
    }
    out.value += v;
    out.error += bound - abs(v);
  }
  return out;
}

std::vector<NumericCheck> verify_relations_numeric(Bases& bases, std::span<const CPoly> equations, unsigned long n,
                                                   double tol) {
  NumericEvaluator ev(bases, n, true);
  for (const CPoly& e : equations) ev.require(e);
  ev.run();
  std::vector<NumericCheck> out;
  for (const CPoly& e : equations) {
    Estimate v = ev.value(e);
    NumericCheck c;
    c.residual = abs(v.value);
    c.error = v.error;
    c.pass = c.residual < Real(tol);
    out.push_back(c);
  }
  return out;
}

NumericCheck verify_relation_numeric(Bases& bases, const CPoly& equation, unsigned long n, double tol) {
  return verify_relations_numeric(bases, std::span<const CPoly>(&equation, 1), n, tol).front();
}

NumericCheck verify_relation_numeric(Bases& bases, const Rule& rule, unsigned long n, double tol) {
  return verify_relation_numeric(bases, CPoly(rule.lhs) - rule.rhs, n, tol);
}

}  // namespace polyzeta
