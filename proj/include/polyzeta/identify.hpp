#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "polyzeta/bases.hpp"
#include "polyzeta/series.hpp"
#include "polyzeta/symbols.hpp"

namespace polyzeta {

struct BridgeEquation {
  Word word;       // Y-word for Z_gamma = B(y1) pi_Y(Z_sh), X-word for Z_sh = B(x1)^{-1} pi_X(Z_gamma)
  CPoly residual;  // the equation is residual == 0
};

// Generating series and both forms of the bridge, truncated at N.
class BridgeSystem {
 public:
  BridgeSystem(unsigned N, Bases& bases);

  unsigned truncation() const { return N_; }
  Bases& bases() const { return *bases_; }
  const Series& z_shuffle() const { return z_shuffle_; }
  const Series& z_stuffle() const { return z_stuffle_; }
  const Series& z_gamma() const { return z_gamma_; }
  const Series& y_rhs() const { return y_rhs_; }  // B(y1) pi_Y(Z_sh)
  const Series& x_rhs() const { return x_rhs_; }  // B(x1)^{-1} pi_X(Z_gamma)

  // Residual for any word: Y-words use the Y form, X-words the X form.
  CPoly residual(const Word& w) const;

 private:
  unsigned N_;
  Bases* bases_;
  Series z_shuffle_, z_stuffle_, z_gamma_, y_rhs_, x_rhs_;
};

// Every Y-word of weight p, and every X-word of weight p ending in x1. X-words ending in x0
// carry no equation: pi_Y annihilates them, so B(x1)^{-1} pi_X Z_gamma vanishes there while Z_sh does not.
std::vector<BridgeEquation> bridge_equations(const BridgeSystem& bridge, unsigned p);

struct WeightSummary {
  unsigned weight = 0;
  std::size_t equations = 0;
  std::size_t unknowns_y = 0, unknowns_x = 0;
  std::size_t relations_checked = 0;  // derived values inspected for gamma and homogeneity
  unsigned max_gamma_degree = 0;      // over those values; nonzero aborts the run
  std::vector<Symbol> new_irreducibles_y, new_irreducibles_x;
};

// Result of the identification: one rewrite system per side plus, for every symbol of
// weight <= max_weight, its expression over the irreducibles of each side.
struct Identification {
  unsigned max_weight = 0;
  RewriteSystem y{Alphabet::Y}, x{Alphabet::X};
  std::map<Symbol, CPoly> in_y, in_x;
  std::vector<WeightSummary> summaries;

  const RewriteSystem& system(Alphabet side) const { return side == Alphabet::Y ? y : x; }
  const std::map<Symbol, CPoly>& values(Alphabet side) const { return side == Alphabet::Y ? in_y : in_x; }
  // Rewrites every symbol (gamma kept) over the target side's irreducibles.
  CPoly transfer(const CPoly& p, Alphabet target) const;
};

Identification local_coordinate_identification(const BridgeSystem& bridge, unsigned max_weight);
Identification local_coordinate_identification(unsigned max_weight, Bases& bases);

// Convergent input only; the value is over the irreducibles of the input's side.
CPoly reduce_zeta(const Identification& id, Bases& bases, const RationalPoly& p);
CPoly reduce_zeta(const Identification& id, Bases& bases, const Word& w);
CPoly reduce_zeta(const Identification& id, Bases& bases, const std::vector<unsigned>& composition);

// Expansion of a convergent polynomial on the local coordinates, before rewriting.
CPoly symbolic_expansion(Bases& bases, const RationalPoly& p);

enum class Regularization : std::uint8_t { Stuffle, Shuffle };

// Stuffle: <Z_gamma|w> over Y irreducibles. Shuffle: <Z_sh|pi_X(w)> over X irreducibles.
CPoly gamma_constant(const Identification& id, const BridgeSystem& bridge, const Word& w,
                     Regularization reg = Regularization::Stuffle);

struct ConfluenceReport {
  std::vector<std::string> violations;
  std::size_t samples = 0;
  bool clean() const { return violations.empty(); }
};

ConfluenceReport check_confluence(Alphabet side, std::span<const Rule> rules, std::uint64_t seed = 1,
                                  std::size_t samples = 100);
ConfluenceReport check_confluence(const RewriteSystem& rs, std::uint64_t seed = 1, std::size_t samples = 100);

// Applies applicable rules one at a time, picking among them with the given random order.
// Returns false if the step budget runs out.
bool reduce_random_order(const CPoly& p, std::span<const Rule> rules, std::uint64_t seed, CPoly& out,
                         std::size_t max_steps = 10000);

struct DimensionRow {
  unsigned weight = 0;
  std::size_t monomials_y = 0, monomials_x = 0;  // free commutative algebra on the irreducibles
  std::size_t irreducibles_y = 0, irreducibles_x = 0;
  std::size_t rules_y = 0, rules_x = 0;
  std::size_t lyndon_y = 0, lyndon_x = 0;  // letters y1, x0, x1 excluded
  bool direct_sum_y() const { return rules_y + irreducibles_y == lyndon_y; }
  bool direct_sum_x() const { return rules_x + irreducibles_x == lyndon_x; }
};

std::vector<DimensionRow> dimension_report(const Identification& id);
// Number of monomials of weight k in free commutative generators of the given weights.
std::size_t count_monomials(const std::vector<unsigned>& generator_weights, unsigned k);

}  // namespace polyzeta
