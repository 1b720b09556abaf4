#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cutideal {

using Exponent = std::int32_t;
// Dense exponent vector; position k is the k-th ring variable.
using Monomial = std::vector<Exponent>;

int degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);

// Monomial order over variables 0..N-1, variable 0 largest.
//
// Elimination orders compare the block variables first (degrevlex on the
// block) and break ties with degrevlex on the remaining variables.
class TermOrder {
 public:
  enum class Kind { Degrevlex, Lex, Elimination };

  static TermOrder degrevlex();
  static TermOrder lex();
  static TermOrder elimination(std::vector<std::size_t> block);
  // Degrevlex with `var` moved to the smallest position.
  static TermOrder degrevlex_smallest(std::size_t var);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& block() const { return block_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  Kind kind_ = Kind::Degrevlex;
  std::vector<std::size_t> block_;
  std::vector<char> mask_;
  std::ptrdiff_t last_ = -1;
};

// plus - minus with unit coefficients. A constant term is an all-zero
// monomial; the zero binomial is not representable.
class Binomial {
 public:
  Binomial(Monomial plus, Monomial minus);

  const Monomial& plus() const { return plus_; }
  const Monomial& minus() const { return minus_; }
  std::size_t variable_count() const { return plus_.size(); }

  // plus - minus as a lattice vector.
  std::vector<std::int64_t> difference() const;
  bool involves(std::size_t var) const { return plus_[var] != 0 || minus_[var] != 0; }
  // Same binomial up to sign, with the larger term in front.
  Binomial oriented(const TermOrder& order) const;

  friend auto operator<=>(const Binomial&, const Binomial&) = default;

 private:
  Monomial plus_;
  Monomial minus_;
};

// Binomial x^{u+} - x^{u-} of a lattice vector u != 0.
Binomial binomial_from_vector(std::span<const std::int64_t> u);

// Reduced Groebner basis of the ideal generated by `gens`, each element with
// its leading term in front, sorted by leading term ascending.
//
// Buchberger with the Gebauer-Moeller criteria; pairs are taken by smallest
// lcm degree, ties by the order itself. Pure-difference binomials stay
// pure-difference under S-pairs and reduction.
std::vector<Binomial> groebner_basis(std::span<const Binomial> gens, const TermOrder& order);

// Normal form of a monomial modulo a Groebner basis (again a monomial).
Monomial normal_form(Monomial m, std::span<const Binomial> basis);

bool reduces_to_zero(const Binomial& b, std::span<const Binomial> basis);

}  // namespace cutideal
