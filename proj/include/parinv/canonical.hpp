#pragma once

// Canonical forms on the T-slice and expression of U-invariants in the
// generators N_xi.
//
// Restricted to the slice z = sum_{xi in T} c_xi E_xi, each N_xi is affine
// in c_xi with coefficient and constant term depending only on coordinates
// of smaller remoteness. Solving these relations in increasing remoteness
// recovers the slice point from invariant values, and yields each c_xi as a
// Laurent polynomial in the symbols y_xi standing for N_xi whenever every
// leading coefficient is a monomial in those symbols.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "parinv/formal_action.hpp"
#include "parinv/generators.hpp"
#include "parinv/polynomial.hpp"
#include "parinv/roots.hpp"

namespace parinv {

using InvariantVector = std::map<Root, Rational>;  // xi in T -> N_xi(x)
using CanonicalPoint = std::map<Root, Rational>;   // xi in T -> c_xi

// f = numerator(N) / denominator(N), both in the y-symbols.
struct Expression {
  Polynomial numerator;
  Monomial denominator;
};

class Canonicalizer {
 public:
  explicit Canonicalizer(const Composition& comp);

  const GeneratorSet& roots() const noexcept { return gs_; }
  const InvariantGenerators& generators() const noexcept { return gens_; }

  // Roots of T by increasing remoteness, ties in lex order.
  const std::vector<Root>& solve_order() const noexcept { return order_; }

  // N_xi restricted to the slice, in the c-variables.
  const Polynomial& restricted(const Root& xi) const { return restricted_.at(xi); }
  // Coefficient of c_xi in the restricted N_xi.
  const Polynomial& leading_coefficient(const Root& xi) const { return leading_.at(xi); }

  InvariantVector invariant_values(const RationalMatrix& x) const;

  // Throws Error{DegenerateOrbit} when a leading coefficient vanishes and
  // Error{BadInput} when v misses a root of T.
  CanonicalPoint reconstruct(const InvariantVector& v) const;

  CanonicalPoint canonical_form(const RationalMatrix& x) const;

  RationalMatrix to_matrix(const CanonicalPoint& z) const;

  // c_xi as a Laurent polynomial in the y-symbols. Throws
  // Error{NonMonomialDenominator} when a leading coefficient met on the way
  // is not a monomial in the y-symbols.
  const Polynomial& slice_coordinate_in_generators(const Root& xi) const;

  // Throws Error{NotInvariant} if f is not U-invariant, Error{BadInput}
  // if f uses non-entry variables. When the Laurent table is unavailable,
  // f is written as a polynomial in the generators by exact division and
  // Error{NonMonomialDenominator} is raised if that fails.
  Expression express(const Polynomial& f) const;

 private:
  void build_laurent_table() const;
  // g involves only the slice coordinates of order_[0, count).
  std::optional<Polynomial> divide_through(Polynomial g, std::size_t count) const;

  GeneratorSet gs_;
  InvariantGenerators gens_;
  std::vector<Root> order_;
  std::map<Root, Polynomial> restricted_;
  std::map<Root, Polynomial> leading_;
  std::map<Root, Polynomial> remainder_;

  mutable std::once_flag laurent_once_;
  mutable std::map<Root, Polynomial> laurent_;
  mutable std::string laurent_error_;  // set when the table stops early
};

// Splits a Laurent polynomial into numerator / monomial denominator with
// every variable's exponents made nonnegative and minimal.
Expression clear_denominators(const Polynomial& laurent);

}  // namespace parinv
