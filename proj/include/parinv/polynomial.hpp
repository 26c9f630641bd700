#pragma once

// Exact sparse multivariate (Laurent) polynomials over Q.
//
// Variables are matrix entries x_{i,j}, group parameters t_k, slice
// coordinates c_{i,j} and generator symbols y_{i,j}. Terms live in a map
// ordered by graded lex, so two polynomials are equal iff their term maps
// are equal. Negative exponents are permitted so that the Laurent ring in
// the y-symbols can be represented with the same type; everything outside
// canonicalization only ever produces nonnegative exponents.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parinv/roots.hpp"

namespace parinv {

using Rational = mpq_class;

// Accepts "p", "-p", "p/q"; the result is canonical. Throws Error{BadInput}.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);  // "p" or "p/q"

enum class VarKind : std::uint8_t { Entry = 0, Param = 1, Slice = 2, Generator = 3 };

class VariableId {
 public:
  VariableId() = default;

  static VariableId x(int i, int j) { return VariableId(VarKind::Entry, i, j); }
  static VariableId x(const Root& r) { return x(r.i, r.j); }
  static VariableId t(int k = 0) { return VariableId(VarKind::Param, k, 0); }
  static VariableId c(const Root& r) { return VariableId(VarKind::Slice, r.i, r.j); }
  static VariableId y(const Root& r) { return VariableId(VarKind::Generator, r.i, r.j); }

  // Inverse of name(). Throws Error{BadInput}.
  static VariableId parse(std::string_view text);

  VarKind kind() const noexcept { return static_cast<VarKind>(code_ >> 16); }
  Root root() const noexcept { return {static_cast<int>((code_ >> 8) & 0xff), static_cast<int>(code_ & 0xff)}; }
  int param_index() const noexcept { return static_cast<int>((code_ >> 8) & 0xff); }

  std::string name() const;  // x_{1,3}, t, t_2, c_{1,3}, y_{1,3}

  friend auto operator<=>(const VariableId&, const VariableId&) = default;

 private:
  VariableId(VarKind kind, int a, int b)
      : code_((static_cast<std::uint32_t>(kind) << 16) | (static_cast<std::uint32_t>(a & 0xff) << 8) |
              static_cast<std::uint32_t>(b & 0xff)) {}

  std::uint32_t code_ = 0;
};

class Monomial {
 public:
  using Factor = std::pair<VariableId, int>;

  Monomial() = default;
  explicit Monomial(VariableId v, int exponent = 1);
  // Factors may repeat or carry zero exponents; they are normalized.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  int degree() const noexcept;
  int exponent(VariableId v) const noexcept;
  bool has_negative_exponent() const noexcept;

  Monomial inverse() const;
  // Same monomial with v removed.
  Monomial without(VariableId v) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;  // "1" for the empty monomial

 private:
  std::vector<Factor> factors_;  // sorted by variable, nonzero exponents
};

// Graded lex: total degree first, then the larger exponent on the
// earliest variable wins.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexLess>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT

  static Polynomial variable(VariableId v) { return term(Monomial(v), 1); }
  static Polynomial term(const Monomial& m, const Rational& coeff);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Constant term.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  // Highest total degree among the terms; 0 for the zero polynomial.
  int degree() const noexcept;
  std::set<VariableId> variables() const;
  bool is_laurent() const noexcept;  // any negative exponent present

  // Collects p as sum_k coeff_k * v^k.
  std::map<int, Polynomial> coefficients_in(VariableId v) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a);

  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

using Substitution = std::map<VariableId, Polynomial>;
using Assignment = std::map<VariableId, Rational>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Ring homomorphism fixing every variable not named in `map`. A negative
// exponent is only allowed when the image of that variable is a single term.
Polynomial substitute(const Polynomial& p, const Substitution& map);

// Replaces the assigned variables by their values and keeps the rest.
Polynomial partial_evaluate(const Polynomial& p, const Assignment& point);

Polynomial differentiate(const Polynomial& p, VariableId v);

// q with p = q * d when such a polynomial exists. Both inputs must be
// ordinary polynomials and d nonzero.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

// Throws Error{MissingAssignment} when a variable of p has no value.
Rational evaluate(const Polynomial& p, const Assignment& point);

// Cofactor expansion along rows, memoized on the set of used columns.
Polynomial determinant(const PolyMatrix& m);

}  // namespace parinv
