#pragma once

// The formal matrix of the nilradical and the adjoint action of the
// one-parameter subgroups g_{u,v}(t) = I + t E_{u,v} on it.

#include <string>
#include <vector>

#include "parinv/polynomial.hpp"
#include "parinv/roots.hpp"

namespace parinv {

// Which subgroup of N a generator is drawn from: all of N, the unipotent
// radical U (cells of M) or the Levi unipotent part U_L (reductive cells).
enum class GroupTag { N, U, UL };

std::string to_string(GroupTag tag);

struct GroupGenerator {
  int u = 0;
  int v = 0;
  Polynomial parameter;  // a parameter variable t_k or a rational constant

  static GroupGenerator symbolic(int u, int v, VariableId t = VariableId::t()) {
    return {u, v, Polynomial::variable(t)};
  }
  static GroupGenerator numeric(int u, int v, const Rational& t) { return {u, v, Polynomial(t)}; }

  std::string to_string() const;  // g_{u,v}(t)
};

bool belongs_to(const GroupGenerator& g, GroupTag tag, const Composition& comp);

// The cells (u,v) indexing the one-parameter generators of the group.
std::vector<Root> generator_cells(GroupTag tag, const Composition& comp);

class FormalMatrix {
 public:
  FormalMatrix(Composition comp, PolyMatrix entries);

  const Composition& composition() const noexcept { return comp_; }
  int n() const noexcept { return comp_.n(); }
  // 1-based.
  const Polynomial& at(int i, int j) const { return entries_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
  const PolyMatrix& entries() const noexcept { return entries_; }

  // Rows/columns given as 1-based index lists.
  PolyMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  friend bool operator==(const FormalMatrix& a, const FormalMatrix& b) {
    return a.comp_ == b.comp_ && a.entries_ == b.entries_;
  }

 private:
  Composition comp_;
  PolyMatrix entries_;
};

// x_{i,j} on M, zero elsewhere.
FormalMatrix build_formal_matrix(const Composition& comp);

// (I + tE_{u,v}) X (I - tE_{u,v}); throws Error{LeavesNilradical} if the
// result is nonzero outside M, Error{BadInput} for an invalid cell.
FormalMatrix conjugate(const FormalMatrix& x, const GroupGenerator& g);

// f(Ad_{g^{-1}} x): each x_{a,b} is replaced by entry (a,b) of g X g^{-1},
// which is the row/column rule x_{a,b} -> x_{a,b} + t x_{v,b} (a = u),
// x_{a,b} -> x_{a,b} - t x_{a,u} (b = v).
Polynomial act_on_polynomial(const Polynomial& f, const GroupGenerator& g, const Composition& comp);

using RationalMatrix = std::vector<std::vector<Rational>>;  // 0-based storage

RationalMatrix zero_matrix(int n);

// Throws Error{LeavesNilradical} if x has a nonzero cell outside M and
// Error{BadInput} on a shape mismatch.
void require_nilradical_support(const Composition& comp, const RationalMatrix& x);

RationalMatrix act_on_point(const Composition& comp, const RationalMatrix& x, int u, int v, const Rational& t);

// x_{i,j} -> value for every (i,j) in M.
Assignment entry_assignment(const Composition& comp, const RationalMatrix& x);

}  // namespace parinv
