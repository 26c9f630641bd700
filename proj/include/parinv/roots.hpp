#pragma once

// Type-A root combinatorics attached to a block composition of n.
//
// A positive root e_i - e_j is stored as the matrix cell (i, j), 1-based.
// The composition (r_1, ..., r_s) fixes the nilradical roots M (cells
// strictly above the block diagonal) and the reductive roots (cells
// strictly above the diagonal inside a diagonal block).

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace parinv {

struct Root {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Root&, const Root&) = default;
};

std::string to_string(const Root& r);  // "(i,j)"

using RootSet = std::set<Root>;

class Composition {
 public:
  // Throws Error{BadComposition} on an empty list or a non-positive size.
  explicit Composition(std::vector<int> sizes);

  // Parses "2,1,3,2".
  static Composition parse(const std::string& text);

  const std::vector<int>& sizes() const noexcept { return sizes_; }
  int blocks() const noexcept { return static_cast<int>(sizes_.size()); }
  int n() const noexcept { return partial_sums_.back(); }

  // R_k for k = 0..s.
  int partial_sum(int k) const { return partial_sums_.at(static_cast<std::size_t>(k)); }

  // 1-based block index k with R_{k-1} < i <= R_k.
  int block_of(int i) const { return block_of_.at(static_cast<std::size_t>(i)); }

  bool in_nilradical(const Root& r) const;
  bool in_reductive(const Root& r) const;
  // Cell lies in some block X_{k,k+1}.
  bool in_superdiagonal_block(const Root& r) const;
  // Both roots in the same block X_{k,l}.
  bool same_block(const Root& a, const Root& b) const;

  std::string to_string() const;  // "2,1,3,2"

  friend bool operator==(const Composition& a, const Composition& b) { return a.sizes_ == b.sizes_; }

 private:
  std::vector<int> sizes_;
  std::vector<int> partial_sums_;
  std::vector<int> block_of_;  // index 0 unused
};

// Every composition of n, in lexicographic order of the size lists.
std::vector<Composition> all_compositions(int n);

struct BaseLayers {
  std::vector<RootSet> layers;
  RootSet all;

  // 1-based layer index of a base root, 0 if absent.
  int layer_of(const Root& r) const;
};

struct AdmissiblePair {
  Root xi;
  Root xi_prime;
  Root alpha;  // (xi.j, xi_prime.i)
  Root phi;    // alpha + xi_prime = (xi.j, xi_prime.j)

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

RootSet roots_of_nilradical(const Composition& comp);
RootSet reductive_roots(const Composition& comp);

// a > b: a - b is a positive root, i.e. same row with a to the right or
// same column with a above. Not transitive-closed into an order.
bool greater(const Root& a, const Root& b);

RootSet minimal_elements(const RootSet& roots);

BaseLayers compute_base(const Composition& comp);

// Antidiagonal cells (R_k - t, R_k + 1 + t) of every X_{k,k+1} lie in S.
bool antidiagonal_check(const Composition& comp, const BaseLayers& base);

// Throws Error{DuplicatePhi} if two pairs yield the same phi.
std::vector<AdmissiblePair> admissible_pairs(const Composition& comp, const BaseLayers& base);

RootSet broad_base(const Composition& comp, const BaseLayers& base);

RootSet m_prime(const Composition& comp);

// Number of roots in the longest chain gamma = g_1 > g_2 > ... inside M.
// Throws Error{RootNotInM}.
int remoteness(const Composition& comp, const Root& gamma);

// a.i > b.i and a.j < b.j.
bool prec(const Root& a, const Root& b);

// The prec-maximal elements of {phi in S : phi prec gamma}.
RootSet prec_maximal_in_S(const Root& gamma, const BaseLayers& base);

// Everything derived from a composition, computed once.
struct GeneratorSet {
  explicit GeneratorSet(Composition c);

  Composition composition;
  RootSet M;
  RootSet delta_r;
  BaseLayers base;
  std::vector<AdmissiblePair> pairs;
  RootSet phi;
  RootSet T;
  RootSet M_prime;

  int remoteness_of(const Root& r) const;  // cached; RootNotInM outside M

 private:
  std::vector<int> remoteness_;  // n*n, 0 outside M
};

}  // namespace parinv
