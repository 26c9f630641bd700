#pragma once

// Generator polynomials: the minors attached to roots of M, the
// quadratic-in-minors invariants attached to admissible pairs, and the
// U-invariants attached to the broad base, plus restriction to the two
// coordinate slices (support S ∪ Φ and support T).

#include <map>
#include <vector>

#include "parinv/polynomial.hpp"
#include "parinv/roots.hpp"

namespace parinv {

// gamma = (a,b); rows {a} ∪ {i : (i,j) in S_gamma}, columns
// {j : (i,j) in S_gamma} ∪ {b}, both sorted, where
// S_gamma = {(i,j) in S : i > a, j < b}.
struct MinorSpec {
  Root gamma;
  std::vector<Root> below;  // S_gamma
  std::vector<int> rows;
  std::vector<int> cols;
};

// Throws Error{RootNotInM}.
MinorSpec minor_spec(const GeneratorSet& gs, const Root& gamma);

// Determinant of the minor described by minor_spec; x_gamma when S_gamma
// is empty.
Polynomial root_minor(const GeneratorSet& gs, const Root& gamma);

// Sum over alpha_1 + alpha_2 = alpha_q (alpha_i reductive or zero) of
// M_{xi + alpha_1} * M_{alpha_2 + xi'}.
Polynomial pair_invariant(const GeneratorSet& gs, const AdmissiblePair& q);

// x_xi on M \ M', the minor of xi on M'. Throws Error{RootNotInT}.
Polynomial radical_invariant(const GeneratorSet& gs, const Root& xi);

// x_g -> c_g for g in S ∪ Φ, 0 otherwise.
Polynomial restrict_to_slice_y(const GeneratorSet& gs, const Polynomial& f);

// x_g -> c_g for g in T, 0 otherwise.
Polynomial restrict_to_slice_z(const GeneratorSet& gs, const Polynomial& f);

struct InvariantGenerators {
  std::map<Root, Polynomial> base_minors;      // xi in S
  std::map<Root, Polynomial> pair_invariants;  // keyed by phi
  std::map<Root, Polynomial> radical;          // xi in T
};

InvariantGenerators build_generators(const GeneratorSet& gs);

// Deterministic listing order: base roots by layer then lex; everything
// else lex.
std::vector<Root> base_roots_in_layer_order(const GeneratorSet& gs);

}  // namespace parinv
