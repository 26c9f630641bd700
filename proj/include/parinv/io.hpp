#pragma once

// Text and JSON surfaces: diagrams, generator-set export, polynomial term
// lists, rational matrices and invariant/canonical maps.

#include <string>

#include "json.hpp"
#include "parinv/canonical.hpp"
#include "parinv/formal_action.hpp"
#include "parinv/polynomial.hpp"
#include "parinv/roots.hpp"

namespace parinv {

using Json = nlohmann::ordered_json;

Json root_to_json(const Root& r);  // [i, j]
Json roots_to_json(const RootSet& roots);

// {composition, M, S_layers, pairs, phi, T, M_prime}
Json generator_set_to_json(const GeneratorSet& gs);

// {"[[\"x_{1,3}\",1],[\"x_{2,4}\",1]]": "p/q", ...}; terms in descending
// graded lex order, the constant term under the key "[]".
Json polynomial_to_json(const Polynomial& p);
// Throws Error{BadInput}.
Polynomial polynomial_from_json(const Json& j);

// n x n array of "p/q" strings.
Json matrix_to_json(const RationalMatrix& m);
// Rejects shape mismatches (BadInput) and support outside M
// (LeavesNilradical).
RationalMatrix matrix_from_json(const Json& j, const Composition& comp);

// {"(i,j)": "p/q", ...} in lex order of the roots.
Json root_values_to_json(const std::map<Root, Rational>& values);

// One row per matrix row; each cell is a primary marker ('.' outside M,
// 'o' in M, 'T' in T \ S, 'S' in S) followed by 'X' when the cell is in Φ.
std::string render_diagram(const GeneratorSet& gs);

}  // namespace parinv
