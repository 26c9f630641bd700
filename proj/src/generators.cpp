#include "parinv/generators.hpp"

#include <algorithm>

#include "parinv/error.hpp"
#include "parinv/formal_action.hpp"

namespace parinv {

MinorSpec minor_spec(const GeneratorSet& gs, const Root& gamma) {
  if (!gs.composition.in_nilradical(gamma))
    throw Error(ErrorCode::RootNotInM, to_string(gamma) + " is not in M");
  MinorSpec spec{gamma, {}, {gamma.i}, {}};
  for (const Root& s : gs.base.all) {
    if (s.i > gamma.i && s.j < gamma.j) {
      spec.below.push_back(s);
      spec.rows.push_back(s.i);
      spec.cols.push_back(s.j);
    }
  }
  spec.cols.push_back(gamma.j);
  std::sort(spec.rows.begin(), spec.rows.end());
  std::sort(spec.cols.begin(), spec.cols.end());
  return spec;
}

Polynomial root_minor(const GeneratorSet& gs, const Root& gamma) {
  const MinorSpec spec = minor_spec(gs, gamma);
  if (spec.below.empty()) return Polynomial::variable(VariableId::x(gamma));
  const FormalMatrix x = build_formal_matrix(gs.composition);
  return determinant(x.submatrix(spec.rows, spec.cols));
}

Polynomial pair_invariant(const GeneratorSet& gs, const AdmissiblePair& q) {
  // xi = (i,j), xi' = (k,l), alpha_q = (j,k); the splittings of alpha_q are
  // (0, (j,k)), ((j,c),(c,k)) for j < c < k, and ((j,k), 0).
  const int i = q.xi.i;
  const int j = q.xi.j;
  const int k = q.xi_prime.i;
  const int l = q.xi_prime.j;
  Polynomial sum;
  for (int c = j; c <= k; ++c) sum += root_minor(gs, {i, c}) * root_minor(gs, {c, l});
  return sum;
}

Polynomial radical_invariant(const GeneratorSet& gs, const Root& xi) {
  if (!gs.T.count(xi)) throw Error(ErrorCode::RootNotInT, to_string(xi) + " is not in T");
  if (!gs.M_prime.count(xi)) return Polynomial::variable(VariableId::x(xi));
  return root_minor(gs, xi);
}

namespace {

Polynomial restrict_to(const Polynomial& f, const RootSet& support) {
  Substitution sub;
  for (const VariableId v : f.variables()) {
    if (v.kind() != VarKind::Entry) continue;
    const Root r = v.root();
    sub.emplace(v, support.count(r) ? Polynomial::variable(VariableId::c(r)) : Polynomial());
  }
  return substitute(f, sub);
}

}  // namespace

Polynomial restrict_to_slice_y(const GeneratorSet& gs, const Polynomial& f) {
  RootSet support = gs.base.all;
  support.insert(gs.phi.begin(), gs.phi.end());
  return restrict_to(f, support);
}

Polynomial restrict_to_slice_z(const GeneratorSet& gs, const Polynomial& f) { return restrict_to(f, gs.T); }

InvariantGenerators build_generators(const GeneratorSet& gs) {
  InvariantGenerators out;
  for (const Root& xi : gs.base.all) out.base_minors.emplace(xi, root_minor(gs, xi));
  for (const auto& q : gs.pairs) out.pair_invariants.emplace(q.phi, pair_invariant(gs, q));
  for (const Root& xi : gs.T) out.radical.emplace(xi, radical_invariant(gs, xi));
  return out;
}

std::vector<Root> base_roots_in_layer_order(const GeneratorSet& gs) {
  std::vector<Root> out;
  for (const auto& layer : gs.base.layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

}  // namespace parinv
