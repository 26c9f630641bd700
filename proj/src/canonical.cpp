#include "parinv/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "parinv/error.hpp"
#include "parinv/verify.hpp"

namespace parinv {

namespace {

std::string root_list(const RootSet& roots) {
  std::string out = "{";
  for (const Root& r : roots) out += (out.size() > 1 ? "," : "") + to_string(r);
  return out + "}";
}

}  // namespace

Canonicalizer::Canonicalizer(const Composition& comp) : gs_(comp), gens_(build_generators(gs_)) {
  order_.assign(gs_.T.begin(), gs_.T.end());
  std::stable_sort(order_.begin(), order_.end(), [&](const Root& a, const Root& b) {
    return gs_.remoteness_of(a) < gs_.remoteness_of(b);
  });
  for (const Root& xi : order_) {
    const Polynomial restricted = restrict_to_slice_z(gs_, gens_.radical.at(xi));
    const VariableId own = VariableId::c(xi);
    auto parts = restricted.coefficients_in(own);
    for (const auto& [power, coeff] : parts) {
      if (power != 0 && power != 1)
        throw std::logic_error("N" + to_string(xi) + " is not affine in its own slice coordinate");
      for (const VariableId v : coeff.variables()) {
        if (gs_.remoteness_of(v.root()) >= gs_.remoteness_of(xi))
          throw std::logic_error("N" + to_string(xi) + " involves " + v.name() + " of no smaller remoteness");
      }
    }
    leading_.emplace(xi, parts[1]);
    remainder_.emplace(xi, parts[0]);
    restricted_.emplace(xi, restricted);
  }
}

InvariantVector Canonicalizer::invariant_values(const RationalMatrix& x) const {
  require_nilradical_support(gs_.composition, x);
  const Assignment point = entry_assignment(gs_.composition, x);
  InvariantVector out;
  for (const auto& [xi, p] : gens_.radical) out.emplace(xi, evaluate(p, point));
  return out;
}

CanonicalPoint Canonicalizer::reconstruct(const InvariantVector& v) const {
  Assignment known;
  CanonicalPoint z;
  for (const Root& xi : order_) {
    auto it = v.find(xi);
    if (it == v.end()) throw Error(ErrorCode::BadInput, "no invariant value for " + to_string(xi));
    const Rational a = evaluate(leading_.at(xi), known);
    if (a == 0) {
      throw Error(ErrorCode::DegenerateOrbit,
                  "leading coefficient of N" + to_string(xi) + " vanishes (product of N over " +
                      root_list(prec_maximal_in_S(xi, gs_.base)) + ")");
    }
    const Rational b = evaluate(remainder_.at(xi), known);
    const Rational c = (it->second - b) / a;
    known.emplace(VariableId::c(xi), c);
    z.emplace(xi, c);
  }
  return z;
}

CanonicalPoint Canonicalizer::canonical_form(const RationalMatrix& x) const { return reconstruct(invariant_values(x)); }

RationalMatrix Canonicalizer::to_matrix(const CanonicalPoint& z) const {
  RationalMatrix m = zero_matrix(gs_.composition.n());
  for (const auto& [xi, c] : z) {
    if (!gs_.T.count(xi)) throw Error(ErrorCode::RootNotInT, to_string(xi) + " is not in T");
    m[static_cast<std::size_t>(xi.i - 1)][static_cast<std::size_t>(xi.j - 1)] = c;
  }
  return m;
}

void Canonicalizer::build_laurent_table() const {
  Substitution by_generators;
  for (const Root& xi : order_) {
    const Polynomial a = substitute(leading_.at(xi), by_generators);
    if (a.size() != 1) {
      laurent_error_ = "leading coefficient of N" + to_string(xi) + " is not a monomial in the generators: " + a.to_string();
      return;
    }
    const auto& [mono, coeff] = *a.terms().begin();
    const Polynomial inverse = Polynomial::term(mono.inverse(), 1 / coeff);
    const Polynomial b = substitute(remainder_.at(xi), by_generators);
    Polynomial c = (Polynomial::variable(VariableId::y(xi)) - b) * inverse;
    by_generators.emplace(VariableId::c(xi), c);
    laurent_.emplace(xi, std::move(c));
  }
}

const Polynomial& Canonicalizer::slice_coordinate_in_generators(const Root& xi) const {
  std::call_once(laurent_once_, [this] { build_laurent_table(); });
  auto it = laurent_.find(xi);
  if (it != laurent_.end()) return it->second;
  if (!gs_.T.count(xi)) throw Error(ErrorCode::RootNotInT, to_string(xi) + " is not in T");
  throw Error(ErrorCode::NonMonomialDenominator, laurent_error_);
}

std::optional<Polynomial> Canonicalizer::divide_through(Polynomial g, std::size_t count) const {
  if (count == 0) {
    if (!g.is_constant()) return std::nullopt;
    return g;
  }
  const Root& xi = order_[count - 1];
  const VariableId own = VariableId::c(xi);
  const Polynomial y = Polynomial::variable(VariableId::y(xi));
  Polynomial out;
  // Peel off the top power of c_xi: its coefficient must be a multiple of
  // leading^k, and the quotient is the coefficient of y_xi^k.
  while (!g.is_zero()) {
    const auto parts = g.coefficients_in(own);
    const auto& [k, top] = *parts.rbegin();
    if (k == 0) {
      auto rest = divide_through(g, count - 1);
      if (!rest) return std::nullopt;
      out += *rest;
      break;
    }
    const unsigned power = static_cast<unsigned>(k);
    const auto quotient = divide_exact(top, leading_.at(xi).pow(power));
    if (!quotient) return std::nullopt;
    auto lower = divide_through(*quotient, count - 1);
    if (!lower) return std::nullopt;
    out += *lower * y.pow(power);
    g -= *quotient * restricted_.at(xi).pow(power);
  }
  return out;
}

Expression Canonicalizer::express(const Polynomial& f) const {
  for (const VariableId v : f.variables()) {
    if (v.kind() != VarKind::Entry || !gs_.composition.in_nilradical(v.root()))
      throw Error(ErrorCode::BadInput, v.name() + " is not a matrix-entry variable of M");
  }
  if (f.is_laurent()) throw Error(ErrorCode::BadInput, "input must be a polynomial");
  const InvarianceReport report = check_invariance(f, GroupTag::U, gs_.composition);
  if (!report.invariant()) {
    const auto& fail = report.failures.front();
    throw Error(ErrorCode::NotInvariant,
                "not U-invariant: " + fail.generator.to_string() + " leaves residual " + fail.residual.to_string());
  }
  std::call_once(laurent_once_, [this] { build_laurent_table(); });
  const Polynomial on_slice = restrict_to_slice_z(gs_, f);
  if (laurent_error_.empty()) {
    Substitution by_generators;
    for (const auto& [xi, c] : laurent_) by_generators.emplace(VariableId::c(xi), c);
    return clear_denominators(substitute(on_slice, by_generators));
  }
  if (auto p = divide_through(on_slice, order_.size())) return {*p, Monomial()};
  throw Error(ErrorCode::NonMonomialDenominator,
              laurent_error_ + "; the input is not a polynomial in the generators");
}

Expression clear_denominators(const Polynomial& laurent) {
  std::map<VariableId, int> lowest;
  for (const auto& [m, c] : laurent.terms())
    for (const auto& [v, e] : m.factors()) lowest[v] = std::min(lowest[v], e);
  // Variables absent from some term have exponent 0 there; min with 0
  // above already covers that.
  std::vector<Monomial::Factor> den;
  for (const auto& [v, e] : lowest)
    if (e < 0) den.emplace_back(v, -e);
  Expression out{laurent, Monomial(std::move(den))};
  if (!out.denominator.is_one()) out.numerator = laurent * Polynomial::term(out.denominator, 1);
  return out;
}

}  // namespace parinv
