// Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
// wall-clock limit. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "parinv/canonical.hpp"
#include "parinv/error.hpp"
#include "parinv/generators.hpp"
#include "parinv/verify.hpp"
#include "test_helpers.hpp"

using namespace parinv;
using parinv::testing::compositions_up_to;
using parinv::testing::det2;
using parinv::testing::det3;
using parinv::testing::x;

namespace {

const Composition kMain({2, 1, 3, 2});

// Empty string means the criterion held; otherwise the first mismatch.
using Check = std::function<std::string()>;

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  Check check;
};

std::string roots_text(const RootSet& roots) {
  std::string out;
  for (const Root& r : roots) out += to_string(r);
  return out.empty() ? "{}" : out;
}

std::string expect_roots(const std::string& what, const RootSet& got, const RootSet& want) {
  if (got == want) return {};
  return what + " = " + roots_text(got) + ", expected " + roots_text(want);
}

std::string expect_poly(const std::string& what, const Polynomial& got, const Polynomial& want) {
  if (got == want) return {};
  return what + " = " + got.to_string() + ", expected " + want.to_string();
}

std::string base_reproduction() {
  const BaseLayers base = compute_base(kMain);
  if (base.layers.size() != 2) return "expected 2 layers, got " + std::to_string(base.layers.size());
  if (auto m = expect_roots("S_1", base.layers[0], {{2, 3}, {3, 4}, {6, 7}}); !m.empty()) return m;
  return expect_roots("S_2", base.layers[1], {{1, 5}, {5, 8}});
}

std::string pairs_reproduction() {
  const GeneratorSet gs(kMain);
  const std::vector<std::pair<Root, Root>> want{{{3, 4}, {6, 7}}, {{1, 5}, {6, 7}}, {{3, 4}, {5, 8}}};
  if (gs.pairs.size() != want.size()) return "expected 3 admissible pairs, got " + std::to_string(gs.pairs.size());
  for (const auto& [xi, xi_prime] : want) {
    bool found = false;
    for (const auto& q : gs.pairs) found = found || (q.xi == xi && q.xi_prime == xi_prime);
    if (!found) return "missing pair (" + to_string(xi) + "," + to_string(xi_prime) + ")";
  }
  return expect_roots("Phi", gs.phi, {{4, 7}, {5, 7}, {4, 8}});
}

std::string generator_reproduction() {
  const GeneratorSet gs(kMain);
  const InvariantGenerators gens = build_generators(gs);
  const Polynomial m15 = det3({{x(1, 3), x(1, 4), x(1, 5)}, {x(2, 3), x(2, 4), x(2, 5)}, {0, x(3, 4), x(3, 5)}});
  const Polynomial m16 = det3({{x(1, 3), x(1, 4), x(1, 6)}, {x(2, 3), x(2, 4), x(2, 6)}, {0, x(3, 4), x(3, 6)}});
  const Polynomial m58 = det2(x(5, 7), x(5, 8), x(6, 7), x(6, 8));
  const std::vector<std::pair<std::string, std::pair<Polynomial, Polynomial>>> checks{
      {"M(2,3)", {root_minor(gs, {2, 3}), x(2, 3)}},
      {"M(3,4)", {root_minor(gs, {3, 4}), x(3, 4)}},
      {"M(6,7)", {root_minor(gs, {6, 7}), x(6, 7)}},
      {"M(5,8)", {root_minor(gs, {5, 8}), m58}},
      {"M(1,5)", {root_minor(gs, {1, 5}), m15}},
      {"M(1,6)", {root_minor(gs, {1, 6}), m16}},
      {"L(4,7)", {gens.pair_invariants.at({4, 7}), x(3, 4) * x(4, 7) + x(3, 5) * x(5, 7) + x(3, 6) * x(6, 7)}},
      {"L(4,8)",
       {gens.pair_invariants.at({4, 8}),
        x(3, 4) * det2(x(4, 7), x(4, 8), x(6, 7), x(6, 8)) + x(3, 5) * det2(x(5, 7), x(5, 8), x(6, 7), x(6, 8))}},
      {"L(5,7)", {gens.pair_invariants.at({5, 7}), m15 * x(5, 7) + m16 * x(6, 7)}},
      {"N(1,5)", {gens.radical.at({1, 5}), m15}},
      {"N(1,6)", {gens.radical.at({1, 6}), m16}},
  };
  for (const auto& [name, pair] : checks)
    if (auto m = expect_poly(name, pair.first, pair.second); !m.empty()) return m;
  return {};
}

std::string broad_base_reproduction() {
  const RootSet want{{1, 3}, {1, 5}, {1, 6}, {2, 3}, {3, 4}, {3, 5}, {3, 6},
                     {4, 7}, {4, 8}, {5, 7}, {5, 8}, {6, 7}, {6, 8}};
  return expect_roots("T", GeneratorSet(kMain).T, want);
}

std::string remoteness_example() {
  const int r = remoteness(kMain, {1, 6});
  return r == 5 ? std::string() : "remoteness((1,6)) = " + std::to_string(r) + ", expected 5";
}

// The invariance and independence criteria share one sweep.
const SweepSummary& sweep_to_8() {
  static const SweepSummary summary = run_sweep({8, 42, 3});
  return summary;
}

std::string invariance_sweep() {
  const SweepSummary& s = sweep_to_8();
  if (s.compositions_checked != 255) return "checked " + std::to_string(s.compositions_checked) + " compositions";
  if (!s.errors.empty()) return s.errors.front();
  if (!s.invariance_failures.empty()) {
    const auto& f = s.invariance_failures.front();
    return f.composition + ": " + f.polynomial_id + " moved by " + f.generator;
  }
  return {};
}

std::string independence_sweep() {
  const SweepSummary& s = sweep_to_8();
  if (s.independence_certificates.size() != 2 * 255u) return "missing certificates";
  for (const auto& c : s.independence_certificates) {
    if (!c.certificate.valid() || c.certificate.trials_used > 3)
      return c.composition + " " + c.family + ": rank " + std::to_string(c.certificate.rank) + " of " +
             std::to_string(c.certificate.expected_rank);
  }
  // Expected ranks come from the root combinatorics, not from the polynomials.
  for (std::size_t k = 0; k < s.independence_certificates.size(); k += 2) {
    const GeneratorSet gs(Composition::parse(s.independence_certificates[k].composition));
    if (s.independence_certificates[k].certificate.expected_rank != static_cast<int>(gs.base.all.size() + gs.phi.size()))
      return s.independence_certificates[k].composition + ": M,L family has the wrong size";
    if (s.independence_certificates[k + 1].certificate.expected_rank != static_cast<int>(gs.T.size()))
      return s.independence_certificates[k].composition + ": N family has the wrong size";
  }
  return {};
}

std::string canonicalization_property() {
  for (const Composition& comp : compositions_up_to(6)) {
    const Canonicalizer canon(comp);
    Rng rng(mix_seed(8, static_cast<std::uint64_t>(comp.n() * 1000 + comp.blocks() * 37 + comp.sizes().front())));
    int accepted = 0;
    for (int drawn = 0; accepted < 100; ++drawn) {
      if (drawn > 10000) return comp.to_string() + ": could not draw generic points";
      const RationalMatrix p = parinv::testing::random_point(rng, comp);
      CanonicalPoint z;
      try {
        z = canon.canonical_form(p);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegenerateOrbit) throw;
        continue;
      }
      ++accepted;
      const RationalMatrix moved = parinv::testing::random_u_word(rng, comp, p, 5);
      if (canon.canonical_form(moved) != z) return comp.to_string() + ": canonical form moved along the orbit";
      if (canon.invariant_values(canon.to_matrix(z)) != canon.invariant_values(p))
        return comp.to_string() + ": invariant values do not round-trip";
    }
  }
  return {};
}

std::string expression_property() {
  for (const Composition& comp : compositions_up_to(6)) {
    const Canonicalizer canon(comp);
    const auto& n = canon.generators().radical;
    if (n.empty()) continue;
    std::vector<VariableId> ys;
    Substitution expand;
    for (const auto& [xi, p] : n) {
      ys.push_back(VariableId::y(xi));
      expand.emplace(VariableId::y(xi), p);
    }
    Rng rng(mix_seed(9, static_cast<std::uint64_t>(comp.n() * 1000 + comp.blocks() * 37 + comp.sizes().front())));
    for (int round = 0; round < 50; ++round) {
      const Polynomial p = parinv::testing::random_polynomial(rng, ys, 4, 3);
      const Expression e = canon.express(substitute(p, expand));
      if (e.numerator != p || !e.denominator.is_one())
        return comp.to_string() + ": " + p.to_string() + " came back as " + e.numerator.to_string();
    }
  }
  return {};
}

std::string negative_control() {
  for (const Composition& comp : compositions_up_to(6)) {
    const GeneratorSet gs(comp);
    if (gs.M == gs.T) continue;
    bool named = false;
    for (const Root& g : gs.M) {
      if (gs.T.count(g)) continue;
      const InvarianceReport r = check_invariance(x(g.i, g.j), GroupTag::U, comp);
      named = named || (!r.invariant() && !r.failures.front().residual.is_zero());
    }
    if (!named) return comp.to_string() + ": every coordinate outside T looked invariant";
  }
  const InvarianceReport r = check_invariance(x(1, 4), GroupTag::U, Composition({1, 2, 1}));
  for (const auto& f : r.failures)
    if (f.generator.to_string() == "g_{2,4}(t)") return {};
  return "(1,2,1): x_{1,4} not reported broken by g_{2,4}(t)";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "base layers of (2,1,3,2)", 1.0, base_reproduction},
      {2, "admissible pairs and Phi", 1.0, pairs_reproduction},
      {3, "reference generators", 5.0, generator_reproduction},
      {4, "broad base T", 1.0, broad_base_reproduction},
      {5, "remoteness of (1,6)", 1.0, remoteness_example},
      {6, "invariance sweep n <= 8", 600.0, invariance_sweep},
      {7, "independence sweep n <= 8", 600.0, independence_sweep},
      {8, "canonical form n <= 6", 300.0, canonicalization_property},
      {9, "expression in generators n <= 6", 300.0, expression_property},
      {10, "negative control n <= 6", 60.0, negative_control},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.check();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && seconds > c.limit_seconds) problem = "over the time limit";
    if (!problem.empty()) ++failed;
    std::printf("%s %2d %-34s %8.3f s (limit %g s)%s%s\n", problem.empty() ? "PASS" : "FAIL", c.id, c.name.c_str(),
                seconds, c.limit_seconds, problem.empty() ? "" : "  ", problem.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
