#include <gtest/gtest.h>

#include "parinv/generators.hpp"
#include "parinv/verify.hpp"
#include "test_support.hpp"

using namespace parinv;
using parinv::testing::compositions_up_to;
using parinv::testing::t;
using parinv::testing::x;

namespace {

const Composition kMain({2, 1, 3, 2});

std::vector<Polynomial> values_of(const std::map<Root, Polynomial>& m) {
  std::vector<Polynomial> out;
  for (const auto& [r, p] : m) out.push_back(p);
  return out;
}

// Number of monomials prod y_xi^{e_xi} with sum e_xi * deg(N_xi) = d.
long weighted_count(const std::vector<int>& weights, std::size_t from, int d) {
  if (d == 0) return 1;
  if (from == weights.size()) return 0;
  long total = 0;
  for (int used = 0; used <= d; used += weights[from]) total += weighted_count(weights, from + 1, d - used);
  return total;
}

}  // namespace

TEST(CheckInvariance, Examples) {
  const GeneratorSet gs(kMain);
  const auto gens = build_generators(gs);
  EXPECT_TRUE(check_invariance(gens.pair_invariants.at({5, 7}), GroupTag::N, kMain).invariant());
  EXPECT_TRUE(check_invariance(x(1, 3), GroupTag::U, kMain).invariant());
  const InvarianceReport r = check_invariance(x(1, 3), GroupTag::N, kMain, "x13");
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.polynomial_id, "x13");
  EXPECT_EQ(r.failures[0].generator.u, 1);
  EXPECT_EQ(r.failures[0].generator.v, 2);
  EXPECT_EQ(r.failures[0].residual, t() * x(2, 3));
  const InvarianceReport s = check_invariance(x(1, 4), GroupTag::U, Composition({1, 2, 1}));
  bool column_rule_seen = false;
  for (const auto& f : s.failures) {
    if (f.generator.to_string() != "g_{2,4}(t)") continue;
    column_rule_seen = true;
    EXPECT_EQ(f.residual, -(t() * x(1, 2)));
  }
  EXPECT_TRUE(column_rule_seen);
}

TEST(CheckInvariance, LeviPartFixesBaseMinors) {
  const GeneratorSet gs(kMain);
  for (const auto& [xi, p] : build_generators(gs).base_minors)
    EXPECT_TRUE(check_invariance(p, GroupTag::UL, kMain).invariant());
  EXPECT_FALSE(check_invariance(x(3, 5), GroupTag::UL, kMain).invariant());
}

TEST(ExactRank, KnownMatrices) {
  EXPECT_EQ(exact_rank({}), 0);
  EXPECT_EQ(exact_rank({{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(exact_rank({{1, 2}, {2, 4}}), 1);
  EXPECT_EQ(exact_rank({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}}), 2);
  EXPECT_EQ(exact_rank({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), 2);
  EXPECT_EQ(exact_rank({{0, 1, 0}, {0, 0, 1}}), 2);
  // Vandermonde rows are independent.
  std::vector<std::vector<Rational>> v(5, std::vector<Rational>(5));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = Rational(1);
  for (int a = 0; a < 5; ++a)
    for (int b = 1; b < 5; ++b)
      v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b - 1)] * (a + 2);
  EXPECT_EQ(exact_rank(v), 5);
}

TEST(Independence, Examples) {
  const GeneratorSet gs(kMain);
  const auto gens = build_generators(gs);
  std::vector<Polynomial> ml = values_of(gens.base_minors);
  for (const auto& p : values_of(gens.pair_invariants)) ml.push_back(p);
  const auto a = check_independence(ml, 3, 42);
  EXPECT_EQ(a.rank, 8);
  EXPECT_TRUE(a.valid());
  const auto b = check_independence(values_of(gens.radical), 3, 42);
  EXPECT_EQ(b.rank, 13);
  EXPECT_TRUE(b.valid());
  const Polynomial p = x(1, 3) * x(2, 4) + x(1, 4);
  const auto dep = check_independence({p, p * p}, 3, 42);
  EXPECT_EQ(dep.rank, 1);
  EXPECT_EQ(dep.expected_rank, 2);
  EXPECT_EQ(dep.trials_used, 3);
  EXPECT_FALSE(dep.valid());
}

TEST(Independence, PointsAvoidZeroAndAreReproducible) {
  const Polynomial p = x(1, 3) * x(2, 4);
  const auto a = check_independence({p}, 2, 7);
  const auto b = check_independence({p}, 2, 7);
  EXPECT_EQ(a.point, b.point);
  for (const auto& [v, q] : a.point) EXPECT_NE(q, 0);
}

TEST(Independence, RestrictionsToSliceY) {
  EXPECT_EQ(check_restriction_independence(GeneratorSet(kMain), 3, 1).rank, 8);
  EXPECT_EQ(check_restriction_independence(GeneratorSet(Composition({1, 1})), 3, 1).rank, 1);
  const auto c = check_restriction_independence(GeneratorSet(Composition({1, 2, 1})), 3, 1);
  EXPECT_EQ(c.rank, 3);
  EXPECT_TRUE(c.valid());
}

TEST(BruteForce, InvariantBasisIsInvariantAndIndependentOfGenerators) {
  const Composition comp({1, 2, 1});
  for (int d = 1; d <= 3; ++d) {
    const auto basis = u_invariant_basis(comp, d);
    for (const auto& f : basis) {
      EXPECT_TRUE(check_invariance(f, GroupTag::U, comp).invariant());
      EXPECT_EQ(f.degree(), d);
    }
  }
}

TEST(BruteForce, TranscendenceDegreeOnTinyCases) {
  EXPECT_EQ(brute_force_invariant_ring_dimension(Composition({1, 1}), 2, 3, 1), 1);
  EXPECT_EQ(brute_force_invariant_ring_dimension(Composition({1, 2, 1}), 2, 3, 1), 4);
  EXPECT_EQ(brute_force_invariant_ring_dimension(Composition({2, 2}), 2, 3, 1), 4);
  for (const auto& comp : compositions_up_to(4)) {
    const GeneratorSet gs(comp);
    EXPECT_EQ(brute_force_invariant_ring_dimension(comp, 3, 3, 5), static_cast<int>(gs.T.size())) << comp.to_string();
  }
}

TEST(BruteForce, InvariantDimensionsMatchFreeAlgebraOnGenerators) {
  // If the N_xi generate a polynomial algebra, the degree-d invariants have
  // exactly as many basis elements as monomials in the N_xi of x-degree d.
  for (const auto& comp : compositions_up_to(5)) {
    const GeneratorSet gs(comp);
    if (gs.M.empty()) continue;
    std::vector<int> weights;
    for (const Root& xi : gs.T) weights.push_back(radical_invariant(gs, xi).degree());
    for (int d = 1; d <= 3; ++d)
      EXPECT_EQ(static_cast<long>(u_invariant_basis(comp, d).size()), weighted_count(weights, 0, d))
          << comp.to_string() << " degree " << d;
  }
}

TEST(Sweep, SmallRangeIsCleanAndDeterministic) {
  const SweepSummary a = run_sweep({4, 42, 3});
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.compositions_checked, 15);
  EXPECT_TRUE(a.invariance_failures.empty());
  EXPECT_TRUE(a.errors.empty());
  for (const auto& c : a.independence_certificates) EXPECT_TRUE(c.certificate.valid()) << c.composition << " " << c.family;
  const SweepSummary b = run_sweep({4, 42, 3});
  ASSERT_EQ(a.independence_certificates.size(), b.independence_certificates.size());
  for (std::size_t k = 0; k < a.independence_certificates.size(); ++k)
    EXPECT_EQ(a.independence_certificates[k].certificate.point, b.independence_certificates[k].certificate.point);
}

TEST(NegativeControl, CoordinatesOutsideTBreakInvariance) {
  for (const auto& comp : compositions_up_to(6)) {
    const GeneratorSet gs(comp);
    if (gs.M == gs.T) continue;
    bool some_broken = false;
    for (const Root& g : gs.M) {
      if (gs.T.count(g)) continue;
      const auto r = check_invariance(x(g.i, g.j), GroupTag::U, comp);
      if (!r.invariant()) {
        some_broken = true;
        EXPECT_FALSE(r.failures.front().residual.is_zero());
      }
    }
    EXPECT_TRUE(some_broken) << comp.to_string();
  }
}
