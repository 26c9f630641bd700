#pragma once

// Machine checks: exact invariance under one-parameter generators,
// Jacobian-rank certificates of algebraic independence, a generator-free
// oracle for the transcendence degree of K[m]^U, and the composition sweep.

#include <cstdint>
#include <string>
#include <vector>

#include "parinv/formal_action.hpp"
#include "parinv/generators.hpp"
#include "parinv/polynomial.hpp"
#include "parinv/roots.hpp"

namespace parinv {

struct InvarianceFailure {
  GroupGenerator generator;
  Polynomial residual;  // act(f, g(t)) - f, nonzero
};

struct InvarianceReport {
  std::string polynomial_id;
  GroupTag group = GroupTag::N;
  std::vector<InvarianceFailure> failures;

  bool invariant() const noexcept { return failures.empty(); }
};

// Checks f against every generator g_{u,v}(t) of the tagged group, as an
// identity in t.
InvarianceReport check_invariance(const Polynomial& f, GroupTag group, const Composition& comp,
                                  std::string polynomial_id = {});

struct IndependenceCertificate {
  std::vector<std::string> polynomial_ids;
  Assignment point;  // point of the best trial
  int rank = 0;
  int expected_rank = 0;
  int trials_used = 0;

  // A full-rank exact Jacobian proves independence; a lower rank only
  // means the search was inconclusive.
  bool valid() const noexcept { return rank == expected_rank; }
};

// Rank of an exact rational matrix, by fraction-free (Bareiss) elimination
// after clearing denominators row by row.
int exact_rank(std::vector<std::vector<Rational>> m);

// Jacobian of `polys` in all of their variables, evaluated at integer
// points from [-B, B] with no zero coordinate, B doubling per trial.
IndependenceCertificate check_independence(const std::vector<Polynomial>& polys, int trials, std::uint64_t seed,
                                           std::vector<std::string> polynomial_ids = {});

// Independence of the restrictions of {M_xi, L_phi} to the S ∪ Φ slice.
IndependenceCertificate check_restriction_independence(const GeneratorSet& gs, int trials, std::uint64_t seed);

// A basis of the U-invariant homogeneous polynomials of the given degree
// in the x-variables, computed as the joint kernel of the derivations
// d/dt act(., g_{u,v}(t))|_{t=0}, (u,v) in M.
std::vector<Polynomial> u_invariant_basis(const Composition& comp, int degree);

// Generic gradient rank of all U-invariants of degree <= degree_bound,
// maximized over point_count random points. Intended for n <= 5.
int brute_force_invariant_ring_dimension(const Composition& comp, int degree_bound, int point_count,
                                         std::uint64_t seed);

struct SweepOptions {
  int n_max = 8;
  std::uint64_t seed = 0;
  int trials = 3;
};

struct SweepInvarianceFailure {
  std::string composition;
  std::string polynomial_id;
  GroupTag group = GroupTag::N;
  std::string generator;
  std::string residual;
};

struct SweepCertificate {
  std::string composition;
  std::string family;  // "M,L" or "N"
  IndependenceCertificate certificate;
};

struct SweepSummary {
  int compositions_checked = 0;
  int polynomials_checked = 0;
  std::vector<SweepInvarianceFailure> invariance_failures;
  std::vector<SweepCertificate> independence_certificates;
  std::vector<std::string> errors;  // composition-level errors (e.g. DuplicatePhi)

  bool ok() const;
};

SweepSummary run_sweep(const SweepOptions& options);

}  // namespace parinv
