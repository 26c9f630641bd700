#include "parinv/verify.hpp"

#include <algorithm>
#include <numeric>

#include "parinv/error.hpp"
#include "parinv/random.hpp"

namespace parinv {

InvarianceReport check_invariance(const Polynomial& f, GroupTag group, const Composition& comp,
                                  std::string polynomial_id) {
  InvarianceReport report{std::move(polynomial_id), group, {}};
  for (const Root& cell : generator_cells(group, comp)) {
    const GroupGenerator g = GroupGenerator::symbolic(cell.i, cell.j);
    Polynomial residual = act_on_polynomial(f, g, comp) - f;
    if (!residual.is_zero()) report.failures.push_back({g, std::move(residual)});
  }
  return report;
}

int exact_rank(std::vector<std::vector<Rational>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m.front().size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (const auto& q : m[r]) scale = lcm(scale, mpz_class(q.get_den()));
    for (std::size_t c = 0; c < cols; ++c) {
      Rational scaled = m[r][c] * scale;
      a[r][c] = scaled.get_num();
    }
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

namespace {

std::vector<VariableId> union_of_variables(const std::vector<Polynomial>& polys) {
  std::set<VariableId> vars;
  for (const auto& p : polys) {
    auto v = p.variables();
    vars.insert(v.begin(), v.end());
  }
  return {vars.begin(), vars.end()};
}

std::vector<std::vector<Rational>> jacobian_at(const std::vector<std::vector<Polynomial>>& jac, const Assignment& point) {
  std::vector<std::vector<Rational>> out;
  out.reserve(jac.size());
  for (const auto& row : jac) {
    std::vector<Rational> line;
    line.reserve(row.size());
    for (const auto& d : row) line.push_back(evaluate(d, point));
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

IndependenceCertificate check_independence(const std::vector<Polynomial>& polys, int trials, std::uint64_t seed,
                                           std::vector<std::string> polynomial_ids) {
  IndependenceCertificate cert;
  cert.polynomial_ids = std::move(polynomial_ids);
  cert.expected_rank = static_cast<int>(polys.size());
  if (polys.empty()) return cert;

  const auto vars = union_of_variables(polys);
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& p : polys) {
    std::vector<Polynomial> row;
    for (const auto v : vars) row.push_back(differentiate(p, v));
    jac.push_back(std::move(row));
  }

  Rng rng(seed);
  std::int64_t bound = 16;
  cert.rank = -1;
  for (int trial = 1; trial <= std::max(trials, 1); ++trial, bound *= 2) {
    Assignment point;
    for (const auto v : vars) point.emplace(v, Rational(rng.nonzero(bound)));
    const int rank = exact_rank(jacobian_at(jac, point));
    cert.trials_used = trial;
    if (rank > cert.rank) {
      cert.rank = rank;
      cert.point = point;
    }
    if (cert.valid()) break;
  }
  return cert;
}

IndependenceCertificate check_restriction_independence(const GeneratorSet& gs, int trials, std::uint64_t seed) {
  std::vector<Polynomial> polys;
  std::vector<std::string> ids;
  for (const Root& xi : gs.base.all) {
    polys.push_back(restrict_to_slice_y(gs, root_minor(gs, xi)));
    ids.push_back("M" + to_string(xi));
  }
  for (const auto& q : gs.pairs) {
    polys.push_back(restrict_to_slice_y(gs, pair_invariant(gs, q)));
    ids.push_back("L" + to_string(q.phi));
  }
  return check_independence(polys, trials, seed, std::move(ids));
}

namespace {

void monomials_of_degree(const std::vector<VariableId>& vars, int degree, std::size_t from,
                         std::vector<Monomial::Factor>& current, std::vector<Monomial>& out) {
  if (degree == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t k = from; k < vars.size(); ++k) {
    current.emplace_back(vars[k], 1);
    monomials_of_degree(vars, degree - 1, k, current, out);
    current.pop_back();
  }
}

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& e : a[row]) e *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return pivots;
}

}  // namespace

std::vector<Polynomial> u_invariant_basis(const Composition& comp, int degree) {
  std::vector<VariableId> vars;
  for (const Root& r : roots_of_nilradical(comp)) vars.push_back(VariableId::x(r));
  std::vector<Monomial> monos;
  std::vector<Monomial::Factor> scratch;
  monomials_of_degree(vars, degree, 0, scratch, monos);
  if (monos.empty()) return {};

  const VariableId t = VariableId::t();
  const Assignment at_zero{{t, 0}};
  struct Entry {
    std::size_t row, col;
    Rational value;
  };
  std::vector<Entry> entries;
  auto key_less = [](const std::pair<Root, Monomial>& a, const std::pair<Root, Monomial>& b) {
    if (a.first != b.first) return a.first < b.first;
    return GrlexLess{}(a.second, b.second);
  };
  std::map<std::pair<Root, Monomial>, std::size_t, decltype(key_less)> rows(key_less);
  for (const Root& cell : generator_cells(GroupTag::U, comp)) {
    const GroupGenerator g = GroupGenerator::symbolic(cell.i, cell.j, t);
    for (std::size_t col = 0; col < monos.size(); ++col) {
      const Polynomial moved = act_on_polynomial(Polynomial::term(monos[col], 1), g, comp);
      const Polynomial derivation = partial_evaluate(differentiate(moved, t), at_zero);
      for (const auto& [m, c] : derivation.terms()) {
        auto [it, inserted] = rows.try_emplace({cell, m}, rows.size());
        entries.push_back({it->second, col, c});
      }
    }
  }
  std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(monos.size()));
  for (const auto& e : entries) a[e.row][e.col] += e.value;
  const auto pivots = rref(a, monos.size());

  std::vector<bool> is_pivot(monos.size(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Polynomial> basis;
  for (std::size_t free = 0; free < monos.size(); ++free) {
    if (is_pivot[free]) continue;
    Polynomial v = Polynomial::term(monos[free], 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (a[r][free] != 0) v -= Polynomial::term(monos[pivots[r]], a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

int brute_force_invariant_ring_dimension(const Composition& comp, int degree_bound, int point_count,
                                         std::uint64_t seed) {
  std::vector<Polynomial> invariants;
  for (int d = 1; d <= degree_bound; ++d) {
    auto part = u_invariant_basis(comp, d);
    invariants.insert(invariants.end(), part.begin(), part.end());
  }
  if (invariants.empty()) return 0;
  std::vector<VariableId> vars;
  for (const Root& r : roots_of_nilradical(comp)) vars.push_back(VariableId::x(r));
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& p : invariants) {
    std::vector<Polynomial> row;
    for (const auto v : vars) row.push_back(differentiate(p, v));
    jac.push_back(std::move(row));
  }
  Rng rng(seed);
  int best = 0;
  for (int k = 0; k < std::max(point_count, 1); ++k) {
    Assignment point;
    for (const auto v : vars) point.emplace(v, Rational(rng.nonzero(64)));
    best = std::max(best, exact_rank(jacobian_at(jac, point)));
  }
  return best;
}

bool SweepSummary::ok() const {
  if (!invariance_failures.empty() || !errors.empty()) return false;
  return std::all_of(independence_certificates.begin(), independence_certificates.end(),
                     [](const SweepCertificate& c) { return c.certificate.valid(); });
}

SweepSummary run_sweep(const SweepOptions& options) {
  SweepSummary summary;
  std::uint64_t stream = 0;
  for (int n = 1; n <= options.n_max; ++n) {
    for (const Composition& comp : all_compositions(n)) {
      const std::string name = comp.to_string();
      ++summary.compositions_checked;
      try {
        const GeneratorSet gs(comp);
        const InvariantGenerators gens = build_generators(gs);
        auto record = [&](const Polynomial& f, GroupTag tag, const std::string& id) {
          ++summary.polynomials_checked;
          const auto report = check_invariance(f, tag, comp, id);
          for (const auto& fail : report.failures)
            summary.invariance_failures.push_back(
                {name, id, tag, fail.generator.to_string(), fail.residual.to_string()});
        };
        std::vector<Polynomial> ml;
        std::vector<std::string> ml_ids;
        for (const auto& [xi, p] : gens.base_minors) {
          record(p, GroupTag::N, "M" + to_string(xi));
          ml.push_back(p);
          ml_ids.push_back("M" + to_string(xi));
        }
        for (const auto& [phi, p] : gens.pair_invariants) {
          record(p, GroupTag::N, "L" + to_string(phi));
          ml.push_back(p);
          ml_ids.push_back("L" + to_string(phi));
        }
        std::vector<Polynomial> ns;
        std::vector<std::string> n_ids;
        for (const auto& [xi, p] : gens.radical) {
          record(p, GroupTag::U, "N" + to_string(xi));
          ns.push_back(p);
          n_ids.push_back("N" + to_string(xi));
        }
        summary.independence_certificates.push_back(
            {name, "M,L", check_independence(ml, options.trials, mix_seed(options.seed, stream++), ml_ids)});
        summary.independence_certificates.push_back(
            {name, "N", check_independence(ns, options.trials, mix_seed(options.seed, stream++), n_ids)});
      } catch (const Error& e) {
        summary.errors.push_back(name + ": " + std::string(to_string(e.code())) + ": " + e.what());
      }
    }
  }
  return summary;
}

}  // namespace parinv
