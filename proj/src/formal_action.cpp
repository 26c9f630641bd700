#include "parinv/formal_action.hpp"

#include "parinv/error.hpp"

namespace parinv {

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::N: return "N";
    case GroupTag::U: return "U";
    case GroupTag::UL: return "U_L";
  }
  return "?";
}

std::string GroupGenerator::to_string() const {
  return "g_{" + std::to_string(u) + "," + std::to_string(v) + "}(" + parameter.to_string() + ")";
}

bool belongs_to(const GroupGenerator& g, GroupTag tag, const Composition& comp) {
  const Root cell{g.u, g.v};
  switch (tag) {
    case GroupTag::N: return g.u >= 1 && g.u < g.v && g.v <= comp.n();
    case GroupTag::U: return comp.in_nilradical(cell);
    case GroupTag::UL: return comp.in_reductive(cell);
  }
  return false;
}

std::vector<Root> generator_cells(GroupTag tag, const Composition& comp) {
  std::vector<Root> out;
  for (int u = 1; u <= comp.n(); ++u)
    for (int v = u + 1; v <= comp.n(); ++v)
      if (belongs_to(GroupGenerator::numeric(u, v, 1), tag, comp)) out.push_back({u, v});
  return out;
}

FormalMatrix::FormalMatrix(Composition comp, PolyMatrix entries) : comp_(std::move(comp)), entries_(std::move(entries)) {
  const auto n = static_cast<std::size_t>(comp_.n());
  if (entries_.size() != n) throw Error(ErrorCode::BadInput, "formal matrix has the wrong number of rows");
  for (const auto& row : entries_)
    if (row.size() != n) throw Error(ErrorCode::BadInput, "formal matrix has the wrong number of columns");
}

PolyMatrix FormalMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix out;
  out.reserve(rows.size());
  for (int r : rows) {
    std::vector<Polynomial> line;
    line.reserve(cols.size());
    for (int c : cols) line.push_back(at(r, c));
    out.push_back(std::move(line));
  }
  return out;
}

FormalMatrix build_formal_matrix(const Composition& comp) {
  const auto n = static_cast<std::size_t>(comp.n());
  PolyMatrix entries(n, std::vector<Polynomial>(n));
  for (int i = 1; i <= comp.n(); ++i)
    for (int j = i + 1; j <= comp.n(); ++j)
      if (comp.in_nilradical({i, j}))
        entries[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = Polynomial::variable(VariableId::x(i, j));
  return FormalMatrix(comp, std::move(entries));
}

namespace {

void check_cell(const Composition& comp, int u, int v) {
  if (u < 1 || v < 1 || u > comp.n() || v > comp.n() || u == v)
    throw Error(ErrorCode::BadInput, "invalid generator cell (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

}  // namespace

FormalMatrix conjugate(const FormalMatrix& x, const GroupGenerator& g) {
  const Composition& comp = x.composition();
  check_cell(comp, g.u, g.v);
  PolyMatrix m = x.entries();
  const auto u = static_cast<std::size_t>(g.u - 1);
  const auto v = static_cast<std::size_t>(g.v - 1);
  const auto n = m.size();
  // Left factor: row u += t * row v.
  for (std::size_t b = 0; b < n; ++b)
    if (!m[v][b].is_zero()) m[u][b] += g.parameter * m[v][b];
  // Right factor: column v -= t * column u.
  for (std::size_t a = 0; a < n; ++a)
    if (!m[a][u].is_zero()) m[a][v] -= g.parameter * m[a][u];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Root cell{static_cast<int>(a) + 1, static_cast<int>(b) + 1};
      if (!comp.in_nilradical(cell) && !m[a][b].is_zero())
        throw Error(ErrorCode::LeavesNilradical,
                    g.to_string() + " moves entry " + to_string(cell) + " off the nilradical");
    }
  return FormalMatrix(comp, std::move(m));
}

Polynomial act_on_polynomial(const Polynomial& f, const GroupGenerator& g, const Composition& comp) {
  const FormalMatrix moved = conjugate(build_formal_matrix(comp), g);
  Substitution sub;
  for (int b = 1; b <= comp.n(); ++b) {
    if (comp.in_nilradical({g.u, b})) sub.emplace(VariableId::x(g.u, b), moved.at(g.u, b));
  }
  for (int a = 1; a <= comp.n(); ++a) {
    if (comp.in_nilradical({a, g.v})) sub.emplace(VariableId::x(a, g.v), moved.at(a, g.v));
  }
  return substitute(f, sub);
}

RationalMatrix zero_matrix(int n) {
  return RationalMatrix(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
}

void require_nilradical_support(const Composition& comp, const RationalMatrix& x) {
  const auto n = static_cast<std::size_t>(comp.n());
  if (x.size() != n) throw Error(ErrorCode::BadInput, "matrix must have " + std::to_string(n) + " rows");
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a].size() != n) throw Error(ErrorCode::BadInput, "matrix must have " + std::to_string(n) + " columns");
    for (std::size_t b = 0; b < n; ++b) {
      const Root cell{static_cast<int>(a) + 1, static_cast<int>(b) + 1};
      if (x[a][b] != 0 && !comp.in_nilradical(cell))
        throw Error(ErrorCode::LeavesNilradical, "nonzero entry at " + to_string(cell) + " outside M");
    }
  }
}

RationalMatrix act_on_point(const Composition& comp, const RationalMatrix& x, int u, int v, const Rational& t) {
  require_nilradical_support(comp, x);
  check_cell(comp, u, v);
  RationalMatrix m = x;
  for (auto& row : m)
    for (auto& q : row) q.canonicalize();
  Rational s = t;
  s.canonicalize();
  const auto uu = static_cast<std::size_t>(u - 1);
  const auto vv = static_cast<std::size_t>(v - 1);
  for (std::size_t b = 0; b < m.size(); ++b) m[uu][b] += s * m[vv][b];
  for (std::size_t a = 0; a < m.size(); ++a) m[a][vv] -= s * m[a][uu];
  require_nilradical_support(comp, m);
  return m;
}

Assignment entry_assignment(const Composition& comp, const RationalMatrix& x) {
  Assignment out;
  for (int i = 1; i <= comp.n(); ++i)
    for (int j = i + 1; j <= comp.n(); ++j)
      if (comp.in_nilradical({i, j}))
        out.emplace(VariableId::x(i, j), x[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
  return out;
}

}  // namespace parinv
