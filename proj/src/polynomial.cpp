#include "parinv/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "parinv/error.hpp"

namespace parinv {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto digits_ok = [](std::string_view d, bool allow_sign) {
    if (allow_sign && !d.empty() && d.front() == '-') d.remove_prefix(1);
    return !d.empty() && std::all_of(d.begin(), d.end(), [](unsigned char ch) { return std::isdigit(ch); });
  };
  const std::string_view num = std::string_view(s).substr(0, slash);
  const bool ok = digits_ok(num, true) &&
                  (slash == std::string::npos || digits_ok(std::string_view(s).substr(slash + 1), false));
  if (!ok) throw Error(ErrorCode::BadInput, "not a rational: '" + std::string(text) + "'");
  Rational q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw Error(ErrorCode::BadInput, "zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

// ---------------------------------------------------------------- VariableId

std::string VariableId::name() const {
  const Root r = root();
  const std::string idx = "{" + std::to_string(r.i) + "," + std::to_string(r.j) + "}";
  switch (kind()) {
    case VarKind::Entry: return "x_" + idx;
    case VarKind::Slice: return "c_" + idx;
    case VarKind::Generator: return "y_" + idx;
    case VarKind::Param: return param_index() == 0 ? "t" : "t_" + std::to_string(param_index());
  }
  return "?";
}

VariableId VariableId::parse(std::string_view text) {
  auto fail = [&]() -> VariableId { throw Error(ErrorCode::BadInput, "not a variable: '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view d) {
    if (d.empty() || d.size() > 3 || !std::all_of(d.begin(), d.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      fail();
    return std::stoi(std::string(d));
  };
  if (text == "t") return t(0);
  if (text.size() < 3 || text[1] != '_') return fail();
  std::string_view rest = text.substr(2);
  if (text[0] == 't') {
    if (rest.size() >= 2 && rest.front() == '{' && rest.back() == '}') rest = rest.substr(1, rest.size() - 2);
    const int k = parse_int(rest);
    if (k < 1 || k > 255) fail();
    return t(k);
  }
  if (rest.size() < 5 || rest.front() != '{' || rest.back() != '}') return fail();
  rest = rest.substr(1, rest.size() - 2);
  const auto comma = rest.find(',');
  if (comma == std::string_view::npos) return fail();
  const Root r{parse_int(rest.substr(0, comma)), parse_int(rest.substr(comma + 1))};
  if (r.i < 1 || r.j < 1 || r.i > 255 || r.j > 255) fail();
  switch (text[0]) {
    case 'x': return x(r);
    case 'c': return c(r);
    case 'y': return y(r);
    default: return fail();
  }
}

// ------------------------------------------------------------------ Monomial

Monomial::Monomial(VariableId v, int exponent) {
  if (exponent != 0) factors_.emplace_back(v, exponent);
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
  }
  std::erase_if(factors_, [](const Factor& f) { return f.second == 0; });
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

int Monomial::exponent(VariableId v) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VariableId key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::has_negative_exponent() const noexcept {
  return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second < 0; });
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.second = -f.second;
  return out;
}

Monomial Monomial::without(VariableId v) const {
  Monomial out = *this;
  std::erase_if(out.factors_, [&](const Factor& f) { return f.first == v; });
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) {
      out.factors_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.factors_.push_back(*ib++);
    } else {
      const int e = ia->second + ib->second;
      if (e != 0) out.factors_.emplace_back(ia->first, e);
      ++ia;
      ++ib;
    }
  }
  out.factors_.insert(out.factors_.end(), ia, a.factors_.end());
  out.factors_.insert(out.factors_.end(), ib, b.factors_.end());
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += "*";
    out += v.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.begin();
  auto ib = fb.begin();
  while (ia != fa.end() && ib != fb.end()) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second < ib->second;
      ++ia;
      ++ib;
    } else if (ia->first < ib->first) {
      return ia->second < 0;
    } else {
      return ib->second > 0;
    }
  }
  if (ia != fa.end()) return ia->second < 0;
  if (ib != fb.end()) return ib->second > 0;
  return false;
}

// ---------------------------------------------------------------- Polynomial

// GMP arithmetic assumes canonical operands, and callers may hand in p/q
// built without reduction, so the public constructors reduce once here.
Polynomial::Polynomial(const Rational& constant) {
  Rational c = constant;
  c.canonicalize();
  add_term(Monomial(), c);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& coeff) {
  Rational c = coeff;
  c.canonicalize();
  Polynomial p;
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient(Monomial()); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const noexcept {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::set<VariableId> Polynomial::variables() const {
  std::set<VariableId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

bool Polynomial::is_laurent() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.has_negative_exponent(); });
}

std::map<int, Polynomial> Polynomial::coefficients_in(VariableId v) const {
  std::map<int, Polynomial> out;
  for (const auto& [m, c] : terms_) out[m.exponent(v)].add_term(m.without(v), c);
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational factor = c;
  factor.canonicalize();
  for (auto& [m, coeff] : terms_) coeff *= factor;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial operator-(Polynomial a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m.is_one()) {
      out += format_rational(mag);
    } else {
      if (mag != 1) out += format_rational(mag) + "*";
      out += m.to_string();
    }
  }
  return out;
}

// ----------------------------------------------------------------- free ops

namespace {

Polynomial signed_power(const Polynomial& p, int e, VariableId v) {
  if (e >= 0) return p.pow(static_cast<unsigned>(e));
  if (p.size() != 1)
    throw Error(ErrorCode::BadInput, "negative power of " + v.name() + " needs a single-term image");
  const auto& [m, c] = *p.terms().begin();
  Rational inv = 1 / c;
  Rational coeff = 1;
  for (int k = 0; k < -e; ++k) coeff *= inv;
  Monomial mono;
  for (int k = 0; k < -e; ++k) mono = mono * m.inverse();
  return Polynomial::term(mono, coeff);
}

Rational rational_power(const Rational& q, int e) {
  Rational out = 1;
  Rational base = e >= 0 ? q : Rational(1 / q);
  base.canonicalize();
  for (int k = 0; k < std::abs(e); ++k) out *= base;
  return out;
}

}  // namespace

Polynomial substitute(const Polynomial& p, const Substitution& map) {
  std::map<std::pair<VariableId, int>, Polynomial> powers;
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    Polynomial image(c);
    for (const auto& [v, e] : m.factors()) {
      auto it = map.find(v);
      if (it == map.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      auto key = std::make_pair(v, e);
      auto pw = powers.find(key);
      if (pw == powers.end()) pw = powers.emplace(key, signed_power(it->second, e, v)).first;
      image *= pw->second;
      if (image.is_zero()) break;
    }
    if (image.is_zero()) continue;
    if (!kept.empty()) image = image * Polynomial::term(Monomial(std::move(kept)), 1);
    out += image;
  }
  return out;
}

Polynomial partial_evaluate(const Polynomial& p, const Assignment& point) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Rational coeff = c;
    std::vector<Monomial::Factor> kept;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) {
        kept.emplace_back(v, e);
      } else {
        if (it->second == 0 && e < 0) throw Error(ErrorCode::BadInput, "division by zero at " + v.name());
        coeff *= rational_power(it->second, e);
      }
    }
    out += Polynomial::term(Monomial(std::move(kept)), coeff);
  }
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (p.is_laurent() || d.is_laurent()) throw std::invalid_argument("exact division needs ordinary polynomials");
  // Graded lex is a monomial order, so if p = q * d then the leading term
  // of every remainder is divisible by the leading term of d.
  const auto& [lead_m, lead_c] = *d.terms().rbegin();
  const Monomial lead_inv = lead_m.inverse();
  Polynomial q, r = p;
  while (!r.is_zero()) {
    const auto& [m, c] = *r.terms().rbegin();
    const Monomial step = m * lead_inv;
    if (step.has_negative_exponent()) return std::nullopt;
    const Polynomial t = Polynomial::term(step, c / lead_c);
    q += t;
    r -= t * d;
  }
  return q;
}

Polynomial differentiate(const Polynomial& p, VariableId v) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(v);
    if (e == 0) continue;
    out += Polynomial::term(m * Monomial(v, -1), c * e);
  }
  return out;
}

Rational evaluate(const Polynomial& p, const Assignment& point) {
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational value = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw Error(ErrorCode::MissingAssignment, "no value for " + v.name());
      if (it->second == 0 && e < 0) throw Error(ErrorCode::BadInput, "division by zero at " + v.name());
      value *= rational_power(it->second, e);
    }
    total += value;
  }
  return total;
}

Polynomial determinant(const PolyMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) return Polynomial(1);
  if (k > 63) throw Error(ErrorCode::BadInput, "determinant size exceeds 63");
  for (const auto& row : m)
    if (row.size() != k) throw Error(ErrorCode::BadInput, "determinant of a non-square matrix");

  // memo[used] = det of rows popcount(used).. against the unused columns.
  std::unordered_map<std::uint64_t, Polynomial> memo;
  auto expand = [&](auto&& self, std::uint64_t used) -> Polynomial {
    const auto row = static_cast<std::size_t>(std::popcount(used));
    if (row == k) return Polynomial(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Polynomial acc;
    int position = 0;
    for (std::size_t col = 0; col < k; ++col) {
      if (used & (std::uint64_t{1} << col)) continue;
      const Polynomial& entry = m[row][col];
      if (!entry.is_zero()) {
        Polynomial minor = self(self, used | (std::uint64_t{1} << col));
        if (!minor.is_zero()) {
          Polynomial prod = entry * minor;
          if (position % 2) acc -= prod;
          else acc += prod;
        }
      }
      ++position;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return expand(expand, 0);
}

}  // namespace parinv
