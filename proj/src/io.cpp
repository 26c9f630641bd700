#include "parinv/io.hpp"

#include <iomanip>
#include <sstream>

#include "parinv/error.hpp"

namespace parinv {

Json root_to_json(const Root& r) { return Json::array({r.i, r.j}); }

Json roots_to_json(const RootSet& roots) {
  Json out = Json::array();
  for (const Root& r : roots) out.push_back(root_to_json(r));
  return out;
}

Json generator_set_to_json(const GeneratorSet& gs) {
  Json out;
  out["composition"] = gs.composition.sizes();
  out["M"] = roots_to_json(gs.M);
  Json layers = Json::array();
  for (const auto& layer : gs.base.layers) layers.push_back(roots_to_json(layer));
  out["S_layers"] = layers;
  Json pairs = Json::array();
  for (const auto& q : gs.pairs) {
    Json item;
    item["xi"] = root_to_json(q.xi);
    item["xi_prime"] = root_to_json(q.xi_prime);
    item["alpha"] = root_to_json(q.alpha);
    item["phi"] = root_to_json(q.phi);
    pairs.push_back(item);
  }
  out["pairs"] = pairs;
  out["phi"] = roots_to_json(gs.phi);
  out["T"] = roots_to_json(gs.T);
  out["M_prime"] = roots_to_json(gs.M_prime);
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json key = Json::array();
    for (const auto& [v, e] : it->first.factors()) key.push_back(Json::array({v.name(), e}));
    out[key.dump()] = format_rational(it->second);
  }
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::BadInput, "polynomial must be a JSON object of terms");
  Polynomial out;
  for (const auto& [key, value] : j.items()) {
    Json factors;
    try {
      factors = Json::parse(key);
    } catch (const Json::parse_error&) {
      throw Error(ErrorCode::BadInput, "term key is not JSON: " + key);
    }
    if (!factors.is_array()) throw Error(ErrorCode::BadInput, "term key must be an array: " + key);
    std::vector<Monomial::Factor> mono;
    for (const auto& f : factors) {
      if (!f.is_array() || f.size() != 2 || !f[0].is_string() || !f[1].is_number_integer())
        throw Error(ErrorCode::BadInput, "factor must be [name, exponent]: " + f.dump());
      mono.emplace_back(VariableId::parse(f[0].get<std::string>()), f[1].get<int>());
    }
    Rational coeff;
    if (value.is_string())
      coeff = parse_rational(value.get<std::string>());
    else if (value.is_number_integer())
      coeff = Rational(value.get<long>());
    else
      throw Error(ErrorCode::BadInput, "coefficient must be a \"p/q\" string");
    out += Polynomial::term(Monomial(std::move(mono)), coeff);
  }
  return out;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json line = Json::array();
    for (const auto& q : row) line.push_back(format_rational(q));
    out.push_back(line);
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j, const Composition& comp) {
  const auto n = static_cast<std::size_t>(comp.n());
  if (!j.is_array() || j.size() != n)
    throw Error(ErrorCode::BadInput, "matrix must be an array of " + std::to_string(n) + " rows");
  RationalMatrix m = zero_matrix(comp.n());
  for (std::size_t a = 0; a < n; ++a) {
    if (!j[a].is_array() || j[a].size() != n)
      throw Error(ErrorCode::BadInput, "row " + std::to_string(a + 1) + " must have " + std::to_string(n) + " entries");
    for (std::size_t b = 0; b < n; ++b) {
      const Json& cell = j[a][b];
      if (cell.is_string())
        m[a][b] = parse_rational(cell.get<std::string>());
      else if (cell.is_number_integer())
        m[a][b] = Rational(cell.get<long>());
      else
        throw Error(ErrorCode::BadInput, "matrix entries must be \"p/q\" strings");
    }
  }
  require_nilradical_support(comp, m);
  return m;
}

Json root_values_to_json(const std::map<Root, Rational>& values) {
  Json out = Json::object();
  for (const auto& [r, q] : values) out[to_string(r)] = format_rational(q);
  return out;
}

std::string render_diagram(const GeneratorSet& gs) {
  const int n = gs.composition.n();
  std::ostringstream out;
  out << "   ";
  for (int j = 1; j <= n; ++j) out << std::setw(2) << j << ' ';
  std::string header = out.str();
  while (!header.empty() && header.back() == ' ') header.pop_back();
  std::string text = header + '\n';
  for (int i = 1; i <= n; ++i) {
    std::ostringstream line;
    line << std::setw(3) << i;
    for (int j = 1; j <= n; ++j) {
      const Root r{i, j};
      char primary = '.';
      if (gs.base.all.count(r))
        primary = 'S';
      else if (gs.T.count(r))
        primary = 'T';
      else if (gs.M.count(r))
        primary = 'o';
      line << ' ' << primary << (gs.phi.count(r) ? 'X' : ' ');
    }
    std::string row = line.str();
    while (!row.empty() && row.back() == ' ') row.pop_back();
    text += row + '\n';
  }
  return text;
}

}  // namespace parinv
