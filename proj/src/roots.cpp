#include "parinv/roots.hpp"

#include <algorithm>
#include <sstream>

#include "parinv/error.hpp"

namespace parinv {

std::string to_string(const Root& r) {
  return "(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
}

Composition::Composition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw Error(ErrorCode::BadComposition, "composition has no blocks");
  partial_sums_.push_back(0);
  for (int r : sizes_) {
    if (r <= 0) throw Error(ErrorCode::BadComposition, "block sizes must be positive");
    if (partial_sums_.back() + r > 255) throw Error(ErrorCode::BadComposition, "n exceeds 255");
    partial_sums_.push_back(partial_sums_.back() + r);
  }
  block_of_.assign(static_cast<std::size_t>(n()) + 1, 0);
  for (int k = 1; k <= blocks(); ++k)
    for (int i = partial_sums_[k - 1] + 1; i <= partial_sums_[k]; ++i)
      block_of_[static_cast<std::size_t>(i)] = k;
}

Composition Composition::parse(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadComposition, "cannot parse block size '" + item + "'");
    }
    if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos)
      throw Error(ErrorCode::BadComposition, "cannot parse block size '" + item + "'");
    sizes.push_back(value);
  }
  return Composition(std::move(sizes));
}

bool Composition::in_nilradical(const Root& r) const {
  if (r.i < 1 || r.j > n() || r.i >= r.j) return false;
  return block_of(r.i) < block_of(r.j);
}

bool Composition::in_reductive(const Root& r) const {
  if (r.i < 1 || r.j > n() || r.i >= r.j) return false;
  return block_of(r.i) == block_of(r.j);
}

bool Composition::in_superdiagonal_block(const Root& r) const {
  return in_nilradical(r) && block_of(r.j) == block_of(r.i) + 1;
}

bool Composition::same_block(const Root& a, const Root& b) const {
  return block_of(a.i) == block_of(b.i) && block_of(a.j) == block_of(b.j);
}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < sizes_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(sizes_[k]);
  }
  return out;
}

std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  if (n <= 0) return out;
  // Bit b of mask set means a cut after position b+1.
  std::vector<std::vector<int>> lists;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> sizes;
    int run = 1;
    for (int b = 0; b < n - 1; ++b) {
      if (mask & (1u << b)) {
        sizes.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    sizes.push_back(run);
    lists.push_back(std::move(sizes));
  }
  std::sort(lists.begin(), lists.end());
  for (auto& l : lists) out.emplace_back(std::move(l));
  return out;
}

int BaseLayers::layer_of(const Root& r) const {
  for (std::size_t k = 0; k < layers.size(); ++k)
    if (layers[k].count(r)) return static_cast<int>(k) + 1;
  return 0;
}

RootSet roots_of_nilradical(const Composition& comp) {
  RootSet out;
  for (int i = 1; i <= comp.n(); ++i)
    for (int j = i + 1; j <= comp.n(); ++j)
      if (comp.block_of(i) < comp.block_of(j)) out.insert({i, j});
  return out;
}

RootSet reductive_roots(const Composition& comp) {
  RootSet out;
  for (int i = 1; i <= comp.n(); ++i)
    for (int j = i + 1; j <= comp.n(); ++j)
      if (comp.block_of(i) == comp.block_of(j)) out.insert({i, j});
  return out;
}

bool greater(const Root& a, const Root& b) {
  return (a.i == b.i && a.j > b.j) || (a.j == b.j && a.i < b.i);
}

RootSet minimal_elements(const RootSet& roots) {
  RootSet out;
  for (const Root& g : roots) {
    bool minimal = std::none_of(roots.begin(), roots.end(), [&](const Root& x) { return greater(g, x); });
    if (minimal) out.insert(g);
  }
  return out;
}

BaseLayers compute_base(const Composition& comp) {
  BaseLayers base;
  RootSet remaining = roots_of_nilradical(comp);
  while (!remaining.empty()) {
    RootSet layer = minimal_elements(remaining);
    RootSet next;
    for (const Root& g : remaining) {
      if (layer.count(g)) continue;
      bool dominates = std::any_of(layer.begin(), layer.end(), [&](const Root& x) { return greater(g, x); });
      if (!dominates) next.insert(g);
    }
    base.all.insert(layer.begin(), layer.end());
    base.layers.push_back(std::move(layer));
    remaining = std::move(next);
  }
  return base;
}

bool antidiagonal_check(const Composition& comp, const BaseLayers& base) {
  for (int k = 1; k < comp.blocks(); ++k) {
    const int rk = comp.partial_sum(k);
    const int len = std::min(comp.sizes()[static_cast<std::size_t>(k - 1)], comp.sizes()[static_cast<std::size_t>(k)]);
    for (int t = 0; t < len; ++t)
      if (!base.all.count({rk - t, rk + 1 + t})) return false;
  }
  return true;
}

std::vector<AdmissiblePair> admissible_pairs(const Composition& comp, const BaseLayers& base) {
  std::vector<AdmissiblePair> out;
  RootSet seen;
  for (const Root& xi : base.all) {
    for (const Root& xp : base.all) {
      const Root alpha{xi.j, xp.i};
      if (!comp.in_reductive(alpha)) continue;
      const Root phi{xi.j, xp.j};
      if (!seen.insert(phi).second)
        throw Error(ErrorCode::DuplicatePhi, "two admissible pairs share phi " + to_string(phi));
      out.push_back({xi, xp, alpha, phi});
    }
  }
  return out;
}

RootSet broad_base(const Composition& comp, const BaseLayers& base) {
  RootSet out = base.all;
  for (const Root& xi : roots_of_nilradical(comp)) {
    for (const Root& g : base.all) {
      if (greater(xi, g) && comp.same_block(xi, g)) {
        out.insert(xi);
        break;
      }
    }
  }
  return out;
}

RootSet m_prime(const Composition& comp) {
  RootSet out;
  for (const Root& r : roots_of_nilradical(comp))
    if (comp.block_of(r.j) >= comp.block_of(r.i) + 2) out.insert(r);
  return out;
}

namespace {

// Longest-chain table over M, indexed [i*(n+1)+j]. Chains strictly
// decrease j - i, so increasing j - i is a valid evaluation order.
std::vector<int> remoteness_table(const Composition& comp) {
  const int n = comp.n();
  std::vector<int> rem(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  auto at = [&](int i, int j) -> int& { return rem[static_cast<std::size_t>(i * (n + 1) + j)]; };
  for (int d = 1; d < n; ++d) {
    for (int i = 1; i + d <= n; ++i) {
      const int j = i + d;
      if (!comp.in_nilradical({i, j})) continue;
      int best = 0;
      for (int jj = i + 1; jj < j; ++jj) best = std::max(best, at(i, jj));
      for (int ii = i + 1; ii < j; ++ii) best = std::max(best, at(ii, j));
      at(i, j) = best + 1;
    }
  }
  return rem;
}

}  // namespace

int remoteness(const Composition& comp, const Root& gamma) {
  if (!comp.in_nilradical(gamma)) throw Error(ErrorCode::RootNotInM, to_string(gamma) + " is not in M");
  const auto table = remoteness_table(comp);
  return table[static_cast<std::size_t>(gamma.i * (comp.n() + 1) + gamma.j)];
}

bool prec(const Root& a, const Root& b) { return a.i > b.i && a.j < b.j; }

RootSet prec_maximal_in_S(const Root& gamma, const BaseLayers& base) {
  RootSet below;
  for (const Root& phi : base.all)
    if (prec(phi, gamma)) below.insert(phi);
  RootSet out;
  for (const Root& phi : below) {
    bool maximal = std::none_of(below.begin(), below.end(), [&](const Root& o) { return prec(phi, o); });
    if (maximal) out.insert(phi);
  }
  return out;
}

GeneratorSet::GeneratorSet(Composition c)
    : composition(std::move(c)),
      M(roots_of_nilradical(composition)),
      delta_r(reductive_roots(composition)),
      base(compute_base(composition)),
      pairs(admissible_pairs(composition, base)),
      T(broad_base(composition, base)),
      M_prime(m_prime(composition)),
      remoteness_(remoteness_table(composition)) {
  for (const auto& q : pairs) phi.insert(q.phi);
}

int GeneratorSet::remoteness_of(const Root& r) const {
  if (!composition.in_nilradical(r)) throw Error(ErrorCode::RootNotInM, to_string(r) + " is not in M");
  return remoteness_[static_cast<std::size_t>(r.i * (composition.n() + 1) + r.j)];
}

}  // namespace parinv
