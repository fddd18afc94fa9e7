#include <algorithm>
#include <map>
#include <stdexcept>

#include "cyclres/km.hpp"

namespace cyclres {

namespace {

using Subset = std::vector<int>;
using Signed = std::pair<int, Subset>;

int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::vector<Subset> lex_subsets(int n, int k) {
  std::vector<Subset> out;
  Subset cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Signed star(int n, const Subset& s) {
  Subset rest;
  for (int v = 0; v < n; ++v)
    if (!std::binary_search(s.begin(), s.end(), v)) rest.push_back(v);
  Subset perm = s;
  perm.insert(perm.end(), rest.begin(), rest.end());
  return {permutation_sign(perm), rest};
}

std::vector<Signed> hodge_basis(int n, int k) {
  std::vector<Signed> out;
  if (k < 0 || k > n) return out;
  if (2 * k < n) {
    for (auto& s : lex_subsets(n, k)) out.push_back({1, s});
  } else if (2 * k > n) {
    for (const auto& [sign, s] : hodge_basis(n, n - k)) {
      auto [t, rest] = star(n, s);
      out.push_back({sign * t, rest});
    }
  } else {
    std::vector<Subset> firsts;
    for (auto& s : lex_subsets(n, k))
      if (!s.empty() && s[0] == 0) firsts.push_back(s);
    if (k == 0) firsts.push_back({});
    for (const auto& s : firsts) out.push_back({1, s});
    if (k > 0)
      for (const auto& s : firsts) out.push_back(star(n, s));
  }
  return out;
}

std::vector<Signed> koszul_basis(int n, int k) {
  std::vector<Signed> out;
  for (const auto& [sign, s] : hodge_basis(n - 1, k - 1)) {
    Subset full{0};
    for (int v : s) full.push_back(v + 1);
    out.push_back({sign * (s.size() % 2 ? -1 : 1), full});
  }
  for (const auto& [sign, s] : hodge_basis(n - 1, k)) {
    Subset full;
    for (int v : s) full.push_back(v + 1);
    out.push_back({sign, full});
  }
  return out;
}

}  // namespace

ChainComplex koszul_complex(const Ring& ring, const std::vector<Poly>& elements) {
  const int n = static_cast<int>(elements.size());
  if (n == 0) throw std::invalid_argument("koszul_complex needs at least one element");
  std::vector<int> deg;
  for (const auto& f : elements) {
    if (f.is_zero() || !f.is_homogeneous()) throw std::invalid_argument("Koszul elements must be nonzero and homogeneous");
    deg.push_back(*f.degree());
  }
  std::vector<std::vector<Signed>> bases;
  std::vector<GradedFreeModule> modules;
  for (int k = 0; k <= n; ++k) {
    bases.push_back(koszul_basis(n, k));
    std::vector<int> tw;
    for (const auto& [sign, s] : bases.back()) {
      int t = 0;
      for (int v : s) t += deg[static_cast<std::size_t>(v)];
      tw.push_back(t);
    }
    modules.emplace_back(std::move(tw));
  }
  std::vector<PolyMatrix> diffs;
  for (int k = 1; k <= n; ++k) {
    std::map<Subset, std::pair<std::size_t, int>> target;
    for (std::size_t r = 0; r < bases[k - 1].size(); ++r)
      target[bases[k - 1][r].second] = {r, bases[k - 1][r].first};
    PolyMatrix f(ring, modules[k - 1], modules[k]);
    for (std::size_t c = 0; c < bases[k].size(); ++c) {
      const auto& [sigma, s] = bases[k][c];
      for (std::size_t p = 0; p < s.size(); ++p) {
        Subset rest = s;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
        const auto& [row, sigma2] = target.at(rest);
        const int sign = sigma * sigma2 * (p % 2 ? -1 : 1);
        const Poly& e = elements[static_cast<std::size_t>(s[p])];
        f.add_to(row, c, sign > 0 ? e : -e);
      }
    }
    diffs.push_back(std::move(f));
  }
  ChainComplex out(ring, std::move(diffs));
  out.require_complex("koszul_complex");
  return out;
}

}  // namespace cyclres
