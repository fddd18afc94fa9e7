#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_set>

#include "cyclres/simplicial.hpp"

namespace cyclres {

namespace {

void check_params(int d, int m) {
  if (d < 2 || m <= d || m > 64)
    throw std::invalid_argument("need 2 <= d < m <= 64, got d=" + std::to_string(d) +
                                ", m=" + std::to_string(m));
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

int ContiguousDecomposition::odd_count() const {
  return static_cast<int>(
      std::count_if(blocks.begin(), blocks.end(), [](const VertexSet& b) { return b.size() % 2 == 1; }));
}

ContiguousDecomposition contiguous_decomposition(const VertexSet& w) {
  const int m = w.m();
  if (w.empty() || w.size() == m) throw std::invalid_argument("W must be a proper nonempty subset");
  ContiguousDecomposition out;
  int i = 0;
  while (w.contains(i + 1)) ++i;
  int j = m + 1;
  while (w.contains(j - 1)) --j;
  out.head = VertexSet::range(m, 1, i);
  out.tail = VertexSet::range(m, j, m);
  for (int v = i + 1; v < j; ++v) {
    if (!w.contains(v)) continue;
    int end = v;
    while (end + 1 < j && w.contains(end + 1)) ++end;
    out.blocks.push_back(VertexSet::range(m, v, end));
    v = end;
  }
  return out;
}

bool is_face(int d, int m, const VertexSet& w) {
  check_params(d, m);
  if (w.m() != m) throw std::invalid_argument("vertex set lives on a different vertex count");
  if (w.empty()) return true;
  if (w.size() > d) return false;
  return contiguous_decomposition(w).odd_count() <= d - w.size();
}

SimplicialComplex::SimplicialComplex(int m, std::vector<VertexSet> facets) : m_(m) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (const auto& f : facets) {
    if (f.m() != m) throw std::invalid_argument("facet on a different vertex count");
    bool dominated = std::any_of(facets.begin(), facets.end(),
                                 [&](const VertexSet& g) { return !(g == f) && f.is_subset_of(g); });
    if (!dominated) facets_.push_back(f);
  }
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::contains(const VertexSet& w) const {
  return w.empty() ||
         std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) { return w.is_subset_of(f); });
}

SimplicialComplex cyclic_complex(int d, int m) {
  check_params(d, m);
  std::vector<VertexSet> facets;
  std::vector<int> pick(d);
  std::function<void(int, int)> rec = [&](int k, int start) {
    if (k == d) {
      VertexSet w = VertexSet::from_list(m, pick);
      if (is_face(d, m, w)) facets.push_back(w);
      return;
    }
    for (int v = start; v <= m - (d - k) + 1; ++v) {
      pick[k] = v;
      rec(k + 1, v + 1);
    }
  };
  rec(0, 1);
  return SimplicialComplex(m, std::move(facets));
}

std::vector<std::int64_t> f_vector(const SimplicialComplex& k) {
  std::unordered_set<std::uint64_t> faces;
  for (const auto& f : k.facets()) {
    const std::uint64_t b = f.bits();
    for (std::uint64_t s = b;; s = (s - 1) & b) {
      faces.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(k.dimension() + 2), 0);
  for (auto s : faces) ++out[static_cast<std::size_t>(std::popcount(s))];
  return out;
}

std::vector<std::int64_t> f_vector_by_face_test(int d, int m) {
  check_params(d, m);
  std::vector<std::int64_t> out(static_cast<std::size_t>(d + 1), 0);
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    VertexSet w = VertexSet::from_list(m, pick);
    if (!is_face(d, m, w)) return;
    ++out[pick.size()];
    if (static_cast<int>(pick.size()) == d) return;
    for (int v = start; v <= m; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<std::int64_t> f_vector_of_ideal(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw std::invalid_argument("f_vector_of_ideal needs a squarefree ideal");
  const int n = static_cast<int>(ideal.ring()->size());
  std::vector<std::uint64_t> supports;
  for (const auto& g : ideal.gens()) supports.push_back(g.support());
  std::vector<std::int64_t> out(static_cast<std::size_t>(n + 1), 0);
  std::function<void(std::uint64_t, int, int)> rec = [&](std::uint64_t face, int size, int start) {
    ++out[static_cast<std::size_t>(size)];
    for (int v = start; v < n; ++v) {
      std::uint64_t next = face | (std::uint64_t{1} << v);
      bool ok = std::none_of(supports.begin(), supports.end(),
                             [&](std::uint64_t s) { return (s & ~next) == 0; });
      if (ok) rec(next, size + 1, v + 1);
    }
  };
  bool unit = std::any_of(supports.begin(), supports.end(), [](std::uint64_t s) { return s == 0; });
  if (unit) return {};
  rec(0, 0, 0);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& k, Field field) {
  const int m = k.m();
  Ring ring = vertex_ring(m, field);
  std::unordered_set<std::uint64_t> faces;
  for (const auto& f : k.facets()) {
    const std::uint64_t b = f.bits();
    for (std::uint64_t s = b;; s = (s - 1) & b) {
      faces.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<Monomial> gens;
  const int max_size = k.dimension() + 2;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (!pick.empty()) {
      std::uint64_t bits = VertexSet::from_list(m, pick).bits();
      if (!faces.count(bits)) {
        bool minimal = true;
        for (int v : pick)
          if (!faces.count(bits & ~(std::uint64_t{1} << (v - 1)))) minimal = false;
        if (minimal) {
          Monomial mono;
          for (int v : pick) mono.set(static_cast<std::size_t>(v - 1), 1);
          gens.push_back(mono);
        }
        return;
      }
    }
    if (static_cast<int>(pick.size()) == max_size) return;
    for (int v = start; v <= m; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(1);
  return MonomialIdeal(ring, std::move(gens));
}

std::vector<std::int64_t> hilbert_numerator(const std::vector<std::int64_t>& f, int n) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int rest = n - static_cast<int>(i);
    if (rest < 0) throw std::invalid_argument("face larger than the vertex count");
    for (int k = 0; k <= rest; ++k)
      out[i + static_cast<std::size_t>(k)] += f[i] * binomial(rest, k) * (k % 2 ? -1 : 1);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::vector<std::int64_t> hilbert_numerator(const SimplicialComplex& k) {
  return hilbert_numerator(f_vector(k), k.m());
}

}  // namespace cyclres
