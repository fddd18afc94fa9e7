#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cyclres/pipeline.hpp"

namespace oracle {

using Set = std::uint64_t;

inline int popcount(Set s) { return __builtin_popcountll(s); }

/// Facets of the boundary of the cyclic d-polytope on m vertices by Gale's
/// evenness condition: every pair of non-members i < j sees an even number
/// of members strictly between them.
inline std::vector<Set> gale_facets(int d, int m) {
  std::vector<Set> out;
  for (Set s = 0; s < (Set{1} << m); ++s) {
    if (popcount(s) != d) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (s >> i & 1) continue;
      for (int j = i + 1; j < m && ok; ++j) {
        if (s >> j & 1) continue;
        int between = 0;
        for (int k = i + 1; k < j; ++k) between += static_cast<int>(s >> k & 1);
        ok = between % 2 == 0;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

inline bool is_gale_face(const std::vector<Set>& facets, Set w) {
  for (Set f : facets)
    if ((w & ~f) == 0) return true;
  return false;
}

/// (f_{-1}, f_0, ...) by brute force over all subsets.
inline std::vector<std::int64_t> f_vector(int d, int m) {
  const auto facets = gale_facets(d, m);
  std::vector<std::int64_t> f(static_cast<std::size_t>(d) + 1, 0);
  for (Set s = 0; s < (Set{1} << m); ++s)
    if (is_gale_face(facets, s)) ++f[static_cast<std::size_t>(popcount(s))];
  return f;
}

/// Minimal nonfaces as sorted lists of 1-based vertices.
inline std::set<std::vector<int>> minimal_nonfaces(int d, int m) {
  const auto facets = gale_facets(d, m);
  std::set<std::vector<int>> out;
  for (Set s = 1; s < (Set{1} << m); ++s) {
    if (is_gale_face(facets, s)) continue;
    bool minimal = true;
    for (int i = 0; i < m && minimal; ++i)
      if ((s >> i & 1) && !is_gale_face(facets, s & ~(Set{1} << i))) minimal = false;
    if (!minimal) continue;
    std::vector<int> v;
    for (int i = 0; i < m; ++i)
      if (s >> i & 1) v.push_back(i + 1);
    out.insert(v);
  }
  return out;
}

/// Binomials from Pascal's triangle.
inline std::int64_t choose(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<std::vector<std::int64_t>> t(static_cast<std::size_t>(n) + 1);
  for (int a = 0; a <= n; ++a) {
    t[a].assign(static_cast<std::size_t>(a) + 1, 1);
    for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t[n][k];
}

inline std::int64_t eta(int d, int m, int i) {
  if (i == 0 || i == m - d) return 0;
  const int h = d / 2;
  return choose(m - h - 2, h + i) * choose(h + i - 1, h);
}

/// Nonzero entries (i, j, b) of the closed-form table, written out without
/// sharing code with the library.
inline std::set<std::tuple<int, int, std::int64_t>> betti(int d, int m) {
  std::set<std::tuple<int, int, std::int64_t>> out{{0, 0, 1}, {m - d, m, 1}};
  for (int i = 1; i <= m - d - 1; ++i) {
    if (d % 2 == 0) {
      const auto v = eta(d + 1, m + 1, i) + eta(d + 1, m + 1, m - d - i);
      if (v) out.insert({i, d / 2 + i, v});
    } else {
      if (auto v = eta(d, m, i)) out.insert({i, d / 2 + i, v});
      if (auto v = eta(d, m, m - d - i)) out.insert({i, d / 2 + i + 1, v});
    }
  }
  return out;
}

/// dim (k[x1..xm]/I)_deg by listing monomials.
inline std::int64_t hilbert_function(const cyclres::MonomialIdeal& ideal, int deg) {
  std::int64_t n = 0;
  for (const auto& mono : cyclres::graded_piece_basis(*ideal.ring(), deg))
    if (!ideal.contains(mono)) ++n;
  return n;
}

}  // namespace oracle

namespace fixture {

using cyclres::ChainComplex;
using cyclres::ChainMap;
using cyclres::GradedFreeModule;
using cyclres::PolyMatrix;
using cyclres::Ring;

struct Cell {
  int row, col;  // 1-based
  const char* value;
};

inline PolyMatrix sparse(const Ring& ring, const GradedFreeModule& rows, const GradedFreeModule& cols,
                         const std::vector<Cell>& cells) {
  PolyMatrix out(ring, rows, cols);
  for (const auto& c : cells)
    out.set(static_cast<std::size_t>(c.row - 1), static_cast<std::size_t>(c.col - 1),
            cyclres::parse_poly(ring, c.value));
  return out;
}

inline PolyMatrix dense(const Ring& ring, const GradedFreeModule& rows, const GradedFreeModule& cols,
                        const std::vector<std::vector<const char*>>& entries) {
  PolyMatrix out(ring, rows, cols);
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (std::size_t c = 0; c < entries[r].size(); ++c) {
      auto p = cyclres::parse_poly(ring, entries[r][c]);
      if (!p.is_zero()) out.set(r, c, p);
    }
  return out;
}

/// The worked Kustin–Miller step data: α_0..α_{g-1}, β_1..β_g, h = 0, u.
struct Step {
  Ring ring;
  ChainComplex c_i, c_j;
  cyclres::KMData data;
};

inline cyclres::KMData assemble_data(const ChainComplex& c_i, const ChainComplex& c_j,
                                     const std::vector<std::vector<Cell>>& alpha,
                                     const std::vector<std::vector<Cell>>& beta, std::int64_t u) {
  const Ring& ring = c_i.ring();
  const int g = c_j.length();
  ChainMap a{0, 0, 0, {}};
  a.maps.push_back(sparse(ring, c_j.module(0), c_i.module(0), {{1, 1, "1"}}));
  for (int i = 1; i <= g - 1; ++i)
    a.maps.push_back(sparse(ring, c_j.module(i), c_i.module(i), alpha[static_cast<std::size_t>(i - 1)]));
  ChainMap b{1, 1, 1, {}};
  for (int i = 1; i <= g - 1; ++i)
    b.maps.push_back(sparse(ring, c_i.module(i - 1), c_j.module(i), beta[static_cast<std::size_t>(i - 1)]));
  b.maps.push_back(sparse(ring, c_i.module(g - 1), c_j.module(g), {{1, 1, std::to_string(u).c_str()}}));
  cyclres::Homotopy h{1, {}};
  for (int i = 0; i < g; ++i) h.maps.emplace_back(ring, c_i.module(i), c_i.module(i));
  return {c_i, c_j, a, b, h, ring->field().from_int(u), 1};
}

/// Koszul complex on (z, x3, x4, x2) over k[x1..x5, z].
inline ChainComplex koszul_j25(const Ring& ring) {
  using cyclres::Poly;
  return cyclres::koszul_complex(ring, {Poly::variable(ring, "z"), Poly::variable(ring, "x3"),
                                        Poly::variable(ring, "x4"), Poly::variable(ring, "x2")});
}

/// First worked step: (I_{2,5}, J_{2,5}) over k[x1..x5, z].
inline Step step_2_5() {
  Step s;
  s.ring = cyclres::auxiliary_ring(2, 5);
  s.c_i = cyclres::pfaffian_complex(2, s.ring);
  s.c_j = koszul_j25(s.ring);
  s.data = assemble_data(
      s.c_i, s.c_j,
      {{{2, 5, "x1"}, {3, 3, "x1"}, {4, 1, "x4"}, {2, 2, "x5"}, {4, 4, "x5"}},
       {{4, 2, "x1"}, {6, 4, "x1"}, {5, 3, "x5"}},
       {{4, 1, "x1*x5"}}},
      {{{1, 1, "-x1*x5"}},
       {{2, 1, "-x1"}, {4, 3, "-x1"}, {3, 2, "-x5"}},
       {{3, 2, "-x1"}, {5, 1, "-x1"}, {1, 3, "-x4"}, {2, 1, "-x5"}, {4, 3, "-x5"}}},
      -1);
  return s;
}

/// The worked resolution of I_{2,6}: step_2_5 assembled and specialized.
inline ChainComplex worked_resolution_2_6() {
  const Step s = step_2_5();
  const auto in = cyclres::phi_images(2, 5);
  const Ring with_t = cyclres::unprojection_ring(in);
  const auto km = cyclres::assemble_km(s.data, with_t);
  const Ring target = cyclres::vertex_ring(6);
  return cyclres::specialize_complex(km, cyclres::specialization_map(in.kase, with_t, target), target);
}

/// Second worked step: (I_{4,7}, J_{4,7}) over k[x1..x7, z], with C_J the
/// worked resolution of I_{2,6} under x1 -> z.
inline Step step_4_7() {
  Step s;
  s.ring = cyclres::auxiliary_ring(4, 7);
  s.c_i = cyclres::pfaffian_complex(4, s.ring);
  const ChainComplex base = worked_resolution_2_6();
  cyclres::Assignment images = cyclres::identity_assignment(base.ring(), s.ring);
  images["x1"] = cyclres::Poly::variable(s.ring, "z");
  s.c_j = cyclres::specialize_complex(base, images, s.ring);
  s.data = assemble_data(
      s.c_i, s.c_j,
      {{{2, 7, "x1"}, {7, 5, "x1"}, {8, 3, "x1"}, {1, 1, "x6"}, {1, 6, "x7"}, {2, 2, "x7"}, {4, 4, "x7"}},
       {{3, 3, "x7"}, {5, 5, "x7"}, {9, 2, "-x1"}, {11, 4, "-x1"}, {12, 2, "x1"}, {13, 6, "-x1"}},
       {{4, 1, "x1*x5*x7"}, {7, 1, "-x1*x4*x7"}, {9, 1, "-x1*x3*x7"}}},
      {{{1, 3, "-x1*x4*x7"}, {1, 5, "-x1*x3*x7"}, {1, 6, "x1*x5*x7"}},
       {{2, 1, "-x1"}, {2, 6, "-x1"}, {4, 8, "-x1"}, {6, 2, "x1"}, {3, 14, "-x7"}, {5, 16, "-x7"}},
       {{1, 5, "-x6"}, {2, 6, "-x7"}, {4, 8, "-x7"}, {6, 5, "-x7"}, {3, 2, "x1"}, {5, 1, "x1"}, {7, 6, "-x1"}}},
      -1);
  return s;
}

}  // namespace fixture
