#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclres/monomial_ideal.hpp"

namespace cyclres {

/// Subset of {1..m} as a bitset (bit i-1 for vertex i), m <= 64.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int m, std::uint64_t bits);
  static VertexSet from_list(int m, const std::vector<int>& vertices);
  /// "1,3,5"; empty string gives the empty set.
  static VertexSet parse(int m, std::string_view text);
  static VertexSet range(int m, int first, int last);

  int m() const { return m_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return v >= 1 && v <= m_ && (bits_ >> (v - 1) & 1); }
  bool is_subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<int> members() const;
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  int m_ = 0;
  std::uint64_t bits_ = 0;
};

/// W = Y1 ∪ X_1 ∪ … ∪ X_t ∪ Y2 with Y1 = {1..i}, Y2 = {j..m} and X_p the
/// remaining maximal runs of consecutive vertices.
struct ContiguousDecomposition {
  VertexSet head;  // Y1
  std::vector<VertexSet> blocks;
  VertexSet tail;  // Y2

  int odd_count() const;
};

/// Throws for W empty or W = {1..m}.
ContiguousDecomposition contiguous_decomposition(const VertexSet& w);

/// Face test for the boundary complex of the cyclic d-polytope on m
/// vertices: |W| <= d and at most d - |W| odd interior runs.  The empty set
/// is a face; sets with more than d vertices are not.
bool is_face(int d, int m, const VertexSet& w);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps only inclusion-maximal sets.
  SimplicialComplex(int m, std::vector<VertexSet> facets);

  int m() const { return m_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  int dimension() const;
  bool contains(const VertexSet& w) const;

 private:
  int m_ = 0;
  std::vector<VertexSet> facets_;
};

SimplicialComplex cyclic_complex(int d, int m);

/// (f_{-1}, f_0, …, f_dim) by expanding facets into their subsets.
std::vector<std::int64_t> f_vector(const SimplicialComplex& k);
/// Same numbers for Δ(d,m) by running is_face over all subsets.
std::vector<std::int64_t> f_vector_by_face_test(int d, int m);
/// f-vector of the complex whose Stanley–Reisner ideal is the given
/// squarefree ideal (vertices = ring variables).
std::vector<std::int64_t> f_vector_of_ideal(const MonomialIdeal& ideal);

/// Minimal nonfaces as squarefree monomials over k[x1..xm].
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& k, Field field = Field());

/// Coefficients N_0.. of N(t) = Σ f_{i-1} t^i (1-t)^{n-i}, so that the
/// Hilbert series is N(t)/(1-t)^n.
std::vector<std::int64_t> hilbert_numerator(const std::vector<std::int64_t>& f, int n);
std::vector<std::int64_t> hilbert_numerator(const SimplicialComplex& k);

}  // namespace cyclres
