#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclres/cyclic_ideals.hpp"
#include "cyclres/matrix.hpp"

namespace cyclres {

/// 0 <- F_0 <- F_1 <- … <- F_g with f_i : F_i -> F_{i-1} homogeneous of
/// degree 0.  Construction checks shapes and twists; d^2 = 0 is checked by
/// the builders through require_complex().
class ChainComplex {
 public:
  ChainComplex() = default;
  /// diffs[i-1] is f_i.  F_0 = rows of f_1, F_i = cols of f_i.
  ChainComplex(Ring ring, std::vector<PolyMatrix> diffs);

  const Ring& ring() const { return ring_; }
  int length() const { return static_cast<int>(diffs_.size()); }
  /// F_i for 0 <= i <= length(); empty module outside that range.
  const GradedFreeModule& module(int i) const;
  /// f_i for 1 <= i <= length().
  const PolyMatrix& differential(int i) const;
  const std::vector<PolyMatrix>& differentials() const { return diffs_; }
  std::vector<std::size_t> ranks() const;

  /// Index i of the first nonzero f_i ∘ f_{i+1}, or 0 when d^2 = 0.
  int first_nonzero_composite() const;
  bool is_complex() const { return first_nonzero_composite() == 0; }
  bool is_homogeneous() const;
  /// No differential entry has a nonzero constant term.
  bool is_minimal() const;
  /// Throws std::logic_error naming `what` when d^2 != 0.
  void require_complex(std::string_view what) const;

  ChainComplex change_ring(const Ring& target) const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b);

 private:
  Ring ring_;
  std::vector<GradedFreeModule> modules_;
  std::vector<PolyMatrix> diffs_;
};

/// Components maps[k] : F_{first + k} -> G_{first + k - shift}, each of
/// internal degree `degree`.
struct ChainMap {
  int first = 0;
  int shift = 0;
  int degree = 0;
  std::vector<PolyMatrix> maps;

  bool has(int i) const { return i >= first && i < first + static_cast<int>(maps.size()); }
  const PolyMatrix& at(int i) const { return maps.at(static_cast<std::size_t>(i - first)); }
};

/// maps[i] : B_i -> B_i for 0 <= i <= g-1.
struct Homotopy {
  int degree = 0;
  std::vector<PolyMatrix> maps;
};

struct KMData {
  ChainComplex c_i;  // B, length g-1
  ChainComplex c_j;  // A, length g
  ChainMap alpha;    // B_i -> A_i
  ChainMap beta;     // A_i -> B_{i-1}
  Homotopy h;
  Scalar u;
  int degT = 1;
};

/// Koszul complex on the given elements.  The basis of Λ^k is e_1 ∧ H^{k-1}
/// followed by H^k, where H is the Hodge-dual-paired basis on the
/// remaining elements (lex subsets below the middle, their complements
/// above, both at the middle).
ChainComplex koszul_complex(const Ring& ring, const std::vector<Poly>& elements);

/// Pfaffian of the odd skew matrix M with row/column `drop` (1-based)
/// removed.
Poly pfaffian(const PolyMatrix& m, std::size_t drop);

/// The (d+3)x(d+3) skew matrix with x_i above the diagonal at (i,i+1) and
/// -x_{d+3} at (1,d+3); needs x1..x_{d+3} in `ring`.
PolyMatrix cyclic_skew_matrix(int d, const Ring& ring);

/// 0 <- R <-(v) R^{d+3} <-(M) R^{d+3} <-(v^T) R <- 0 with
/// v_i = (-1)^{i+1} pf_i(M).
ChainComplex pfaffian_complex(int d, const Ring& ring);

/// α : C_I -> C_J through the dual lifting problem, normalized so that
/// α_0 = 1.  Returns α and the unit w that was divided out.
std::pair<ChainMap, Scalar> build_alpha(const ChainComplex& c_i, const ChainComplex& c_j,
                                        const std::vector<Poly>& lhat);

/// β : C_J -> C_I[-1] starting from β_1 = (-l_i); returns β and u = β_g.
std::pair<ChainMap, Scalar> build_beta(const ChainComplex& c_i, const ChainComplex& c_j,
                                       const std::vector<Poly>& l);

/// h with h_0 = h_{g-1} = 0 and β_i α_i = h_{i-1} b_i + b_i h_i.
Homotopy solve_homotopy(const ChainComplex& c_i, const ChainMap& alpha, const ChainMap& beta);

/// Empty string when the map commutes with the differentials.
std::string check_chain_map(const ChainMap& map, const ChainComplex& source, const ChainComplex& target);
std::string check_homotopy(const ChainComplex& c_i, const ChainMap& alpha, const ChainMap& beta,
                           const Homotopy& h);

/// All Kustin–Miller data for J ⊂ R/I with given resolutions over in.ring.
KMData km_data(const UnprojectionInput& in, const ChainComplex& c_i, const ChainComplex& c_j);

/// The Kustin–Miller complex over `with_t` (in.ring plus T).
ChainComplex assemble_km(const KMData& data, const Ring& with_t);

/// Entrywise substitution into `target`; twists are recomputed from F_0
/// upward using the target grading.
ChainComplex specialize_complex(const ChainComplex& c, const Assignment& images, const Ring& target);

}  // namespace cyclres
