#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclres/km.hpp"
#include "cyclres/simplicial.hpp"

namespace cyclres {

/// Graded Betti numbers b_{i,j}: homological index i, internal degree j.
/// Only nonzero entries are stored.
struct BettiTable {
  std::map<std::pair<int, int>, std::int64_t> entries;
  int codim = 0;

  std::int64_t at(int i, int j) const;
  void add(int i, int j, std::int64_t v);
  /// Σ_j b_{i,j} for 0 <= i <= codim.
  std::vector<std::int64_t> totals() const;
  /// b_{i,j} = b_{codim-i, top-j} for all entries.
  bool is_symmetric(int top) const;
  /// Macaulay2-style layout: columns i, rows j - i, "." for zero.
  std::string to_string() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }
};

/// Binomial coefficient, zero outside 0 <= k <= n.
std::int64_t binomial(int n, int k);

/// η(d,m,i) for odd d >= 1, m > d+1, 0 <= i <= m-d.
std::int64_t eta(int d, int m, int i);

/// Closed-form Betti table of k[Δ(d,m)] for m >= d+2.
BettiTable betti_formula(int d, int m);
/// betti_formula extended by the hypersurface table at m = d+1.
BettiTable expected_betti(int d, int m);

BettiTable betti_of_complex(const ChainComplex& c);

/// Alternating sum Σ_i (-1)^i Σ_j b_{i,j} t^j as coefficients of t^0...
std::vector<std::int64_t> euler_polynomial(const BettiTable& b);

struct Caps {
  int max_m = 12;
  int max_d = 6;
};
/// Default caps, or max_m from CYCLRES_MAX_M (which then also bounds d).
Caps desk_caps();

class Resolver {
 public:
  explicit Resolver(Field field = Field());

  const Field& field() const { return field_; }
  /// Minimal graded free resolution of k[Δ(d,m)] over k[x1..xm].
  /// Throws std::runtime_error naming the failing (d,m) step.
  const ChainComplex& resolve(int d, int m);
  /// The Kustin–Miller step producing (d, m+1) from resolve(d, m).
  ChainComplex km_step(int d, int m);
  /// Odd d: resolve(d-1, m-1) with x1 -> x1 xm, twists recomputed.
  ChainComplex odd_by_substitution(int d, int m);
  /// Resolution of the ideal J(d,m) over the auxiliary ring.
  ChainComplex j_resolution(int d, int m, const Ring& aux);

 private:
  ChainComplex base_case(int d, int m);
  void check_step(int d, int m, const ChainComplex& c) const;

  Field field_;
  std::map<std::pair<int, int>, ChainComplex> memo_;
};

/// Cap-checked entry point sharing one memo per field.
ChainComplex resolve_cyclic(int d, int m, Field field = Field());

/// 0 <- R <-(f) R(-deg f) <- 0.
ChainComplex hypersurface_complex(const Ring& ring, const Poly& f);

struct CheckSet {
  bool d2 = true;
  bool minimal = true;
  bool betti = true;
  bool euler = true;
  bool rank = true;
  std::optional<int> exact_bound;

  /// Parses "d2,minimal,betti,euler,rank,exact:<bound>"; "all" turns on
  /// the first five.  Throws std::invalid_argument.
  static CheckSet parse(const std::string& text);
  static CheckSet none() { return {false, false, false, false, false, std::nullopt}; }
};

struct VerifyOptions {
  CheckSet checks;
  int rank_trials = 3;
  std::uint64_t seed = 1;
  /// Overrides the table derived from the ideal.
  std::optional<BettiTable> expected;
};

struct VerificationReport {
  std::optional<bool> d2_ok;
  std::optional<bool> minimal_ok;
  std::optional<bool> betti_match;
  std::optional<bool> euler_ok;
  std::optional<bool> rank_ok;
  std::optional<bool> graded_exactness;
  std::optional<int> exactness_bound;
  /// f_1 lists exactly the generators of the ideal.
  bool presents_ideal = false;
  std::vector<std::string> diagnostics;

  bool all_ok() const;
  /// Names of the checks that ran and failed.
  std::vector<std::string> failed() const;
};

VerificationReport verify_complex(const ChainComplex& c, const MonomialIdeal& ideal,
                                  const VerifyOptions& options = {});

/// Ranks of the graded pieces of f_i in internal degree `degree`.
std::size_t graded_rank(const PolyMatrix& f, int degree);
/// Numerator K(t) of the Hilbert series of R/I for any monomial ideal, by
/// K(I + (g)) = K(I) - t^deg(g) K(I : g).
std::vector<std::int64_t> k_polynomial(const MonomialIdeal& ideal);
/// dim_k of (R/I)_degree for a squarefree ideal, from its f-vector.
std::int64_t hilbert_function(const std::vector<std::int64_t>& f, int degree);

}  // namespace cyclres
