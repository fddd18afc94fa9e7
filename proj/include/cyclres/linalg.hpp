#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cyclres/matrix.hpp"

namespace cyclres {

/// Sparse vector as (index, value) pairs sorted by index, no zeros.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;

/// Incremental row echelon form of a linear system over a field.  Pivots
/// are leftmost entries, so the pivot columns depend only on the row space.
class SparseEchelon {
 public:
  explicit SparseEchelon(Field field) : field_(field) {}

  /// Adds the equation row . x = rhs.  Returns false when it reduces to
  /// 0 = nonzero.
  bool add(SparseVec row, Scalar rhs = Scalar{});
  std::size_t rank() const { return rows_.size(); }
  bool consistent() const { return consistent_; }
  /// The solution with every non-pivot unknown set to zero.
  std::vector<Scalar> solve(std::size_t num_unknowns) const;

 private:
  struct PivotRow {
    SparseVec row;
    Scalar rhs;
  };

  Field field_;
  std::vector<PivotRow> rows_;
  std::vector<std::int64_t> pivot_of_;  // column -> index into rows_, or -1
  bool consistent_ = true;
};

/// One constraint left * X * right = rhs on an unknown matrix X.  A null
/// factor stands for the identity.
struct MatrixConstraint {
  const PolyMatrix* left = nullptr;
  const PolyMatrix* right = nullptr;
  PolyMatrix rhs;
};

enum class LiftStrategy {
  /// Only unknowns connected to the right-hand side through the equations.
  reachable,
  /// Every monomial of every graded piece (reference implementation).
  exhaustive,
};

/// Finds a homogeneous X: rows -> cols module pair (entry (j,c) of degree
/// cols.twist(c) - rows.twist(j)) satisfying all constraints.  Among all
/// solutions returns the one whose nonzero coefficients sit on pivot
/// unknowns, unknowns ordered by (column, row, monomial descending); this
/// is a deterministic basic solution of inclusion-minimal support.
std::optional<PolyMatrix> solve_matrix_system(const Ring& ring, const GradedFreeModule& rows,
                                              const GradedFreeModule& cols,
                                              const std::vector<MatrixConstraint>& constraints,
                                              LiftStrategy strategy = LiftStrategy::reachable);

/// Solves A X = Y with X: A.cols() -> R(-unknown_col_twists).  nullopt
/// means the system has no solution.
std::optional<PolyMatrix> lift_solve(const PolyMatrix& a, const PolyMatrix& y,
                                     const std::vector<int>& unknown_col_twists,
                                     LiftStrategy strategy = LiftStrategy::reachable);

/// Rank of a matrix given as sparse rows.
std::size_t sparse_rank(const Field& field, std::vector<SparseVec> rows);

/// Rank of a dense matrix over Z/p (row-major, entries already reduced).
std::size_t dense_rank_mod_p(std::vector<std::uint32_t> data, std::size_t rows, std::size_t cols,
                             std::uint32_t p);

/// Prime used for evaluation ranks over Q.
inline constexpr std::uint32_t kEvaluationPrime = 2147483629u;

/// Max over `trials` of the rank of A evaluated at a uniformly random
/// point.  Over Q the evaluation happens modulo kEvaluationPrime, which can
/// only lower the rank, so the result is still a valid lower bound.
std::size_t rank_at_random_point(const PolyMatrix& a, int trials, std::uint64_t seed = 1);
std::size_t rank_at_random_point(const PolyMatrix& a, int trials, std::mt19937_64& rng);

}  // namespace cyclres
