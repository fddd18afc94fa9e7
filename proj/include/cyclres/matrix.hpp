#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cyclres/poly.hpp"

namespace cyclres {

/// Free module ⊕ R(-twists[j]); generator j lives in degree twists[j].
class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> twists) : twists_(std::move(twists)) {}
  static GradedFreeModule free(std::size_t rank, int twist = 0) {
    return GradedFreeModule(std::vector<int>(rank, twist));
  }

  std::size_t rank() const { return twists_.size(); }
  int twist(std::size_t j) const { return twists_[j]; }
  const std::vector<int>& twists() const { return twists_; }

  GradedFreeModule shifted(int s) const;
  /// Negated twists (the graded dual).
  GradedFreeModule dual() const;

  friend GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;

 private:
  std::vector<int> twists_;
};

/// Sparse matrix of polynomials representing a map cols -> rows: column c
/// is the image of the c-th generator of the source module.
class PolyMatrix {
 public:
  struct Entry {
    std::size_t col;
    Poly value;
  };

  PolyMatrix() = default;
  PolyMatrix(Ring ring, GradedFreeModule rows, GradedFreeModule cols);
  static PolyMatrix identity(const Ring& ring, const GradedFreeModule& module);
  /// 1 x n matrix, source twists derived from the entry degrees.
  static PolyMatrix row_vector(const Ring& ring, const std::vector<Poly>& entries, int target_twist = 0);

  const Ring& ring() const { return ring_; }
  const GradedFreeModule& rows() const { return rows_; }
  const GradedFreeModule& cols() const { return cols_; }
  std::size_t num_rows() const { return rows_.rank(); }
  std::size_t num_cols() const { return cols_.rank(); }

  /// Nonzero entries of row r, sorted by column.
  const std::vector<Entry>& row(std::size_t r) const { return data_[r]; }
  const Poly* find(std::size_t r, std::size_t c) const;
  Poly at(std::size_t r, std::size_t c) const;

  void set(std::size_t r, std::size_t c, Poly value);
  void add_to(std::size_t r, std::size_t c, const Poly& value);

  bool is_zero() const;
  std::size_t nonzeros() const;
  /// Entry (r,c) homogeneous of degree cols.twist(c) + shift - rows.twist(r).
  bool is_homogeneous(int shift = 0) const;
  /// Some entry has a nonzero constant term.
  bool has_unit_entry() const;

  /// Graded dual map: rows and cols swap and both modules are dualized.
  PolyMatrix transpose() const;
  /// Same entries, new twist labels.
  PolyMatrix with_modules(GradedFreeModule rows, GradedFreeModule cols) const;
  PolyMatrix scaled(const Scalar& c) const;
  PolyMatrix operator-() const;
  /// Entries moved to `target` by variable name.
  PolyMatrix change_ring(const Ring& target) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  /// Entrywise equality; twists are not compared.
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::string to_string() const;

 private:
  Ring ring_;
  GradedFreeModule rows_, cols_;
  std::vector<std::vector<Entry>> data_;
};

/// Entrywise substitution; modules are kept.
PolyMatrix substitute(const PolyMatrix& m, const Assignment& images, const Ring& target);

/// Places blocks into a matrix whose rows and columns are direct sums.
class BlockBuilder {
 public:
  BlockBuilder(Ring ring, std::vector<GradedFreeModule> row_blocks,
               std::vector<GradedFreeModule> col_blocks);
  /// Adds `block` at block position (i, j); shapes must agree.
  void place(std::size_t i, std::size_t j, const PolyMatrix& block);
  const PolyMatrix& matrix() const { return m_; }

 private:
  std::vector<std::size_t> row_off_, col_off_;
  std::vector<GradedFreeModule> row_blocks_, col_blocks_;
  PolyMatrix m_;
};

}  // namespace cyclres
