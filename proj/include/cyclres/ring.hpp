#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclres/field.hpp"
#include "cyclres/monomial.hpp"

namespace cyclres {

struct Variable {
  std::string name;
  int degree = 1;

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Graded polynomial ring k[x_1..x_n] with positive variable degrees.
class RingCtx {
 public:
  RingCtx(std::vector<Variable> vars, Field field);

  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& vars() const { return vars_; }
  const Field& field() const { return field_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws std::invalid_argument for unknown names.
  std::size_t require(std::string_view name) const;

  int degree(const Monomial& m) const;

  friend bool operator==(const RingCtx& a, const RingCtx& b) {
    return a.vars_ == b.vars_ && a.field_ == b.field_;
  }

 private:
  std::vector<Variable> vars_;
  Field field_;
};

using Ring = std::shared_ptr<const RingCtx>;

Ring make_ring(std::vector<Variable> vars, Field field = Field());
/// All variables of degree 1.
Ring make_ring(const std::vector<std::string>& names, Field field = Field());
/// `base` with extra variables appended.
Ring extend_ring(const Ring& base, const std::vector<Variable>& extra);

bool same_ring(const Ring& a, const Ring& b);

/// All monomials of weighted degree `degree`, in descending lexicographic
/// order (x_1^degree first when deg x_1 = 1).  Empty for negative degrees.
std::vector<Monomial> graded_piece_basis(const RingCtx& ring, int degree);

}  // namespace cyclres
