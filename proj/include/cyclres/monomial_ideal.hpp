#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclres/poly.hpp"

namespace cyclres {

/// k[x1..xm] with all degrees 1.
Ring vertex_ring(int m, Field field = Field());

/// Monomial ideal stored by its minimal generators, sorted descending in
/// graded-lex order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(Ring ring, std::vector<Monomial> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool contains(const Monomial& m) const;
  bool is_squarefree() const;
  /// I : m, minimalized.
  MonomialIdeal colon(const Monomial& m) const;
  /// Generators renamed variable-by-variable: names[i] of the source ring
  /// go to rename.at(names[i]) (or the same name) in `target`.
  MonomialIdeal relabel(const Ring& target, const std::map<std::string, std::string>& rename) const;
  std::vector<Poly> polys() const;

  /// Same generator set (and same variable names).
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

/// Sort monomials descending by weighted degree, then lexicographically.
void sort_grlex(const RingCtx& ring, std::vector<Monomial>& monos);

/// Drop generators divisible by another one; result sorted grlex.
std::vector<Monomial> minimalize(const RingCtx& ring, std::vector<Monomial> monos);

}  // namespace cyclres
