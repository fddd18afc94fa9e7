#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclres/ring.hpp"

namespace cyclres {

struct Term {
  Monomial mono;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial.  Terms are kept sorted by descending monomial (lex)
/// with no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}
  Poly(Ring ring, Scalar c);

  static Poly variable(const Ring& ring, std::string_view name);
  static Poly variable(const Ring& ring, std::size_t index);
  static Poly term(const Ring& ring, const Monomial& m, Scalar c);
  static Poly monomial(const Ring& ring, const Monomial& m);
  static Poly constant(const Ring& ring, std::int64_t c);
  /// Takes terms in any order; sorts and merges them.
  static Poly from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// True for a single term (scalar times monomial).
  bool is_term() const { return terms_.size() == 1; }
  bool is_homogeneous() const;
  /// Weighted degree of the leading term; nullopt for zero.
  std::optional<int> degree() const;
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& m) const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  /// Canonical text: terms in graded-lex order (higher degree first, ties
  /// broken lexicographically), e.g. "x1*x3^2 - 2*x2*z".
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

/// Inverse of Poly::to_string.  Accepts integer or a/b coefficients, '*'
/// and '^', and whitespace anywhere between tokens.
Poly parse_poly(const Ring& ring, std::string_view text);

using Assignment = std::map<std::string, Poly>;

/// Ring homomorphism image of p.  Every variable occurring in p needs an
/// image, given as a polynomial over `target`.
Poly substitute(const Poly& p, const Assignment& images, const Ring& target);

/// Moves p into `target`, matching variables by name.
Poly change_ring(const Poly& p, const Ring& target);

/// Variables of `source` sent to the same-named variables of `target`.
Assignment identity_assignment(const Ring& source, const Ring& target);

/// Sorts terms into graded-lex order (used for printing and serialization).
std::vector<Term> grlex_terms(const RingCtx& ring, const std::vector<Term>& terms);

std::string monomial_to_string(const RingCtx& ring, const Monomial& m);

}  // namespace cyclres
