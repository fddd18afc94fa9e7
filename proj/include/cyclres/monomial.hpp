#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>

namespace cyclres {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector over at most kMaxVars variables.  Exponents are capped
/// at 255; products that exceed this throw std::overflow_error.
/// Ordering is lexicographic on the exponent vector, first variable most
/// significant.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, int power = 1);
  static Monomial from_exponents(std::span<const int> exps);

  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);

  int total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool is_squarefree() const;
  /// Bit i set iff variable i occurs.
  std::uint64_t support() const;

  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace cyclres
