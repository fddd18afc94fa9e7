#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace cyclres {

/// Element of a coefficient field.  Prime-field elements keep den == 1 and
/// 0 <= num < p; rationals are kept reduced with den > 0.
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

enum class FieldKind { prime, rational };

/// Exact coefficient field: Z/p for a prime p < 2^31, or Q with 64-bit
/// numerator and denominator.  Rational arithmetic that leaves the 64-bit
/// range throws std::overflow_error instead of wrapping.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  Field() = default;
  static Field prime(std::uint32_t p);
  static Field rationals();
  /// Accepts "q", "Q", "prime:N" (and a bare prime "N").
  static Field parse(std::string_view spec);

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::prime; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return kind_ == FieldKind::prime ? p_ : 0; }
  std::string spec() const;

  Scalar zero() const { return {0, 1}; }
  Scalar one() const { return {1, 1}; }
  Scalar from_int(std::int64_t v) const;
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;

  bool is_zero(const Scalar& a) const { return a.num == 0; }
  bool is_one(const Scalar& a) const { return a.num == 1 && a.den == 1; }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Image under the reduction map into the prime field `target`.
  /// Throws std::domain_error if a denominator vanishes mod p.
  std::uint32_t reduce_mod(const Scalar& a, std::uint32_t p) const;

  /// Uniform element of Z/p; over Q a small random integer.
  Scalar random(std::mt19937_64& rng) const;

  /// Prime-field elements print as their symmetric representative, so -1
  /// prints as "-1" rather than "p-1".
  std::string to_string(const Scalar& a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_ = FieldKind::prime;
  std::uint32_t p_ = kDefaultPrime;
};

bool is_prime(std::uint64_t n);

}  // namespace cyclres
