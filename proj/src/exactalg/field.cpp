#include "cyclres/field.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cyclres {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < -static_cast<__int128>(INT64_MAX))
    throw std::overflow_error("rational coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Scalar make_rational(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (num == 0) return {0, 1};
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  return {narrow(num / g), narrow(den / g)};
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  return Field(FieldKind::prime, p);
}

Field Field::rationals() { return Field(FieldKind::rational, 0); }

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q" || spec == "rationals") return rationals();
  std::string_view digits = spec;
  if (digits.substr(0, 6) == "prime:") digits.remove_prefix(6);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || p > UINT32_MAX)
    throw std::invalid_argument("bad field spec '" + std::string(spec) +
                                "' (expected q or prime:N)");
  return prime(static_cast<std::uint32_t>(p));
}

std::string Field::spec() const {
  return kind_ == FieldKind::rational ? "q" : "prime:" + std::to_string(p_);
}

Scalar Field::from_int(std::int64_t v) const {
  if (kind_ == FieldKind::rational) return {v, 1};
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {r, 1};
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (kind_ == FieldKind::rational) return make_rational(num, den);
  return div(from_int(num), from_int(den));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::prime) {
    std::uint64_t s = static_cast<std::uint64_t>(a.num) + static_cast<std::uint64_t>(b.num);
    if (s >= p_) s -= p_;
    return {static_cast<std::int64_t>(s), 1};
  }
  if (a.den == 1 && b.den == 1) return {narrow(static_cast<__int128>(a.num) + b.num), 1};
  return make_rational(static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den,
                       static_cast<__int128>(a.den) * b.den);
}

Scalar Field::neg(const Scalar& a) const {
  if (a.num == 0) return a;
  if (kind_ == FieldKind::prime) return {static_cast<std::int64_t>(p_) - a.num, 1};
  return {-a.num, a.den};
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == FieldKind::prime)
    return {static_cast<std::int64_t>(static_cast<std::uint64_t>(a.num) *
                                      static_cast<std::uint64_t>(b.num) % p_),
            1};
  if (a.den == 1 && b.den == 1) return {narrow(static_cast<__int128>(a.num) * b.num), 1};
  return make_rational(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
}

Scalar Field::inv(const Scalar& a) const {
  if (a.num == 0) throw std::domain_error("inverse of zero");
  if (kind_ == FieldKind::prime)
    return {static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(a.num), p_ - 2, p_)), 1};
  return make_rational(a.den, a.num);
}

std::uint32_t Field::reduce_mod(const Scalar& a, std::uint32_t p) const {
  auto residue = [p](std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + p : r);
  };
  if (kind_ == FieldKind::prime) {
    if (p != p_) throw std::domain_error("cannot reduce between different prime fields");
    return static_cast<std::uint32_t>(a.num);
  }
  std::uint64_t d = residue(a.den);
  if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
  return static_cast<std::uint32_t>(residue(a.num) * pow_mod(d, p - 2, p) % p);
}

Scalar Field::random(std::mt19937_64& rng) const {
  if (kind_ == FieldKind::prime) {
    std::uniform_int_distribution<std::int64_t> dist(0, p_ - 1);
    return {dist(rng), 1};
  }
  std::uniform_int_distribution<std::int64_t> dist(-(1 << 20), 1 << 20);
  return {dist(rng), 1};
}

std::string Field::to_string(const Scalar& a) const {
  if (kind_ == FieldKind::prime) {
    std::int64_t v = a.num;
    if (v > static_cast<std::int64_t>(p_ / 2)) v -= p_;
    return std::to_string(v);
  }
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

}  // namespace cyclres
