#include "cyclres/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclres {

Monomial Monomial::variable(std::size_t index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (e < 0 || e > 255) throw std::overflow_error("exponent out of range");
  exps_[i] = static_cast<std::uint8_t>(e);
}

int Monomial::total_degree() const {
  int s = 0;
  for (auto e : exps_) s += e;
  return s;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e <= 1; });
}

std::uint64_t Monomial::support() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i]) s |= std::uint64_t{1} << i;
  return s;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  unsigned overflow = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned{exps_[i]} + other.exps_[i];
    overflow |= s;
    r.exps_[i] = static_cast<std::uint8_t>(s);
  }
  if (overflow > 255) throw std::overflow_error("monomial exponent overflow");
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (other.exps_[i] > exps_[i]) throw std::domain_error("monomial does not divide");
    r.exps_[i] = exps_[i] - other.exps_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace cyclres
