#include <stdexcept>

#include "cyclres/km.hpp"

namespace cyclres {

namespace {

Poly pfaffian_of(const PolyMatrix& m, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return Poly::constant(m.ring(), 1);
  Poly out(m.ring());
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const Poly* a = m.find(idx[0], idx[j]);
    if (!a) continue;
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    Poly term = *a * pfaffian_of(m, rest);
    if (j % 2 == 1)
      out += term;
    else
      out -= term;
  }
  return out;
}

}  // namespace

Poly pfaffian(const PolyMatrix& m, std::size_t drop) {
  const std::size_t n = m.num_rows();
  if (m.num_cols() != n) throw std::invalid_argument("pfaffian needs a square matrix");
  if (n % 2 == 0) throw std::invalid_argument("pfaffian with a dropped index needs odd dimension");
  if (drop < 1 || drop > n) throw std::out_of_range("drop index out of range");
  for (std::size_t r = 0; r < n; ++r) {
    if (m.find(r, r)) throw std::invalid_argument("skew matrix with nonzero diagonal");
    for (const auto& e : m.row(r))
      if (!(m.at(e.col, r) == -e.value)) throw std::invalid_argument("matrix is not skew-symmetric");
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (i + 1 != drop) idx.push_back(i);
  return pfaffian_of(m, idx);
}

PolyMatrix cyclic_skew_matrix(int d, const Ring& ring) {
  const std::size_t n = static_cast<std::size_t>(d + 3);
  PolyMatrix m(ring, GradedFreeModule::free(n), GradedFreeModule::free(n, 1));
  auto xv = [&](std::size_t i) { return Poly::variable(ring, "x" + std::to_string(i)); };
  for (std::size_t i = 1; i <= n - 1; ++i) {
    m.set(i - 1, i, xv(i));
    m.set(i, i - 1, -xv(i));
  }
  m.set(0, n - 1, -xv(n));
  m.set(n - 1, 0, xv(n));
  return m;
}

ChainComplex pfaffian_complex(int d, const Ring& ring) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("pfaffian_complex needs even d >= 2");
  const std::size_t n = static_cast<std::size_t>(d + 3);
  PolyMatrix skew = cyclic_skew_matrix(d, ring);
  const int gen_deg = (d + 2) / 2;
  std::vector<Poly> v;
  for (std::size_t i = 1; i <= n; ++i) {
    Poly p = pfaffian(skew, i);
    v.push_back(i % 2 == 1 ? p : -p);
  }
  GradedFreeModule f0({0}), f1 = GradedFreeModule::free(n, gen_deg),
                   f2 = GradedFreeModule::free(n, gen_deg + 1), f3({d + 3});
  PolyMatrix b1(ring, f0, f1), b3(ring, f2, f3);
  for (std::size_t i = 0; i < n; ++i) {
    b1.set(0, i, v[i]);
    b3.set(i, 0, v[i]);
  }
  ChainComplex out(ring, {b1, skew.with_modules(f1, f2), b3});
  out.require_complex("pfaffian_complex");
  return out;
}

}  // namespace cyclres
