#include <functional>
#include <stdexcept>

#include "cyclres/cyclic_ideals.hpp"

namespace cyclres {

namespace {

Monomial x(const RingCtx& ring, int i) { return Monomial::variable(ring.require("x" + std::to_string(i))); }

Monomial product_of(const RingCtx& ring, int first, int last, int step) {
  Monomial m;
  for (int i = first; i <= last; i += step) m = m * x(ring, i);
  return m;
}

}  // namespace

std::string CyclicCase::name() const {
  switch (tag) {
    case CaseTag::even_general: return "even";
    case CaseTag::even_d2: return "even-d2";
    case CaseTag::even_simplex: return "even-simplex";
    case CaseTag::odd_general: return "odd";
    case CaseTag::odd_d3: return "odd-d3";
    case CaseTag::odd_simplex: return "odd-simplex";
  }
  return "?";
}

CyclicCase classify(int d, int m) {
  if (d < 2 || m < d + 1)
    throw std::invalid_argument("need 2 <= d and d+1 <= m, got d=" + std::to_string(d) +
                                ", m=" + std::to_string(m));
  if (m + 3 > static_cast<int>(kMaxVars))
    throw std::invalid_argument("m=" + std::to_string(m) + " exceeds the supported variable count");
  CaseTag tag;
  if (m == d + 1)
    tag = d % 2 == 0 ? CaseTag::even_simplex : CaseTag::odd_simplex;
  else if (d % 2 == 0)
    tag = d == 2 ? CaseTag::even_d2 : CaseTag::even_general;
  else
    tag = d == 3 ? CaseTag::odd_d3 : CaseTag::odd_general;
  return {tag, d, m};
}

std::vector<Monomial> gap_monomials(const RingCtx& ring, int a, int lo, int hi) {
  std::vector<Monomial> out;
  if (a < 0) throw std::invalid_argument("negative generator length");
  Monomial cur;
  std::function<void(int, int)> rec = [&](int left, int start) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int t = start; t + 2 * (left - 1) <= hi; ++t) {
      Monomial saved = cur;
      cur = cur * x(ring, t);
      rec(left - 1, t + 2);
      cur = saved;
    }
  };
  rec(a, lo);
  return out;
}

MonomialIdeal gens_I_amn(int a, int m, int n, Field field) {
  if (a < 1 || m < 1 || m >= n || 2 * a > n - m + 2)
    throw std::invalid_argument("I_{a,m,n} needs a >= 1, 1 <= m < n and 2a <= n-m+2");
  Ring ring = vertex_ring(n, field);
  return MonomialIdeal(ring, gap_monomials(*ring, a, m, n));
}

Ring auxiliary_ring(int d, int m, Field field) {
  std::vector<Variable> vars;
  for (int i = 1; i <= m; ++i) vars.push_back({"x" + std::to_string(i), 1});
  if (d % 2 == 0) {
    vars.push_back({"z", 1});
  } else {
    vars.push_back({"z1", 1});
    vars.push_back({"z2", 1});
  }
  return make_ring(std::move(vars), field);
}

MonomialIdeal ideal_I(int d, int m, Field field) { return ideal_I(d, m, vertex_ring(m, field)); }

MonomialIdeal ideal_I(int d, int m, const Ring& ring) {
  const CyclicCase c = classify(d, m);
  const RingCtx& r = *ring;
  std::vector<Monomial> gens;
  if (m == d + 1) {
    gens.push_back(product_of(r, 1, m, 1));
  } else if (c.even()) {
    const int a = (d + 2) / 2;
    gens = gap_monomials(r, a, 1, m - 1);
    for (const auto& g : gap_monomials(r, a, 2, m)) gens.push_back(g);
  } else {
    const int a = (d + 1) / 2;
    gens = gap_monomials(r, a, 2, m - 1);
    const Monomial ends = x(r, 1) * x(r, m);
    for (const auto& g : gap_monomials(r, a - 1, 3, m - 2)) gens.push_back(ends * g);
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::vector<Monomial> ideal_J_generators(int d, int m, const Ring& aux) {
  const CyclicCase c = classify(d, m);
  const RingCtx& r = *aux;
  std::vector<Monomial> block, zblock;
  Monomial zpart;
  if (c.even()) {
    const int a = (d + 2) / 2;
    block = gap_monomials(r, a - 1, 2, m - 1);
    zpart = Monomial::variable(r.require("z"));
    zblock = gap_monomials(r, a - 2, 3, m - 2);
  } else {
    const int a = (d + 1) / 2;
    block = gap_monomials(r, a - 1, 2, m - 2);
    zpart = Monomial::variable(r.require("z1")) * Monomial::variable(r.require("z2"));
    zblock = gap_monomials(r, a - 2, 3, m - 3);
  }
  sort_grlex(r, block);
  sort_grlex(r, zblock);
  for (const auto& w : zblock) block.push_back(zpart * w);
  return block;
}

MonomialIdeal ideal_J(int d, int m, Field field) {
  Ring aux = auxiliary_ring(d, m, field);
  return MonomialIdeal(aux, ideal_J_generators(d, m, aux));
}

MonomialIdeal colon_star(int d, int m, Field field) {
  if (d < 2 || d % 2 != 0 || m < d + 1)
    throw std::invalid_argument("colon_star needs even d >= 2 and m >= d+1");
  MonomialIdeal I = ideal_I(d, m, field);
  const RingCtx& r = *I.ring();
  return I.colon(x(r, 1) * x(r, m));
}

MonomialIdeal shift_down(const MonomialIdeal& ideal, int m) {
  const RingCtx& r = *ideal.ring();
  for (const auto& g : ideal.gens())
    if (g[r.require("x1")] || g[r.require("x" + std::to_string(m))])
      throw std::invalid_argument("shift_down: generator involves x1 or x" + std::to_string(m));
  Ring target = vertex_ring(m - 2, r.field());
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    Monomial out;
    for (int i = 2; i <= m - 1; ++i) {
      int e = g[r.require("x" + std::to_string(i))];
      if (e) out = out * Monomial::variable(static_cast<std::size_t>(i - 2), e);
    }
    gens.push_back(out);
  }
  return MonomialIdeal(target, std::move(gens));
}

MonomialIdeal j_by_relabeling(int d, int m, Field field) {
  if (d < 4 || d % 2 != 0) throw std::invalid_argument("j_by_relabeling needs even d >= 4");
  MonomialIdeal smaller = ideal_I(d - 2, m - 1, field);
  std::map<std::string, std::string> rename;
  for (int i = 1; i <= m - 2; ++i) rename["x" + std::to_string(i)] = "x" + std::to_string(i + 1);
  rename["x" + std::to_string(m - 1)] = "z";
  return smaller.relabel(auxiliary_ring(d, m, field), rename);
}

}  // namespace cyclres
