#include "cyclres/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclres {

Ring vertex_ring(int m, Field field) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  return make_ring(names, field);
}

void sort_grlex(const RingCtx& ring, std::vector<Monomial>& monos) {
  std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
    int da = ring.degree(a), db = ring.degree(b);
    if (da != db) return da > db;
    return a > b;
  });
}

std::vector<Monomial> minimalize(const RingCtx& ring, std::vector<Monomial> monos) {
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.degree(a) < ring.degree(b); });
  std::vector<Monomial> out;
  for (const auto& m : monos) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) out.push_back(m);
  }
  sort_grlex(ring, out);
  return out;
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> gens)
    : ring_(std::move(ring)), gens_(minimalize(*ring_, std::move(gens))) {}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> out;
  for (const auto& g : gens_) out.push_back(g / g.gcd(m));
  return MonomialIdeal(ring_, std::move(out));
}

MonomialIdeal MonomialIdeal::relabel(const Ring& target,
                                     const std::map<std::string, std::string>& rename) const {
  std::vector<std::size_t> index(ring_->size());
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    const std::string& name = ring_->var(i).name;
    auto it = rename.find(name);
    index[i] = target->require(it == rename.end() ? name : it->second);
  }
  std::vector<Monomial> out;
  for (const auto& g : gens_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->size(); ++i)
      if (g[i]) m = m * Monomial::variable(index[i], g[i]);
    out.push_back(m);
  }
  return MonomialIdeal(target, std::move(out));
}

std::vector<Poly> MonomialIdeal::polys() const {
  std::vector<Poly> out;
  for (const auto& g : gens_) out.push_back(Poly::monomial(ring_, g));
  return out;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.gens_.size() != b.gens_.size()) return false;
  using Named = std::vector<std::pair<std::string, int>>;
  auto named = [](const MonomialIdeal& I) {
    std::vector<Named> out;
    for (const auto& g : I.gens_) {
      Named n;
      for (std::size_t i = 0; i < I.ring_->size(); ++i)
        if (g[i]) n.push_back({I.ring_->var(i).name, g[i]});
      std::sort(n.begin(), n.end());
      out.push_back(std::move(n));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return named(a) == named(b);
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += monomial_to_string(*ring_, gens_[i]);
  }
  return s + ")";
}

}  // namespace cyclres
