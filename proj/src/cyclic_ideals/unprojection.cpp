#include <stdexcept>

#include "cyclres/cyclic_ideals.hpp"
#include "cyclres/linalg.hpp"

namespace cyclres {

UnprojectionInput phi_images(int d, int m, Field field) {
  const CyclicCase c = classify(d, m);
  Ring aux = auxiliary_ring(d, m, field);
  const RingCtx& r = *aux;
  UnprojectionInput in{c, aux, ideal_I(d, m, aux).polys(), {}, {}, 1};

  Monomial aux_part, ends;
  auto xv = [&](int i) { return Monomial::variable(r.require("x" + std::to_string(i))); };
  if (c.even()) {
    aux_part = Monomial::variable(r.require("z"));
    ends = xv(1) * xv(m);
  } else {
    aux_part = Monomial::variable(r.require("z1")) * Monomial::variable(r.require("z2"));
    ends = xv(1) * xv(m - 1) * xv(m);
  }
  for (const auto& g : ideal_J_generators(d, m, aux)) {
    in.j_gens.push_back(Poly::monomial(aux, g));
    if (aux_part.divides(g))
      in.phi_images.push_back(Poly::monomial(aux, (g / aux_part) * ends));
    else
      in.phi_images.push_back(Poly(aux));
  }
  return in;
}

namespace {

PolyMatrix generator_row(const UnprojectionInput& in) { return PolyMatrix::row_vector(in.ring, in.j_gens); }

std::optional<PolyMatrix> express_over_j(const UnprojectionInput& in, const Poly& c) {
  if (c.is_zero()) return PolyMatrix(in.ring, GradedFreeModule::free(in.j_gens.size()), GradedFreeModule({0}));
  if (!c.is_homogeneous()) throw std::invalid_argument("apply_phi needs a homogeneous element");
  PolyMatrix row = generator_row(in);
  PolyMatrix y(in.ring, GradedFreeModule({0}), GradedFreeModule({*c.degree()}));
  y.set(0, 0, c);
  return lift_solve(row, y, {*c.degree()});
}

}  // namespace

Poly apply_phi(const UnprojectionInput& in, const Poly& c) {
  auto coeffs = express_over_j(in, c);
  if (!coeffs) throw std::invalid_argument("element " + c.to_string() + " is not in J");
  Poly out(in.ring);
  for (std::size_t k = 0; k < in.j_gens.size(); ++k)
    if (const Poly* q = coeffs->find(k, 0)) out += *q * in.phi_images[k];
  return out;
}

std::string check_unprojection_input(const UnprojectionInput& in) {
  if (in.j_gens.size() != in.phi_images.size()) return "phi images not aligned with J generators";
  for (const auto& g : in.i_gens)
    if (!express_over_j(in, g)) return "I generator " + g.to_string() + " is not in J";
  for (std::size_t k = 0; k < in.j_gens.size(); ++k) {
    const Poly& img = in.phi_images[k];
    if (img.is_zero()) continue;
    if (!img.is_homogeneous() || *img.degree() != *in.j_gens[k].degree() + in.degT)
      return "phi image of " + in.j_gens[k].to_string() + " has the wrong degree";
  }
  return {};
}

Ring unprojection_ring(const UnprojectionInput& in) { return extend_ring(in.ring, {{"T", in.degT}}); }

std::vector<Poly> unprojection_ideal(const UnprojectionInput& in, const Ring& with_t) {
  std::vector<Poly> out;
  for (const auto& g : in.i_gens) out.push_back(change_ring(g, with_t));
  const Poly t = Poly::variable(with_t, "T");
  for (std::size_t k = 0; k < in.j_gens.size(); ++k)
    out.push_back(t * change_ring(in.j_gens[k], with_t) - change_ring(in.phi_images[k], with_t));
  return out;
}

std::vector<Poly> unprojection_ideal(const UnprojectionInput& in) {
  return unprojection_ideal(in, unprojection_ring(in));
}

Assignment specialization_map(const CyclicCase& kase, const Ring& with_t, const Ring& target) {
  const int m = kase.m;
  Assignment a;
  for (int i = 1; i <= m; ++i) {
    const std::string name = "x" + std::to_string(i);
    if (with_t->index_of(name)) a.emplace(name, Poly::variable(target, name));
  }
  const std::string last = "x" + std::to_string(m);
  const std::string next = "x" + std::to_string(m + 1);
  if (kase.even()) {
    if (with_t->index_of("z")) a.insert_or_assign("z", Poly(target));
    if (with_t->index_of("T")) a.insert_or_assign("T", Poly::variable(target, next));
  } else {
    if (with_t->index_of("z1")) a.insert_or_assign("z1", Poly(target));
    if (with_t->index_of("z2")) a.insert_or_assign("z2", Poly(target));
    a.insert_or_assign(last, Poly::variable(target, next));
    if (with_t->index_of("T")) a.insert_or_assign("T", Poly::variable(target, last));
  }
  return a;
}

MonomialIdeal specialized_unprojection_ideal(const UnprojectionInput& in) {
  Ring with_t = unprojection_ring(in);
  Ring target = vertex_ring(in.kase.m + 1, in.ring->field());
  Assignment map = specialization_map(in.kase, with_t, target);
  std::vector<Monomial> gens;
  for (const auto& g : unprojection_ideal(in, with_t)) {
    Poly s = substitute(g, map, target);
    if (s.is_zero()) continue;
    if (!s.is_term())
      throw std::runtime_error("specialized generator " + s.to_string() + " is not a monomial");
    gens.push_back(s.terms()[0].mono);
  }
  return MonomialIdeal(target, std::move(gens));
}

}  // namespace cyclres
