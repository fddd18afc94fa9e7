#include <cstdlib>
#include <mutex>
#include <stdexcept>

#include "cyclres/pipeline.hpp"

namespace cyclres {

namespace {

std::string step_name(int d, int m) { return "(" + std::to_string(d) + "," + std::to_string(m) + ")"; }

Poly product(const Ring& ring, int first, int last, int stride = 2) {
  Poly p = Poly::constant(ring, 1);
  for (int v = first; v <= last; v += stride) p *= Poly::variable(ring, "x" + std::to_string(v));
  return p;
}

std::vector<Poly> run(const Ring& ring, int first, int last) {
  std::vector<Poly> out;
  for (int v = first; v <= last; ++v) out.push_back(Poly::variable(ring, "x" + std::to_string(v)));
  return out;
}

}  // namespace

Caps desk_caps() {
  Caps caps;
  if (const char* env = std::getenv("CYCLRES_MAX_M")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 3) throw std::invalid_argument("CYCLRES_MAX_M must be an integer >= 3");
    caps.max_m = static_cast<int>(v);
    caps.max_d = caps.max_m - 1;
  }
  return caps;
}

ChainComplex hypersurface_complex(const Ring& ring, const Poly& f) {
  ChainComplex c(ring, {PolyMatrix::row_vector(ring, {f})});
  return c;
}

Resolver::Resolver(Field field) : field_(field) {}

const ChainComplex& Resolver::resolve(int d, int m) {
  auto it = memo_.find({d, m});
  if (it != memo_.end()) return it->second;
  const CyclicCase kase = classify(d, m);
  ChainComplex c;
  const bool base = m <= d + 2 || (kase.even() && m == d + 3);
  if (base) {
    c = base_case(d, m);
  } else {
    c = km_step(d, m - 1);
  }
  check_step(d, m, c);
  return memo_.emplace(std::make_pair(d, m), std::move(c)).first->second;
}

ChainComplex Resolver::base_case(int d, int m) {
  const Ring ring = vertex_ring(m, field_);
  if (m == d + 1) return hypersurface_complex(ring, product(ring, 1, m, 1));
  if (m == d + 2) {
    if (d % 2 == 0) return koszul_complex(ring, {product(ring, 1, d + 1), product(ring, 2, d + 2)});
    return koszul_complex(ring, {product(ring, 2, d + 1), product(ring, 1, d) * Poly::variable(ring, "x" + std::to_string(d + 2))});
  }
  return pfaffian_complex(d, ring);
}

ChainComplex Resolver::j_resolution(int d, int m, const Ring& aux) {
  if (d == 2) {
    std::vector<Poly> el{Poly::variable(aux, "z")};
    for (auto& x : run(aux, 3, m - 1)) el.push_back(x);
    el.push_back(Poly::variable(aux, "x2"));
    return koszul_complex(aux, el);
  }
  if (d == 3) {
    std::vector<Poly> el{Poly::variable(aux, "z1") * Poly::variable(aux, "z2")};
    for (auto& x : run(aux, 3, m - 2)) el.push_back(x);
    el.push_back(Poly::variable(aux, "x2"));
    return koszul_complex(aux, el);
  }
  const ChainComplex& base = resolve(d - 2, m - 1);
  Assignment images;
  for (int v = 1; v <= m - 1; ++v) images["x" + std::to_string(v)] = Poly::variable(aux, "x" + std::to_string(v));
  if (d % 2 == 0) {
    images["x1"] = Poly::variable(aux, "z");
  } else {
    images["x1"] = Poly::variable(aux, "z1");
    images["x" + std::to_string(m - 1)] = Poly::variable(aux, "z2");
  }
  return specialize_complex(base, images, aux);
}

ChainComplex Resolver::km_step(int d, int m) {
  try {
    UnprojectionInput in = phi_images(d, m, field_);
    if (auto err = check_unprojection_input(in); !err.empty()) throw std::runtime_error(err);
    const ChainComplex c_i = resolve(d, m).change_ring(in.ring);
    const ChainComplex c_j = j_resolution(d, m, in.ring);
    const KMData data = km_data(in, c_i, c_j);
    const Ring with_t = unprojection_ring(in);
    const ChainComplex km = assemble_km(data, with_t);
    const Ring target = vertex_ring(m + 1, field_);
    return specialize_complex(km, specialization_map(in.kase, with_t, target), target);
  } catch (const std::exception& e) {
    throw std::runtime_error("step " + step_name(d, m) + " -> " + step_name(d, m + 1) + ": " + e.what());
  }
}

ChainComplex Resolver::odd_by_substitution(int d, int m) {
  if (d % 2 == 0 || d < 3) throw std::invalid_argument("odd_by_substitution: need odd d >= 3");
  const ChainComplex& base = resolve(d - 1, m - 1);
  const Ring target = vertex_ring(m, field_);
  Assignment images = identity_assignment(base.ring(), target);
  images["x1"] = Poly::variable(target, "x1") * Poly::variable(target, "x" + std::to_string(m));
  return specialize_complex(base, images, target);
}

void Resolver::check_step(int d, int m, const ChainComplex& c) const {
  const std::string where = "resolution of " + step_name(d, m) + ": ";
  if (!c.is_complex()) throw std::runtime_error(where + "d^2 != 0");
  if (!c.is_homogeneous()) throw std::runtime_error(where + "not homogeneous");
  if (!c.is_minimal()) throw std::runtime_error(where + "not minimal");
  if (c.length() != m - d) throw std::runtime_error(where + "wrong length");
  std::vector<Monomial> gens;
  for (const auto& e : c.differential(1).row(0)) {
    if (!e.value.is_term()) throw std::runtime_error(where + "f_1 has a non-monomial entry");
    gens.push_back(e.value.terms().front().mono);
  }
  if (gens.size() != c.module(1).rank() || !(MonomialIdeal(c.ring(), gens) == ideal_I(d, m, c.ring())))
    throw std::runtime_error(where + "f_1 does not present the Stanley-Reisner ideal");
}

ChainComplex resolve_cyclic(int d, int m, Field field) {
  const Caps caps = desk_caps();
  if (d > caps.max_d || m > caps.max_m)
    throw std::invalid_argument("resolve_cyclic: " + step_name(d, m) + " exceeds the cap d <= " +
                                std::to_string(caps.max_d) + ", m <= " + std::to_string(caps.max_m) +
                                " (set CYCLRES_MAX_M to raise it)");
  static std::mutex mutex;
  static std::map<std::string, Resolver> resolvers;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = resolvers.try_emplace(field.spec(), field).first;
  return it->second.resolve(d, m);
}

}  // namespace cyclres
