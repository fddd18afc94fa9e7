#include <stdexcept>

#include "cyclres/km.hpp"
#include "cyclres/linalg.hpp"

namespace cyclres {

namespace {

std::vector<int> shifted_twists(const GradedFreeModule& m, int s) { return m.shifted(s).twists(); }

int map_degree(const std::vector<Poly>& entries, const GradedFreeModule& rows, int row_of_each,
               const GradedFreeModule& cols, bool entries_are_rows, const char* what) {
  std::optional<int> deg;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Poly& p = entries[i];
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw std::invalid_argument(std::string(what) + ": inhomogeneous lift");
    const int row_tw = entries_are_rows ? rows.twist(i) : rows.twist(static_cast<std::size_t>(row_of_each));
    const int col_tw = entries_are_rows ? cols.twist(0) : cols.twist(i);
    const int d = *p.degree() + row_tw - col_tw;
    if (deg && *deg != d) throw std::invalid_argument(std::string(what) + ": lifts of inconsistent degree");
    deg = d;
  }
  if (!deg) throw std::invalid_argument(std::string(what) + ": all lifts vanish");
  return *deg;
}

Scalar unit_of(const PolyMatrix& m, const char* what) {
  if (m.num_rows() != 1 || m.num_cols() != 1) throw std::logic_error(std::string(what) + " is not 1x1");
  const Poly p = m.at(0, 0);
  if (p.is_zero() || !p.is_constant()) throw std::runtime_error(std::string(what) + " is not a nonzero constant");
  return p.constant_term();
}

}  // namespace

std::pair<ChainMap, Scalar> build_alpha(const ChainComplex& c_i, const ChainComplex& c_j,
                                        const std::vector<Poly>& lhat) {
  const int g = c_j.length();
  if (g < 2 || c_i.length() != g - 1)
    throw std::invalid_argument("build_alpha: need length(C_J) = length(C_I) + 1 >= 2");
  const Ring& ring = c_j.ring();
  const GradedFreeModule& top_a = c_j.module(g - 1);
  const GradedFreeModule& top_b = c_i.module(g - 1);
  if (lhat.size() != top_a.rank() || top_b.rank() != 1 || c_j.module(g).rank() != 1)
    throw std::invalid_argument("build_alpha: lifts do not match the last differential of C_J");

  const int delta = map_degree(lhat, top_a, 0, top_b, true, "build_alpha");
  PolyMatrix top(ring, top_a, top_b);
  for (std::size_t i = 0; i < lhat.size(); ++i) top.set(i, 0, lhat[i]);

  std::vector<PolyMatrix> tilde(static_cast<std::size_t>(g));
  tilde[static_cast<std::size_t>(g - 1)] = top;
  PolyMatrix dual = top.transpose();
  for (int j = g - 1; j >= 1; --j) {
    PolyMatrix bt = c_i.differential(j).transpose();
    PolyMatrix y = dual * c_j.differential(j).transpose();
    auto x = lift_solve(bt, y, shifted_twists(c_j.module(j - 1).dual(), delta));
    if (!x) throw std::runtime_error("build_alpha: dual lifting has no solution at index " + std::to_string(j - 1));
    dual = x->with_modules(c_i.module(j - 1).dual(), c_j.module(j - 1).dual());
    tilde[static_cast<std::size_t>(j - 1)] =
        dual.transpose().with_modules(c_j.module(j - 1), c_i.module(j - 1));
  }
  const Scalar w = unit_of(tilde[0], "alpha_0");
  const Scalar w_inv = ring->field().inv(w);
  ChainMap alpha{0, 0, delta, {}};
  for (auto& m : tilde) alpha.maps.push_back(m.scaled(w_inv));
  return {std::move(alpha), w};
}

std::pair<ChainMap, Scalar> build_beta(const ChainComplex& c_i, const ChainComplex& c_j,
                                       const std::vector<Poly>& l) {
  const int g = c_j.length();
  if (g < 2 || c_i.length() != g - 1)
    throw std::invalid_argument("build_beta: need length(C_J) = length(C_I) + 1 >= 2");
  const Ring& ring = c_j.ring();
  if (l.size() != c_j.module(1).rank() || c_i.module(0).rank() != 1)
    throw std::invalid_argument("build_beta: lifts do not match the first differential of C_J");

  const int delta = map_degree(l, c_i.module(0), 0, c_j.module(1), false, "build_beta");
  PolyMatrix first(ring, c_i.module(0), c_j.module(1));
  for (std::size_t i = 0; i < l.size(); ++i) first.set(0, i, -l[i]);

  ChainMap beta{1, 1, delta, {first}};
  for (int i = 2; i <= g; ++i) {
    PolyMatrix y = beta.maps.back() * c_j.differential(i);
    auto x = lift_solve(c_i.differential(i - 1), y, shifted_twists(c_j.module(i), delta));
    if (!x) throw std::runtime_error("build_beta: lifting has no solution at index " + std::to_string(i));
    beta.maps.push_back(x->with_modules(c_i.module(i - 1), c_j.module(i)));
  }
  const Scalar u = unit_of(beta.maps.back(), "beta_g");
  return {std::move(beta), u};
}

Homotopy solve_homotopy(const ChainComplex& c_i, const ChainMap& alpha, const ChainMap& beta) {
  const int g = c_i.length() + 1;
  const Ring& ring = c_i.ring();
  Homotopy h{alpha.degree + beta.degree, {}};
  for (int i = 0; i < g; ++i) h.maps.emplace_back(ring, c_i.module(i), c_i.module(i));
  auto hom_twists = [&](int i) { return c_i.module(i).shifted(h.degree); };

  if (g == 2) {
    if (!(beta.at(1) * alpha.at(1)).is_zero())
      throw std::runtime_error("solve_homotopy: beta_1 alpha_1 != 0 in the g = 2 case");
    return h;
  }
  for (int i = 1; i <= g - 2; ++i) {
    PolyMatrix y = beta.at(i) * alpha.at(i) - h.maps[static_cast<std::size_t>(i - 1)] * c_i.differential(i);
    std::vector<MatrixConstraint> constraints{{&c_i.differential(i), nullptr, y}};
    PolyMatrix y2;
    if (i == g - 2) {
      y2 = beta.at(g - 1) * alpha.at(g - 1);
      constraints.push_back({nullptr, &c_i.differential(g - 1), y2});
    }
    auto x = solve_matrix_system(ring, c_i.module(i), hom_twists(i), constraints);
    if (!x) throw std::runtime_error("solve_homotopy: no solution for h_" + std::to_string(i));
    h.maps[static_cast<std::size_t>(i)] = x->with_modules(c_i.module(i), c_i.module(i));
  }
  return h;
}

std::string check_chain_map(const ChainMap& map, const ChainComplex& source, const ChainComplex& target) {
  for (std::size_t k = 0; k < map.maps.size(); ++k) {
    const int i = map.first + static_cast<int>(k);
    if (!map.at(i).is_homogeneous(map.degree))
      return "component " + std::to_string(i) + " is not homogeneous of degree " + std::to_string(map.degree);
  }
  for (int i = map.first + 1; map.has(i); ++i) {
    const int t = i - map.shift;
    if (i > source.length() || t < 1 || t > target.length()) continue;
    if (!(target.differential(t) * map.at(i) == map.at(i - 1) * source.differential(i)))
      return "square at index " + std::to_string(i) + " does not commute";
  }
  return {};
}

std::string check_homotopy(const ChainComplex& c_i, const ChainMap& alpha, const ChainMap& beta,
                           const Homotopy& h) {
  const int g = c_i.length() + 1;
  if (static_cast<int>(h.maps.size()) != g) return "homotopy has the wrong number of components";
  if (!h.maps.front().is_zero() || !h.maps.back().is_zero()) return "h_0 and h_{g-1} must vanish";
  for (int i = 1; i <= g - 1; ++i) {
    PolyMatrix lhs = beta.at(i) * alpha.at(i);
    PolyMatrix rhs = h.maps[static_cast<std::size_t>(i - 1)] * c_i.differential(i) +
                     c_i.differential(i) * h.maps[static_cast<std::size_t>(i)];
    if (!(lhs == rhs)) return "homotopy identity fails at index " + std::to_string(i);
  }
  return {};
}

KMData km_data(const UnprojectionInput& in, const ChainComplex& c_i, const ChainComplex& c_j) {
  const int g = c_j.length();
  std::vector<Poly> l, lhat;
  const PolyMatrix& first = c_j.differential(1);
  for (std::size_t c = 0; c < first.num_cols(); ++c) l.push_back(apply_phi(in, first.at(0, c)));
  const PolyMatrix& last = c_j.differential(g);
  for (std::size_t r = 0; r < last.num_rows(); ++r) lhat.push_back(apply_phi(in, last.at(r, 0)));

  auto [alpha, w] = build_alpha(c_i, c_j, lhat);
  auto [beta, u] = build_beta(c_i, c_j, l);
  (void)w;
  if (auto e = check_chain_map(alpha, c_i, c_j); !e.empty()) throw std::logic_error("alpha: " + e);
  if (auto e = check_chain_map(beta, c_j, c_i); !e.empty()) throw std::logic_error("beta: " + e);
  Homotopy h = solve_homotopy(c_i, alpha, beta);
  if (auto e = check_homotopy(c_i, alpha, beta, h); !e.empty()) throw std::logic_error(e);
  return KMData{c_i, c_j, std::move(alpha), std::move(beta), std::move(h), u, in.degT};
}

}  // namespace cyclres
