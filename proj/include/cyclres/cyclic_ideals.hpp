#pragma once

#include <string>
#include <vector>

#include "cyclres/monomial_ideal.hpp"

namespace cyclres {

enum class CaseTag { even_general, even_d2, even_simplex, odd_general, odd_d3, odd_simplex };

struct CyclicCase {
  CaseTag tag;
  int d, m;

  bool even() const { return d % 2 == 0; }
  std::string name() const;
};

/// Throws std::invalid_argument unless 2 <= d and d+1 <= m.
CyclicCase classify(int d, int m);

/// Squarefree monomials x_{t1}…x_{ta} with lo <= t1, ta <= hi and gaps of
/// at least two, in the variables x1.. of `ring`.  a = 0 gives {1}.
std::vector<Monomial> gap_monomials(const RingCtx& ring, int a, int lo, int hi);

/// I_{a,m,n} over k[x1..xn]; requires m < n and 2a <= n-m+2.
MonomialIdeal gens_I_amn(int a, int m, int n, Field field = Field());

/// k[x1..xm, z] for even d, k[x1..xm, z1, z2] for odd d.
Ring auxiliary_ring(int d, int m, Field field = Field());

/// Stanley–Reisner ideal of Δ(d,m) from the closed formulas, over
/// k[x1..xm] (or any ring containing those variables).
MonomialIdeal ideal_I(int d, int m, Field field = Field());
MonomialIdeal ideal_I(int d, int m, const Ring& ring);

/// J generators in block order: the x-only block first, then the block
/// carrying z (resp. z1z2).
std::vector<Monomial> ideal_J_generators(int d, int m, const Ring& aux);
MonomialIdeal ideal_J(int d, int m, Field field = Field());

/// The pair J ⊂ R/I together with φ on the generators of J.
struct UnprojectionInput {
  CyclicCase kase;
  Ring ring;
  std::vector<Poly> i_gens;
  std::vector<Poly> j_gens;
  std::vector<Poly> phi_images;
  int degT = 1;
};

UnprojectionInput phi_images(int d, int m, Field field = Field());

/// Checks I ⊆ J (every generator of I lifts over J) and that each φ image
/// has degree deg(generator) + degT.  Returns an empty string or a
/// description of the first failure.
std::string check_unprojection_input(const UnprojectionInput& in);

/// φ(c) for c in J: c is written over the J generators, then φ is applied
/// linearly.  Throws if c is not in J.
Poly apply_phi(const UnprojectionInput& in, const Poly& c);

/// R[T] with deg T = degT.
Ring unprojection_ring(const UnprojectionInput& in);

/// I ∪ {T g_k - φ(g_k)} over unprojection_ring(in).
std::vector<Poly> unprojection_ideal(const UnprojectionInput& in, const Ring& with_t);
std::vector<Poly> unprojection_ideal(const UnprojectionInput& in);

/// The map R[T] -> k[x1..x_{m+1}] killing the auxiliary variables:
/// even: z -> 0, T -> x_{m+1}; odd: z1, z2 -> 0, x_m -> x_{m+1}, T -> x_m.
Assignment specialization_map(const CyclicCase& kase, const Ring& with_t, const Ring& target);

/// Minimal generators of the specialized unprojection ideal in
/// k[x1..x_{m+1}]; should equal ideal_I(d, m+1).
MonomialIdeal specialized_unprojection_ideal(const UnprojectionInput& in);

/// I_{d,m} : (x1 xm) for even d.
MonomialIdeal colon_star(int d, int m, Field field = Field());

/// Generators in x2..x_{m-1} moved to x1..x_{m-2}.
MonomialIdeal shift_down(const MonomialIdeal& ideal, int m);

/// ideal_I(d-2, m-1) under x_i -> x_{i+1} (i <= m-2), x_{m-1} -> z, as an
/// ideal of k[x1..xm, z]; for even d >= 4 this is J_{d,m}.
MonomialIdeal j_by_relabeling(int d, int m, Field field = Field());

}  // namespace cyclres
