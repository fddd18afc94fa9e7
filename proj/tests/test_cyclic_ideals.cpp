#include <doctest.h>

#include "support.hpp"

using namespace cyclres;

namespace {

std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST_CASE("generator families") {
  CHECK(gens_I_amn(2, 1, 5).to_string() == "(x1*x3, x1*x4, x1*x5, x2*x4, x2*x5, x3*x5)");
  CHECK(gens_I_amn(1, 3, 3 + 1).size() == 2);
  CHECK_THROWS(gens_I_amn(3, 1, 4));
  CHECK_THROWS(gens_I_amn(1, 4, 4));
  CHECK(gap_monomials(*vertex_ring(4), 0, 1, 4).size() == 1);
}

TEST_CASE("closed-form ideals are the Stanley-Reisner ideals") {
  for (int d = 2; d <= 6; ++d)
    for (int m = d + 1; m <= 10; ++m) CHECK(ideal_I(d, m) == stanley_reisner_ideal(cyclic_complex(d, m)));
}

TEST_CASE("the d=4, m=6 example") {
  CHECK(ideal_I(4, 6).to_string() == "(x1*x3*x5, x2*x4*x6)");
  const Ring aux = auxiliary_ring(4, 6);
  std::vector<Poly> j;
  for (const auto& g : ideal_J_generators(4, 6, aux)) j.push_back(Poly::monomial(aux, g));
  CHECK(strings(j) == std::vector<std::string>{"x2*x4", "x2*x5", "x3*x5", "x3*z", "x4*z"});
  CHECK(colon_star(4, 6).to_string() == "(x2*x4, x3*x5)");
  const auto in = phi_images(4, 6);
  CHECK(check_unprojection_input(in).empty());
  const auto q = strings(unprojection_ideal(in));
  CHECK(q.size() == 7);
  CHECK(std::count(q.begin(), q.end(), "x2*x4*T") == 1);
  CHECK(std::count(q.begin(), q.end(), "-x1*x3*x6 + x3*z*T") == 1);
  CHECK(std::count(q.begin(), q.end(), "x1*x3*x5") == 1);
}

TEST_CASE("phi is defined on J and vanishes off the auxiliary block") {
  const auto in = phi_images(4, 7);
  const Ring& r = in.ring;
  CHECK(apply_phi(in, parse_poly(r, "x2*x4")).is_zero());
  CHECK(apply_phi(in, parse_poly(r, "z*x3")) == parse_poly(r, "x1*x3*x7"));
  CHECK(apply_phi(in, parse_poly(r, "x4*z*x3 + x2*x4*x6")) == parse_poly(r, "x1*x3*x4*x7"));
  CHECK_THROWS(apply_phi(in, parse_poly(r, "x1")));
}

TEST_CASE("specialized unprojection ideals are the next Stanley-Reisner ideals") {
  for (int d = 2; d <= 7; ++d)
    for (int m = d + 1; m <= 10; ++m) {
      const auto in = phi_images(d, m);
      CHECK_MESSAGE(check_unprojection_input(in).empty(), "d=" << d << " m=" << m);
      CHECK_MESSAGE(specialized_unprojection_ideal(in) == ideal_I(d, m + 1), "d=" << d << " m=" << m);
    }
}

TEST_CASE("the literal odd simplex J does not specialize to the next ideal") {
  for (int d = 3; d <= 7; d += 2) {
    const int m = d + 1;
    UnprojectionInput in = phi_images(d, m);
    const Ring& r = in.ring;
    Monomial even_part, odd_part;
    for (int v = 2; v <= d + 1; v += 2) even_part = even_part * Monomial::variable(r->require("x" + std::to_string(v)));
    for (int v = 3; v <= d; v += 2) odd_part = odd_part * Monomial::variable(r->require("x" + std::to_string(v)));
    const Poly z12 = parse_poly(r, "z1*z2");
    in.j_gens = {Poly::monomial(r, even_part), z12 * Poly::monomial(r, odd_part)};
    in.phi_images = {Poly(r), parse_poly(r, "x1*x" + std::to_string(m - 1) + "*x" + std::to_string(m)) *
                                  Poly::monomial(r, odd_part)};
    bool reproduces = false;
    try {
      reproduces = specialized_unprojection_ideal(in) == ideal_I(d, m + 1);
    } catch (const std::exception&) {
    }
    CHECK(!reproduces);
  }
}

TEST_CASE("colon ideal after shifting is the ideal two steps down") {
  for (int d = 4; d <= 6; d += 2)
    for (int m = d + 1; m <= 10; ++m) CHECK(shift_down(colon_star(d, m), m) == ideal_I(d - 2, m - 2));
}

TEST_CASE("relabeling the smaller ideal gives J") {
  for (int d = 4; d <= 6; d += 2)
    for (int m = d + 1; m <= 10; ++m) CHECK(j_by_relabeling(d, m) == ideal_J(d, m));
}

TEST_CASE("monomial ideal operations") {
  const Ring r = vertex_ring(4);
  const MonomialIdeal I(r, {Monomial::variable(0) * Monomial::variable(1), Monomial::variable(0),
                            Monomial::variable(2) * Monomial::variable(3)});
  CHECK(I.size() == 2);
  CHECK(I.to_string() == "(x3*x4, x1)");
  CHECK(I.contains(Monomial::variable(0) * Monomial::variable(3)));
  CHECK(!I.contains(Monomial::variable(2)));
  CHECK(I.colon(Monomial::variable(2)).to_string() == "(x1, x4)");
  CHECK(I.is_squarefree());
}

TEST_CASE("case classification") {
  CHECK(classify(4, 5).tag == CaseTag::even_simplex);
  CHECK(classify(2, 7).tag == CaseTag::even_d2);
  CHECK(classify(4, 8).tag == CaseTag::even_general);
  CHECK(classify(3, 4).tag == CaseTag::odd_simplex);
  CHECK(classify(3, 8).tag == CaseTag::odd_d3);
  CHECK(classify(5, 8).tag == CaseTag::odd_general);
  CHECK_THROWS(classify(1, 4));
  CHECK_THROWS(classify(4, 4));
  CHECK_THROWS(classify(6, 30));
}
