#include <doctest.h>

#include "support.hpp"

using namespace cyclres;

namespace {

ChainComplex specialize_step(int d, int m, const KMData& data) {
  const auto in = phi_images(d, m);
  const Ring with_t = unprojection_ring(in);
  const ChainComplex km = assemble_km(data, with_t);
  const Ring target = vertex_ring(m + 1);
  return specialize_complex(km, specialization_map(in.kase, with_t, target), target);
}

bool resolves(const ChainComplex& c, int d, int m) {
  VerifyOptions o;
  o.checks.exact_bound = m + 1;
  const auto rep = verify_complex(c, ideal_I(d, m), o);
  return rep.all_ok() && rep.presents_ideal;
}

ChainComplex koszul_on(const Ring& ring, const std::vector<Monomial>& gens) {
  std::vector<Poly> el;
  for (const auto& g : gens) el.push_back(Poly::monomial(ring, g));
  return koszul_complex(ring, el);
}

}  // namespace

TEST_CASE("Koszul complex of J(2,5) matches the worked basis") {
  const Ring r = auxiliary_ring(2, 5);
  const auto k = fixture::koszul_j25(r);
  REQUIRE(k.ranks() == std::vector<std::size_t>{1, 4, 6, 4, 1});
  CHECK(k.differential(1) == fixture::dense(r, k.module(0), k.module(1), {{"z", "x3", "x4", "x2"}}));
  CHECK(k.differential(2) == fixture::dense(r, k.module(1), k.module(2),
                                            {{"x3", "x4", "x2", "0", "0", "0"},
                                             {"-z", "0", "0", "0", "x2", "-x4"},
                                             {"0", "-z", "0", "-x2", "0", "x3"},
                                             {"0", "0", "-z", "x4", "-x3", "0"}}));
  CHECK(k.differential(3) == fixture::dense(r, k.module(2), k.module(3),
                                            {{"0", "x2", "-x4", "0"},
                                             {"-x2", "0", "x3", "0"},
                                             {"x4", "-x3", "0", "0"},
                                             {"z", "0", "0", "x3"},
                                             {"0", "z", "0", "x4"},
                                             {"0", "0", "z", "x2"}}));
  CHECK(k.differential(4) == fixture::dense(r, k.module(3), k.module(4), {{"x3"}, {"x4"}, {"x2"}, {"-z"}}));
}

TEST_CASE("Koszul complexes are exact, minimal and self-dual") {
  const Ring r = vertex_ring(5);
  for (int n = 1; n <= 5; ++n) {
    std::vector<Poly> el;
    for (int i = 1; i <= n; ++i) el.push_back(Poly::variable(r, "x" + std::to_string(i)) * Poly::variable(r, "x" + std::to_string(i)));
    const auto k = koszul_complex(r, el);
    CHECK(k.is_complex());
    CHECK(k.is_minimal());
    for (int i = 0; i <= n; ++i) {
      auto a = k.module(i).twists(), b = k.module(n - i).twists();
      for (auto& t : b) t = 2 * n - t;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
    }
    std::vector<Monomial> gens;
    for (int i = 0; i < n; ++i) gens.push_back(Monomial::variable(static_cast<std::size_t>(i), 2));
    VerifyOptions o;
    o.checks = CheckSet::parse("d2,minimal,rank,exact:6");
    CHECK(verify_complex(k, MonomialIdeal(r, gens), o).all_ok());
  }
}

TEST_CASE("Pfaffian complexes resolve the first codimension-three ideals") {
  for (int d = 2; d <= 6; d += 2) {
    const Ring r = vertex_ring(d + 3);
    const auto c = pfaffian_complex(d, r);
    CHECK(c.ranks() == std::vector<std::size_t>{1, static_cast<std::size_t>(d + 3), static_cast<std::size_t>(d + 3), 1});
    CHECK(resolves(c, d, d + 3));
    const PolyMatrix m = cyclic_skew_matrix(d, r);
    CHECK(m + m.transpose().with_modules(m.rows(), m.cols()) == PolyMatrix(r, m.rows(), m.cols()));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(d + 3); ++i) {
      const Poly sign = Poly::constant(r, i % 2 == 1 ? 1 : -1);
      CHECK(c.differential(1).at(0, i - 1) == sign * pfaffian(m, i));
    }
  }
}

TEST_CASE("pfaffian of a 3x3 skew matrix") {
  const Ring r = vertex_ring(3);
  const auto m = fixture::dense(r, GradedFreeModule::free(3), GradedFreeModule::free(3),
                                {{"0", "x1", "x2"}, {"-x1", "0", "x3"}, {"-x2", "-x3", "0"}});
  CHECK(pfaffian(m, 1) == Poly::variable(r, "x3"));
  CHECK(pfaffian(m, 2) == Poly::variable(r, "x2"));
  CHECK(pfaffian(m, 3) == Poly::variable(r, "x1"));
}

TEST_CASE("worked step data satisfy the chain-map and homotopy identities") {
  for (const auto& s : {fixture::step_2_5(), fixture::step_4_7()}) {
    CHECK(check_chain_map(s.data.alpha, s.c_i, s.c_j).empty());
    CHECK(check_chain_map(s.data.beta, s.c_j, s.c_i).empty());
    CHECK(check_homotopy(s.c_i, s.data.alpha, s.data.beta, s.data.h).empty());
  }
}

TEST_CASE("computed chain maps reproduce the worked data") {
  const auto s1 = fixture::step_2_5();
  const auto s2 = fixture::step_4_7();
  const std::pair<const fixture::Step*, std::pair<int, int>> steps[] = {{&s1, {2, 5}}, {&s2, {4, 7}}};
  for (const auto& [s, dm] : steps) {
    const auto data = km_data(phi_images(dm.first, dm.second), s->c_i, s->c_j);
    CHECK(data.u == s->ring->field().from_int(-1));
    for (std::size_t i = 0; i < data.alpha.maps.size(); ++i) CHECK(data.alpha.maps[i] == s->data.alpha.maps[i]);
    for (std::size_t i = 0; i < data.beta.maps.size(); ++i) CHECK(data.beta.maps[i] == s->data.beta.maps[i]);
    for (const auto& h : data.h.maps) CHECK(h.is_zero());
  }
}

TEST_CASE("worked steps specialize to minimal resolutions") {
  const ChainComplex c26 = specialize_step(2, 5, fixture::step_2_5().data);
  CHECK(resolves(c26, 2, 6));
  CHECK(betti_of_complex(c26).totals() == std::vector<std::int64_t>{1, 9, 16, 9, 1});
  const ChainComplex c48 = specialize_step(4, 7, fixture::step_4_7().data);
  CHECK(resolves(c48, 4, 8));
  CHECK(betti_of_complex(c48).totals() == std::vector<std::int64_t>{1, 16, 30, 16, 1});
}

TEST_CASE("assembled ranks follow the block rule") {
  const auto s = fixture::step_4_7();
  const Ring with_t = unprojection_ring(phi_images(4, 7));
  const auto km = assemble_km(s.data, with_t);
  const int g = s.c_j.length();
  for (int i = 0; i <= g; ++i) {
    const std::size_t b = i <= g - 2 ? s.c_i.module(i).rank() : 0;
    const std::size_t a = (i >= 1 && i <= g - 1) ? s.c_j.module(i).rank() : 0;
    const std::size_t b1 = (i >= 2 && i <= g) ? s.c_i.module(i - 1).rank() : 0;
    CHECK(km.module(i).rank() == b + a + b1);
  }
}

TEST_CASE("length-two steps out of the simplex") {
  for (int d = 2; d <= 7; ++d) {
    const int m = d + 1;
    const auto in = phi_images(d, m);
    Resolver r;
    const ChainComplex c_i = r.resolve(d, m).change_ring(in.ring);
    const ChainComplex c_j = koszul_on(in.ring, ideal_J_generators(d, m, in.ring));
    REQUIRE(c_j.length() == 2);
    const auto data = km_data(in, c_i, c_j);
    const ChainComplex c = specialize_step(d, m, data);
    CHECK_MESSAGE(resolves(c, d, m + 1), "d=" << d);
    CHECK(betti_of_complex(c) == betti_formula(d, m + 1));
  }
}

TEST_CASE("length-three steps agree with the Pfaffian base case") {
  for (int d = 2; d <= 6; d += 2) {
    const int m = d + 2;
    const auto in = phi_images(d, m);
    Resolver r;
    const ChainComplex c_i = r.resolve(d, m).change_ring(in.ring);
    const ChainComplex c_j = r.j_resolution(d, m, in.ring);
    REQUIRE(c_j.length() == 3);
    const ChainComplex c = specialize_step(d, m, km_data(in, c_i, c_j));
    CHECK_MESSAGE(resolves(c, d, m + 1), "d=" << d);
    CHECK(betti_of_complex(c) == betti_of_complex(r.resolve(d, m + 1)));
  }
}

TEST_CASE("chain complex construction rejects bad shapes") {
  const Ring r = vertex_ring(2);
  const PolyMatrix f1 = PolyMatrix::row_vector(r, {Poly::variable(r, "x1")});
  const PolyMatrix wrong(r, GradedFreeModule::free(2), GradedFreeModule::free(1));
  CHECK_THROWS(ChainComplex(r, {f1, wrong}));
  const PolyMatrix f2 = fixture::dense(r, f1.cols(), GradedFreeModule({2}), {{"x2"}});
  const ChainComplex bad(r, {f1, f2});
  CHECK(!bad.is_complex());
  CHECK(bad.first_nonzero_composite() == 1);
  CHECK_THROWS_AS(bad.require_complex("test"), std::logic_error);
}

TEST_CASE("specialization rejects degree-incompatible substitutions") {
  const Ring r = vertex_ring(2);
  const ChainComplex k = koszul_complex(r, {Poly::variable(r, "x1"), Poly::variable(r, "x2")});
  Assignment img{{"x1", parse_poly(r, "x1*x2")}, {"x2", parse_poly(r, "x2")}};
  const ChainComplex s = specialize_complex(k, img, r);
  CHECK(s.module(1).twists() == std::vector<int>{2, 1});
  CHECK(s.module(2).twists() == std::vector<int>{3});
  Assignment bad{{"x1", parse_poly(r, "x1 + x2^2")}, {"x2", parse_poly(r, "x2")}};
  CHECK_THROWS(specialize_complex(k, bad, r));
}
