#include <doctest.h>

#include <cstdlib>

#include "support.hpp"

using namespace cyclres;

namespace {

std::set<std::tuple<int, int, std::int64_t>> as_set(const BettiTable& b) {
  std::set<std::tuple<int, int, std::int64_t>> out;
  for (const auto& [key, v] : b.entries) out.insert({key.first, key.second, v});
  return out;
}

}  // namespace

TEST_CASE("eta values and conventions") {
  CHECK(eta(3, 7, 1) == 6);
  CHECK(eta(5, 9, 2) == 15);
  CHECK(eta(5, 8, 2) == 3);
  CHECK(eta(5, 8, 1) == 4);
  CHECK(eta(3, 7, 2) == 8);
  CHECK(eta(3, 7, 0) == 0);
  CHECK(eta(3, 7, 4) == 0);
  CHECK_THROWS(eta(4, 9, 1));
  CHECK_THROWS(eta(3, 4, 0));
  CHECK_THROWS(eta(3, 7, 5));
  CHECK_THROWS(eta(3, 7, -1));
}

TEST_CASE("eta satisfies the Pascal recursion") {
  for (int d = 3; d <= 9; d += 2)
    for (int m = d + 2; m <= 14; ++m)
      for (int i = 1; i <= m - d; ++i)
        CHECK(eta(d, m + 1, i) == eta(d, m, i) + eta(d, m, i - 1) + eta(d - 2, m - 1, i));
}

TEST_CASE("closed-form Betti tables") {
  CHECK(as_set(betti_formula(4, 7)) == std::set<std::tuple<int, int, std::int64_t>>{{0, 0, 1}, {1, 3, 7}, {2, 4, 7}, {3, 7, 1}});
  CHECK(as_set(betti_formula(4, 8)) ==
        std::set<std::tuple<int, int, std::int64_t>>{{0, 0, 1}, {1, 3, 16}, {2, 4, 30}, {3, 5, 16}, {4, 8, 1}});
  CHECK(as_set(betti_formula(3, 7)) ==
        std::set<std::tuple<int, int, std::int64_t>>{
            {0, 0, 1}, {1, 2, 6}, {1, 3, 3}, {2, 3, 8}, {2, 4, 8}, {3, 4, 3}, {3, 5, 6}, {4, 7, 1}});
  CHECK(as_set(betti_formula(4, 6)) == std::set<std::tuple<int, int, std::int64_t>>{{0, 0, 1}, {1, 3, 2}, {2, 6, 1}});
  CHECK(as_set(betti_formula(3, 5)) ==
        std::set<std::tuple<int, int, std::int64_t>>{{0, 0, 1}, {1, 2, 1}, {1, 3, 1}, {2, 5, 1}});
  CHECK_THROWS(betti_formula(4, 5));
  for (int d = 2; d <= 8; ++d)
    for (int m = d + 3; m <= 14; ++m) CHECK(as_set(betti_formula(d, m)) == oracle::betti(d, m));
}

TEST_CASE("closed-form tables are Gorenstein symmetric") {
  for (int d = 2; d <= 8; ++d)
    for (int m = d + 1; m <= 14; ++m) CHECK(expected_betti(d, m).is_symmetric(m));
}

TEST_CASE("Betti table text layout") {
  const std::string want =
      "       0  1  2  3 4\n"
      "total: 1 16 30 16 1\n"
      "    0: 1  .  .  . .\n"
      "    1: .  .  .  . .\n"
      "    2: . 16 30 16 .\n"
      "    3: .  .  .  . .\n"
      "    4: .  .  .  . 1\n";
  CHECK(betti_formula(4, 8).to_string() == want);
}

TEST_CASE("resolutions pass the verification ensemble") {
  Resolver r;
  for (int d = 2; d <= 5; ++d)
    for (int m = d + 1; m <= 9; ++m) {
      const ChainComplex& c = r.resolve(d, m);
      VerifyOptions o;
      if (m <= 8) o.checks.exact_bound = m + 1;
      const auto rep = verify_complex(c, ideal_I(d, m), o);
      CHECK_MESSAGE(rep.all_ok(), "d=" << d << " m=" << m);
      CHECK(rep.presents_ideal);
      CHECK(betti_of_complex(c).is_symmetric(m));
    }
}

TEST_CASE("odd resolutions by substitution match the direct ones") {
  Resolver r;
  for (int d = 3; d <= 5; d += 2)
    for (int m = d + 2; m <= 9; ++m) {
      const ChainComplex sub = r.odd_by_substitution(d, m);
      CHECK(betti_of_complex(sub) == betti_of_complex(r.resolve(d, m)));
      CHECK(betti_of_complex(sub).totals() == betti_of_complex(r.resolve(d - 1, m - 1)).totals());
      const auto rep = verify_complex(sub, ideal_I(d, m));
      CHECK(rep.all_ok());
      CHECK(rep.presents_ideal);
    }
}

TEST_CASE("renaming variables keeps total Betti numbers") {
  Resolver r;
  const ChainComplex& c = r.resolve(4, 8);
  const Ring target = make_ring(std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g", "h"});
  Assignment img;
  const char* names[] = {"h", "g", "f", "e", "d", "c", "b", "a"};
  for (int i = 1; i <= 8; ++i) img["x" + std::to_string(i)] = Poly::variable(target, names[i - 1]);
  const ChainComplex renamed = specialize_complex(c, img, target);
  CHECK(betti_of_complex(renamed) == betti_of_complex(c));
}

TEST_CASE("resolutions over other fields") {
  for (const char* spec : {"q", "prime:2", "prime:3"}) {
    Resolver r(Field::parse(spec));
    const ChainComplex& c = r.resolve(4, 8);
    CHECK(betti_of_complex(c) == betti_formula(4, 8));
    VerifyOptions o;
    o.checks = CheckSet::parse("d2,minimal,betti,euler");
    CHECK(verify_complex(c, ideal_I(4, 8, c.ring()), o).all_ok());
  }
}

TEST_CASE("verification flags a corrupted entry") {
  Resolver r;
  const ChainComplex& c = r.resolve(2, 6);
  std::vector<PolyMatrix> diffs = c.differentials();
  const auto& e = diffs[1].row(0).front();
  diffs[1].set(0, e.col, e.value + Poly::constant(c.ring(), 1));
  const ChainComplex bad(c.ring(), diffs);
  const auto rep = verify_complex(bad, ideal_I(2, 6));
  CHECK(rep.minimal_ok == false);
  CHECK(rep.d2_ok == false);
  CHECK(!rep.all_ok());
}

TEST_CASE("graded exactness catches a non-resolution") {
  const Ring r = vertex_ring(3);
  const ChainComplex k = koszul_complex(r, {parse_poly(r, "x1*x2"), parse_poly(r, "x1*x3")});
  VerifyOptions o;
  o.checks = CheckSet::parse("d2,exact:4");
  const MonomialIdeal I(r, {Monomial::variable(0) * Monomial::variable(1), Monomial::variable(0) * Monomial::variable(2)});
  const auto rep = verify_complex(k, I, o);
  CHECK(rep.d2_ok == true);
  CHECK(rep.graded_exactness == false);
}

TEST_CASE("check sets parse") {
  const CheckSet s = CheckSet::parse("d2,rank,exact:9");
  CHECK(s.d2);
  CHECK(s.rank);
  CHECK(!s.minimal);
  CHECK(s.exact_bound == 9);
  CHECK_THROWS(CheckSet::parse("d3"));
  CHECK_THROWS(CheckSet::parse("exact:x"));
  CHECK_THROWS(CheckSet::parse("exact:-1"));
}

TEST_CASE("desk caps and the environment override") {
  unsetenv("CYCLRES_MAX_M");
  CHECK(desk_caps().max_m == 12);
  CHECK(desk_caps().max_d == 6);
  CHECK_THROWS(resolve_cyclic(2, 13));
  CHECK_THROWS(resolve_cyclic(7, 10));
  setenv("CYCLRES_MAX_M", "13", 1);
  CHECK(desk_caps().max_m == 13);
  CHECK(resolve_cyclic(2, 13).length() == 11);
  setenv("CYCLRES_MAX_M", "lots", 1);
  CHECK_THROWS(desk_caps());
  unsetenv("CYCLRES_MAX_M");
}

TEST_CASE("K-polynomial recursion agrees with the f-vector numerator") {
  for (int d = 2; d <= 5; ++d)
    for (int m = d + 1; m <= 8; ++m) {
      const MonomialIdeal I = ideal_I(d, m);
      auto h = hilbert_numerator(f_vector_of_ideal(I), m);
      while (!h.empty() && h.back() == 0) h.pop_back();
      CHECK(k_polynomial(I) == h);
    }
  const Ring r = vertex_ring(2);
  CHECK(k_polynomial(MonomialIdeal(r, {Monomial::variable(0, 2)})) == std::vector<std::int64_t>{1, 0, -1});
}
