#include <doctest.h>

#include <random>

#include "cyclres/linalg.hpp"
#include "support.hpp"

using namespace cyclres;

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(7);
  CHECK(f.add(f.from_int(5), f.from_int(4)) == f.from_int(2));
  CHECK(f.mul(f.from_int(3), f.inv(f.from_int(3))) == f.one());
  CHECK(f.from_int(-1) == f.from_int(6));
  CHECK(f.to_string(f.from_int(6)) == "-1");
  CHECK(f.from_fraction(1, 2) == f.from_int(4));
  CHECK_THROWS(f.inv(f.zero()));
  CHECK_THROWS_AS(Field::prime(8), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays reduced and refuses overflow") {
  const Field q = Field::rationals();
  const Scalar half = q.from_fraction(2, 4);
  CHECK(half == Scalar{1, 2});
  CHECK(q.add(half, q.from_fraction(1, 3)) == Scalar{5, 6});
  CHECK(q.to_string(q.from_fraction(-3, 6)) == "-1/2");
  const Scalar big = q.from_int(INT64_C(1) << 62);
  CHECK_THROWS_AS(q.mul(big, big), std::overflow_error);
  CHECK(q.reduce_mod(half, 7) == 4u);
  CHECK_THROWS_AS(q.reduce_mod(q.from_fraction(1, 7), 7), std::domain_error);
}

TEST_CASE("field specs parse and print") {
  CHECK(Field::parse("q") == Field::rationals());
  CHECK(Field::parse("prime:101") == Field::prime(101));
  CHECK(Field::parse("prime:101").spec() == "prime:101");
  CHECK(Field::rationals().spec() == "q");
  CHECK_THROWS(Field::parse("prime:100"));
  CHECK_THROWS(Field::parse("reals"));
}

TEST_CASE("ring contexts validate variables") {
  CHECK_THROWS(make_ring(std::vector<std::string>{"x", "x"}));
  CHECK_THROWS(make_ring(std::vector<Variable>{{"x", 0}}));
  std::vector<std::string> many;
  for (int i = 0; i < 33; ++i) many.push_back("v" + std::to_string(i));
  CHECK_THROWS(make_ring(many));
  const Ring r = make_ring(std::vector<Variable>{{"x", 1}, {"T", 2}});
  CHECK(r->degree(Monomial::variable(1, 2)) == 4);
  CHECK(graded_piece_basis(*r, 4).size() == 3);
}

TEST_CASE("graded pieces have binomial size") {
  const Ring r = vertex_ring(5);
  for (int d = 0; d <= 6; ++d)
    CHECK(graded_piece_basis(*r, d).size() == static_cast<std::size_t>(oracle::choose(d + 4, 4)));
  CHECK(graded_piece_basis(*r, -1).empty());
}

TEST_CASE("polynomials print in graded-lex order and parse back") {
  const Ring r = make_ring(std::vector<std::string>{"x1", "x2", "x3", "z"});
  const Poly p = parse_poly(r, "-2*x2*z + x1*x3^2 + 3");
  CHECK(p.to_string() == "x1*x3^2 - 2*x2*z + 3");
  CHECK(parse_poly(r, p.to_string()) == p);
  CHECK(parse_poly(r, " x1 * x2 - x1*x2 ").is_zero());
  CHECK(parse_poly(r, "0").to_string() == "0");
  CHECK_THROWS(parse_poly(r, "x4"));
  CHECK_THROWS(parse_poly(r, "x1 +"));
  const Ring q = make_ring(std::vector<std::string>{"x"}, Field::rationals());
  CHECK(parse_poly(q, "1/2*x - 3/4").to_string() == "1/2*x - 3/4");
}

TEST_CASE("polynomial arithmetic") {
  const Ring r = vertex_ring(3);
  const Poly x = Poly::variable(r, "x1"), y = Poly::variable(r, "x2");
  const Poly s = x + y, d = x - y;
  CHECK(s * d == x * x - y * y);
  CHECK((s * s).is_homogeneous());
  CHECK(!(s + Poly::constant(r, 1)).is_homogeneous());
  CHECK((s * s).degree() == 2);
  CHECK(!Poly(r).degree().has_value());
  CHECK((s - s).is_zero());
}

TEST_CASE("substitution is a ring map and demands every image") {
  const Ring src = vertex_ring(3);
  const Ring dst = make_ring(std::vector<std::string>{"a", "b"});
  Assignment img{{"x1", parse_poly(dst, "a + b")}, {"x2", parse_poly(dst, "a*b")}, {"x3", Poly(dst)}};
  const Poly p = parse_poly(src, "x1^2 - x2 + x3*x1");
  CHECK(substitute(p, img, dst) == parse_poly(dst, "a^2 + a*b + b^2"));
  img.erase("x3");
  CHECK_THROWS(substitute(p, img, dst));
  CHECK(substitute(parse_poly(src, "x1 - x2"), img, dst) == parse_poly(dst, "a + b - a*b"));
}

TEST_CASE("matrices: products, transposes and homogeneity") {
  const Ring r = vertex_ring(3);
  const PolyMatrix row = PolyMatrix::row_vector(r, {parse_poly(r, "x1*x2"), parse_poly(r, "x3")});
  CHECK(row.cols().twists() == std::vector<int>{2, 1});
  CHECK(row.is_homogeneous());
  const PolyMatrix t = row.transpose();
  CHECK(t.rows().twists() == std::vector<int>{-2, -1});
  CHECK(t.is_homogeneous());
  const PolyMatrix col = fixture::dense(r, GradedFreeModule({2, 1}), GradedFreeModule({3}), {{"x3"}, {"-x1*x2"}});
  CHECK((row * col).is_zero());
  CHECK_THROWS(col * col);
  CHECK(!row.has_unit_entry());
  PolyMatrix bad = row;
  bad.set(0, 1, parse_poly(r, "x1 + 1"));
  CHECK(bad.has_unit_entry());
  CHECK(!bad.is_homogeneous());
}

TEST_CASE("block builder checks block shapes") {
  const Ring r = vertex_ring(2);
  BlockBuilder bb(r, {GradedFreeModule::free(1), GradedFreeModule::free(2)}, {GradedFreeModule::free(1)});
  bb.place(1, 0, fixture::dense(r, GradedFreeModule::free(2), GradedFreeModule::free(1), {{"x1"}, {"x2"}}));
  CHECK(bb.matrix().at(2, 0) == Poly::variable(r, "x2"));
  CHECK_THROWS(bb.place(0, 0, PolyMatrix(r, GradedFreeModule::free(2), GradedFreeModule::free(1))));
}

TEST_CASE("sparse echelon solves and detects inconsistency") {
  const Field f = Field::prime(101);
  SparseEchelon e(f);
  CHECK(e.add({{0, f.one()}, {1, f.one()}}, f.from_int(3)));
  CHECK(e.add({{1, f.one()}}, f.from_int(1)));
  const auto x = e.solve(3);
  CHECK(x[0] == f.from_int(2));
  CHECK(x[1] == f.from_int(1));
  CHECK(x[2] == f.zero());
  CHECK(!e.add({{0, f.one()}}, f.from_int(5)));
  CHECK(!e.consistent());
}

TEST_CASE("sparse and dense ranks agree on random matrices") {
  std::mt19937_64 rng(7);
  const std::uint32_t p = 101;
  const Field f = Field::prime(p);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    std::vector<std::uint32_t> dense(rows * cols, 0);
    std::vector<SparseVec> sparse(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rng() % 3 == 0) {
          const auto v = static_cast<std::uint32_t>(rng() % p);
          dense[i * cols + j] = v;
          if (v) sparse[i].emplace_back(static_cast<std::uint32_t>(j), f.from_int(v));
        }
    CHECK(sparse_rank(f, sparse) == dense_rank_mod_p(dense, rows, cols, p));
  }
}

TEST_CASE("lifting: solutions satisfy the system and both strategies agree") {
  const Ring r = vertex_ring(3);
  const PolyMatrix a = PolyMatrix::row_vector(r, {parse_poly(r, "x1"), parse_poly(r, "x2"), parse_poly(r, "x3")});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Poly target(r);
    for (const auto& mono : graded_piece_basis(*r, 3))
      if (rng() % 2) target += Poly::term(r, mono, r->field().from_int(static_cast<std::int64_t>(rng() % 50) + 1));
    if (target.is_zero()) continue;
    PolyMatrix y(r, GradedFreeModule::free(1), GradedFreeModule::free(1, 3));
    y.set(0, 0, target);
    const auto x1 = lift_solve(a, y, {3}, LiftStrategy::reachable);
    const auto x2 = lift_solve(a, y, {3}, LiftStrategy::exhaustive);
    REQUIRE(x1);
    REQUIRE(x2);
    CHECK(a * *x1 == y);
    CHECK(*x1 == *x2);
  }
  PolyMatrix y(r, GradedFreeModule::free(1), GradedFreeModule::free(1, 0));
  y.set(0, 0, Poly::constant(r, 1));
  CHECK(!lift_solve(a, y, {0}).has_value());
}

TEST_CASE("generic rank of a Koszul differential") {
  const Ring r = vertex_ring(4);
  std::vector<Poly> xs;
  for (int i = 1; i <= 4; ++i) xs.push_back(Poly::variable(r, "x" + std::to_string(i)));
  const auto k = koszul_complex(r, xs);
  CHECK(rank_at_random_point(k.differential(2), 3) == 3);
  CHECK(rank_at_random_point(k.differential(1), 3) == 1);
}
