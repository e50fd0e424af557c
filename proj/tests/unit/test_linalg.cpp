#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfreg/poly.hpp"
#include "hopfreg/subspace.hpp"

using namespace hopfreg;

namespace {

std::mt19937_64 rng(20240811);

std::vector<std::int64_t> random_gf_vec(const PrimeField& f, Index n) {
  std::uniform_int_distribution<std::int64_t> d(0, f.p - 1);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

Matrix<PrimeField> random_gf_matrix(const PrimeField& f, Index r, Index c) {
  Matrix<PrimeField> m(f, r, c);
  std::uniform_int_distribution<std::int64_t> d(0, f.p - 1);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.neg(0) == 0);
  CHECK(f.from_int(-1) == 6);
  CHECK_THROWS_AS(PrimeField(6), UsageError);
  CHECK_THROWS_AS(f.inv(0), UsageError);
  for (std::int64_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.parse("6") == 6);
  CHECK_THROWS_AS(f.parse("7"), ValidationError);
  CHECK_THROWS_AS(f.parse("-1"), ValidationError);
}

TEST_CASE("rational field arithmetic") {
  RationalField f;
  auto x = f.parse("2/3");
  auto y = f.parse("-1/6");
  CHECK(f.to_string(f.add(x, y)) == "1/2");
  CHECK(f.to_string(f.mul(x, f.inv(x))) == "1");
  CHECK(f.to_string(f.parse("4/6")) == "2/3");
  CHECK_THROWS_AS(f.parse("1/0"), ValidationError);
  CHECK_THROWS_AS(f.parse("a"), ValidationError);
}

TEST_CASE("solve: identity, zero, and GF(3) kernel") {
  PrimeField f3(3);
  auto id = Matrix<PrimeField>::identity(f3, 3);
  auto sol = solve(id, vec_unit(f3, 3, 0));
  REQUIRE(sol);
  CHECK(sol->particular == vec_unit(f3, 3, 0));
  CHECK(sol->nullspace.is_zero());

  Matrix<PrimeField> zero(f3, 2, 2);
  auto sol0 = solve(zero, vec_zero(f3, 2));
  REQUIRE(sol0);
  CHECK(sol0->nullspace.dim() == 2);
  CHECK_FALSE(zero.solve_particular({1, 0}));

  // [[1,1],[2,2]] over GF(3): kernel spanned by (1,2)
  Matrix<PrimeField> m(f3, 2, 2);
  m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(1, 0) = 2; m.at(1, 1) = 2;
  auto s = solve(m, vec_zero(f3, 2));
  REQUIRE(s);
  REQUIRE(s->nullspace.dim() == 1);
  CHECK(s->nullspace.basis()[0] == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("random consistent systems solve exactly") {
  PrimeField f5(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto m = random_gf_matrix(f5, 4, 6);
    auto x0 = random_gf_vec(f5, 6);
    auto b = m.apply(x0);
    auto s = solve(m, b);
    REQUIRE(s);
    CHECK(m.apply(s->particular) == b);
    for (const auto& v : s->nullspace.basis()) CHECK(vec_is_zero(f5, m.apply(v)));
    // kernel dimension matches rank-nullity
    CHECK(s->nullspace.dim() == 6 - m.rank());
  }
}

TEST_CASE("subspace operations") {
  PrimeField f2(2);
  using S = Subspace<PrimeField>;
  // GF(2)^3: span{e1+e2} meets span{e2+e3} trivially
  auto u = S::span(f2, 3, {{1, 1, 0}});
  auto v = S::span(f2, 3, {{0, 1, 1}});
  CHECK(u.intersect(v).is_zero());
  CHECK(u.sum(S::zero(f2, 3)) == u);
  CHECK(u.intersect(u) == u);
  CHECK(u.contains(std::vector<std::int64_t>{1, 1, 0}));
  CHECK_FALSE(u.contains(std::vector<std::int64_t>{1, 0, 0}));

  // canonicalisation is idempotent: re-spanning the basis changes nothing
  auto w = S::span(f2, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(S::span(f2, 3, w.basis()) == w);
}

TEST_CASE("dim(U+V) + dim(U cap V) = dim U + dim V") {
  PrimeField f3(3);
  using S = Subspace<PrimeField>;
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<Index> nd(0, 3);
    Index du = nd(rng), dv = nd(rng);
    std::vector<std::vector<std::int64_t>> ub, vb;
    for (Index i = 0; i < du; ++i) ub.push_back(random_gf_vec(f3, 5));
    for (Index i = 0; i < dv; ++i) vb.push_back(random_gf_vec(f3, 5));
    auto u = S::span(f3, 5, ub), v = S::span(f3, 5, vb);
    CHECK(u.sum(v).dim() + u.intersect(v).dim() == u.dim() + v.dim());
  }
}

TEST_CASE("subspace over the rationals") {
  RationalField q;
  using S = Subspace<RationalField>;
  using R = RationalField::Elem;
  auto u = S::span(q, 2, {{R(1, 2), R(1, 3)}});
  CHECK(u.dim() == 1);
  CHECK(u.basis()[0] == std::vector<R>{R(1), R(2, 3)});  // canonical leading 1
  CHECK(u.contains(std::vector<R>{R(3), R(2)}));
}

TEST_CASE("quotient space coordinates") {
  PrimeField f3(3);
  auto w = Subspace<PrimeField>::span(f3, 4, {{1, 0, 2, 1}, {0, 1, 1, 1}});
  QuotientSpace<PrimeField> q(f3, w);
  REQUIRE(q.dim() == 2);
  for (int trial = 0; trial < 20; ++trial) {
    auto v = random_gf_vec(f3, 4);
    auto proj = q.project(v);
    // section reproduces the class: v - section(project(v)) lies in w
    CHECK(w.contains(vec_sub(f3, v, q.section(proj))));
    CHECK(q.project(q.section(proj)) == proj);
  }
}

TEST_CASE("characteristic polynomial (Berkowitz)") {
  PrimeField f7(7);
  auto id = Matrix<PrimeField>::identity(f7, 3);
  auto p = char_poly(id);  // (x-1)^3 = x^3 - 3x^2 + 3x - 1
  CHECK(p.c == std::vector<std::int64_t>{6, 3, 4, 1});

  // companion matrix of x^2 + 3x + 5 over GF(7)
  Matrix<PrimeField> c(f7, 2, 2);
  c.at(0, 1) = f7.from_int(-5);
  c.at(1, 0) = 1;
  c.at(1, 1) = f7.from_int(-3);
  auto pc = char_poly(c);
  CHECK(pc.c == std::vector<std::int64_t>{5, 3, 1});

  // trace and determinant read off the coefficients
  auto m = random_gf_matrix(f7, 4, 4);
  auto pm = char_poly(m);
  CHECK(char_poly_coefficient(m, 1) == m.trace());
  // det via rank-1 update free fallback: compare sign-adjusted constant term
  // with a direct cofactor expansion on a small matrix
  Matrix<PrimeField> s(f7, 2, 2);
  s.at(0, 0) = 2; s.at(0, 1) = 3; s.at(1, 0) = 4; s.at(1, 1) = 5;
  auto det = f7.sub(f7.mul(2, 5), f7.mul(3, 4));
  CHECK(char_poly_coefficient(s, 2) == det);
  (void)pm;
}

TEST_CASE("characteristic polynomial over the rationals") {
  RationalField q;
  using R = RationalField::Elem;
  Matrix<RationalField> m(q, 2, 2);
  m.at(0, 0) = R(1, 2);
  m.at(1, 1) = R(1, 3);
  auto p = char_poly(m);  // (x - 1/2)(x - 1/3) = x^2 - 5/6 x + 1/6
  REQUIRE(p.degree() == 2);
  CHECK(p.c[0] == R(1, 6));
  CHECK(p.c[1] == R(-5, 6));
  CHECK(p.c[2] == R(1));
}

TEST_CASE("minimal polynomial") {
  PrimeField f2(2);
  // nilpotent Jordan block: min poly x^2
  Matrix<PrimeField> n(f2, 2, 2);
  n.at(0, 1) = 1;
  auto mp = minimal_polynomial(n);
  CHECK(mp.c == std::vector<std::int64_t>{0, 0, 1});
  auto mi = minimal_polynomial(Matrix<PrimeField>::identity(f2, 3));
  CHECK(mi.c == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("squarefree part and roots") {
  PrimeField f3(3);
  // (x-1)^2 (x-2) over GF(3)
  Poly<PrimeField> a{f3, {1, 1, 1}};   // x^2+x+1 = (x-1)^2
  Poly<PrimeField> b{f3, {1, 2, 0, 1}};
  auto sq = squarefree_part(a);
  CHECK(sq.c == std::vector<std::int64_t>{2, 1});  // x - 1 = x + 2
  auto roots = prime_field_roots(Poly<PrimeField>{f3, {2, 0, 1}});  // x^2 + 2 = x^2 - 1
  CHECK(roots == std::vector<std::int64_t>{1, 2});
  // x^3 - x over GF(3) is squarefree with all three roots
  Poly<PrimeField> cube{f3, {0, 2, 0, 1}};
  CHECK(squarefree_part(cube) == cube.monic());
  CHECK(prime_field_roots(cube).size() == 3);
  (void)b;

  RationalField q;
  using R = RationalField::Elem;
  // (x - 1/2)(x + 2) x
  Poly<RationalField> pq{q, {R(0), R(-1), R(3, 2), R(1)}};
  auto rr = rational_roots(pq);
  REQUIRE(rr.size() == 3);
  bool has_half = false, has_m2 = false, has_zero = false;
  for (const auto& r : rr) {
    has_half |= (r == R(1, 2));
    has_m2 |= (r == R(-2));
    has_zero |= (r == R(0));
  }
  CHECK((has_half && has_m2 && has_zero));
}

TEST_CASE("p-th power parts of polynomials reduce") {
  PrimeField f2(2);
  // (x^2 + x)^2 = x^4 + x^2 over GF(2); squarefree part x^2 + x
  Poly<PrimeField> p{f2, {0, 0, 1, 0, 1}};
  auto s = squarefree_part(p);
  CHECK(s.c == std::vector<std::int64_t>{0, 1, 1});
}
