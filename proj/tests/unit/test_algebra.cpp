#include <catch2/catch_amalgamated.hpp>

#include "hopfreg/examples.hpp"
#include "hopfreg/idempotents.hpp"
#include "hopfreg/radical.hpp"

using namespace hopfreg;

namespace {

using GFVec = std::vector<std::int64_t>;

/// Independent regularity oracle: every element has a witness a = a x a.
bool regular_by_witness_enumeration(const Algebra<PrimeField>& a) {
  bool ok = true;
  for_each_vector(a.field(), a.dim(), [&](const GFVec& v) {
    if (!regularity_witness(a, v)) ok = false;
  });
  return ok;
}

/// Independent radical oracle: x lies in the radical iff 1 - ax is invertible
/// for every a (finite dimensional, so left invertible = invertible).
Subspace<PrimeField> radical_by_unit_enumeration(const Algebra<PrimeField>& a) {
  const PrimeField& f = a.field();
  std::vector<GFVec> members;
  for_each_vector(f, a.dim(), [&](const GFVec& x) {
    bool in_radical = true;
    for_each_vector(f, a.dim(), [&](const GFVec& y) {
      if (!in_radical) return;
      auto u = vec_sub(f, a.unit(), a.mul(y, x));
      if (!a.left_mult(u).invertible()) in_radical = false;
    });
    if (in_radical) members.push_back(x);
  });
  auto span = Subspace<PrimeField>::span(f, a.dim(), members);
  // the member set must be exactly the subspace it spans
  std::uint64_t count = 1;
  for (Index i = 0; i < span.dim(); ++i) count *= static_cast<std::uint64_t>(f.p);
  REQUIRE(count == members.size());
  for (const auto& m : members) REQUIRE(span.contains(m));
  return span;
}

Algebra<RationalField> companion_field_algebra(const std::vector<RationalField::Elem>& monic_tail) {
  // QQ[x] / (f) for monic f given by its lower coefficients; basis 1..x^{n-1}
  RationalField q;
  Index n = monic_tail.size();
  Matrix<RationalField> comp(q, n, n);
  for (Index i = 0; i + 1 < n; ++i) comp.at(i + 1, i) = q.one();
  for (Index i = 0; i < n; ++i) comp.at(i, n - 1) = q.neg(monic_tail[i]);
  std::vector<Matrix<RationalField>> powers;
  Matrix<RationalField> power = Matrix<RationalField>::identity(q, n);
  for (Index i = 0; i < n; ++i) {
    powers.push_back(power);
    power = power * comp;
  }
  std::vector<RationalField::Elem> mult(n * n * n, q.zero());
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      auto prod = powers[i].apply(powers[j].col(0));  // x^i x^j reduced mod f
      for (Index k = 0; k < n; ++k) mult[(i * n + j) * n + k] = prod[k];
    }
  return Algebra<RationalField>::create(q, n, std::move(mult), vec_unit(q, n, 0), {}, "QQ[x]/(f)");
}

}  // namespace

TEST_CASE("constructor rejects broken structure constants") {
  PrimeField f2(2);
  std::vector<std::int64_t> mult(8, 0);
  // basis u (claimed unit), v with u u = u, v v = u but u v = v u = 0
  mult[(0 * 2 + 0) * 2 + 0] = 1;
  mult[(1 * 2 + 1) * 2 + 0] = 1;
  CHECK_THROWS_MATCHES(
      Algebra<PrimeField>::create(f2, 2, mult, {1, 0}, {"u", "v"}, "broken"), ValidationError,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("unit law")));

  PrimeField f3(3);
  std::vector<std::int64_t> m2(27, 0);
  // basis 1, a, b: a*a = b, a*b = 1, b*a = 0 -> (aa)a = 0 but a(aa) = 1
  auto ix = [](Index i, Index j, Index k) { return (i * 3 + j) * 3 + k; };
  m2[ix(0, 0, 0)] = 1; m2[ix(0, 1, 1)] = 1; m2[ix(0, 2, 2)] = 1;
  m2[ix(1, 0, 1)] = 1; m2[ix(2, 0, 2)] = 1;
  m2[ix(1, 1, 2)] = 1; m2[ix(1, 2, 0)] = 1;
  CHECK_THROWS_MATCHES(
      Algebra<PrimeField>::create(f3, 3, m2, {1, 0, 0}, {"1", "a", "b"}, "nonassoc"), ValidationError,
      Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring("associativity fails at triple (a,a,a)")));
}

TEST_CASE("multiplication basics") {
  PrimeField f3(3);
  auto kc2 = group_algebra(f3, GroupName::c2).algebra();
  auto g = kc2.basis_vec(1);
  CHECK(kc2.mul(g, g) == kc2.unit());
  CHECK(kc2.mul(kc2.unit(), g) == g);

  auto kxk = product_field_algebra(f3);
  CHECK(vec_is_zero(f3, kxk.mul(kxk.basis_vec(0), kxk.basis_vec(1))));

  AlgebraElement<PrimeField> eg(kc2, g), e1(kc2, kc2.unit());
  CHECK((eg * eg) == e1);
  auto other = product_field_algebra(f3);
  CHECK_THROWS_AS(eg * AlgebraElement<PrimeField>(other, other.unit()), UsageError);
}

TEST_CASE("opposite, tensor and enveloping algebras") {
  PrimeField f3(3);
  auto trivial = Algebra<PrimeField>::create(f3, 1, {1}, {1}, {"1"}, "k");
  CHECK(enveloping(trivial).dim() == 1);

  auto kc2 = group_algebra(f3, GroupName::c2).algebra();
  auto env = enveloping(kc2);
  CHECK(env.dim() == 4);
  // (1 (x) g)(g (x) g) = 1*g (x) g*g = g (x) 1  [second leg multiplies reversed]
  GFVec x = vec_zero(f3, 4), y = vec_zero(f3, 4);
  x[0 * 2 + 1] = 1;  // 1 (x) g
  y[1 * 2 + 1] = 1;  // g (x) g
  GFVec expect = vec_zero(f3, 4);
  expect[1 * 2 + 0] = 1;  // g (x) 1
  CHECK(env.mul(x, y) == expect);

  auto m2 = matrix_algebra(f3, 2);
  auto m2op = opposite(m2);
  // E12 E21 = E11 in M2; in the opposite algebra it is E21 E12 = E22
  CHECK(m2.mul(m2.basis_vec(1), m2.basis_vec(2)) == m2.basis_vec(0));
  CHECK(m2op.mul(m2.basis_vec(1), m2.basis_vec(2)) == m2.basis_vec(3));
}

TEST_CASE("center") {
  PrimeField f3(3);
  CHECK(center(group_algebra(f3, GroupName::c2).algebra()).dim() == 2);

  auto m2 = matrix_algebra(f3, 2);
  auto z = center(m2);
  REQUIRE(z.dim() == 1);
  CHECK(z.basis()[0] == m2.unit());

  CHECK(center(group_algebra(f3, GroupName::s3).algebra()).dim() == 3);  // class sums
}

TEST_CASE("jacobson radical on known cases") {
  PrimeField f2(2), f3(3);
  RationalField q;

  CHECK(jacobson_radical(group_algebra(f3, GroupName::c2).algebra()).is_zero());
  CHECK(jacobson_radical(product_field_algebra(f2)).is_zero());
  CHECK(jacobson_radical(matrix_algebra(f2, 2)).is_zero());
  CHECK(jacobson_radical(matrix_algebra(f3, 2)).is_zero());
  CHECK(jacobson_radical(group_algebra(q, GroupName::s3).algebra()).is_zero());

  auto rad_c2 = jacobson_radical(group_algebra(f2, GroupName::c2).algebra());
  REQUIRE(rad_c2.dim() == 1);
  CHECK(rad_c2.basis()[0] == GFVec{1, 1});  // span{1+g}

  // augmentation ideal of GF(2)[C2xC2]
  CHECK(jacobson_radical(group_algebra(f2, GroupName::c2xc2).algebra()).dim() == 3);

  // strictly upper triangular part of T_n
  CHECK(jacobson_radical(upper_triangular_algebra(f2, 2)).dim() == 1);
  CHECK(jacobson_radical(upper_triangular_algebra(f3, 3)).dim() == 3);
  CHECK(jacobson_radical(upper_triangular_algebra(q, 3)).dim() == 3);

  // GF(3)[C3]: radical is the augmentation ideal
  auto rad_c3 = jacobson_radical(group_algebra(f3, GroupName::c3).algebra());
  CHECK(rad_c3.dim() == 2);
  CHECK(rad_c3.contains(GFVec{2, 1, 0}));  // g - 1

  // radical of the quotient by the radical vanishes
  for (const Algebra<PrimeField>& a :
       {group_algebra(f2, GroupName::c2).algebra(), group_algebra(f3, GroupName::s3).algebra(),
        upper_triangular_algebra(f2, 3), group_algebra(f2, GroupName::s3).algebra()}) {
    auto rad = jacobson_radical(a);
    if (rad.is_zero()) continue;
    CHECK(subspace_is_nilpotent(a, rad));
    auto quot = quotient_algebra(a, rad, a.name() + "/J");
    CHECK(jacobson_radical(quot).is_zero());
  }
}

TEST_CASE("radical agrees with the unit-enumeration oracle") {
  PrimeField f2(2), f3(3);
  std::vector<Algebra<PrimeField>> algebras = {
      group_algebra(f2, GroupName::c2).algebra(),    group_algebra(f2, GroupName::c2xc2).algebra(),
      group_algebra(f3, GroupName::c3).algebra(),    upper_triangular_algebra(f2, 2),
      upper_triangular_algebra(f3, 2),               upper_triangular_algebra(f2, 3),
      product_field_algebra(f3),                     sweedler_h4(f3).algebra(),
      matrix_algebra(f2, 2),
  };
  for (const auto& a : algebras) {
    INFO(a.name() << " over GF(" << a.field().p << ")");
    CHECK(jacobson_radical(a) == radical_by_unit_enumeration(a));
  }
}

TEST_CASE("is_regular agrees with witness enumeration") {
  PrimeField f2(2), f3(3);
  std::vector<Algebra<PrimeField>> algebras = {
      group_algebra(f2, GroupName::c2).algebra(),    group_algebra(f2, GroupName::c3).algebra(),
      group_algebra(f2, GroupName::c2xc2).algebra(), group_algebra(f2, GroupName::s3).algebra(),
      group_algebra(f3, GroupName::c2).algebra(),    group_algebra(f3, GroupName::c3).algebra(),
      group_algebra(f3, GroupName::c2xc2).algebra(), group_algebra(f3, GroupName::s3).algebra(),
      upper_triangular_algebra(f2, 3),               matrix_algebra(f3, 2),
      sweedler_h4(f3).algebra(),                     product_field_algebra(f2),
  };
  for (const auto& a : algebras) {
    INFO(a.name() << " over GF(" << a.field().p << ")");
    CHECK(is_regular(a) == regular_by_witness_enumeration(a));
  }
}

TEST_CASE("maschke pattern for group algebras") {
  PrimeField f2(2), f3(3);
  RationalField q;
  auto regular_over = [&](auto field, GroupName g) { return is_regular(group_algebra(field, g).algebra()); };
  CHECK_FALSE(regular_over(f2, GroupName::c2));
  CHECK(regular_over(f2, GroupName::c3));
  CHECK_FALSE(regular_over(f2, GroupName::c2xc2));
  CHECK_FALSE(regular_over(f2, GroupName::s3));
  CHECK(regular_over(f3, GroupName::c2));
  CHECK_FALSE(regular_over(f3, GroupName::c3));
  CHECK(regular_over(f3, GroupName::c2xc2));
  CHECK_FALSE(regular_over(f3, GroupName::s3));
  CHECK(regular_over(q, GroupName::c2));
  CHECK(regular_over(q, GroupName::c3));
  CHECK(regular_over(q, GroupName::c2xc2));
  CHECK(regular_over(q, GroupName::s3));
}

TEST_CASE("regularity witnesses") {
  PrimeField f2(2);
  auto kc2 = group_algebra(f2, GroupName::c2).algebra();
  auto w1 = regularity_witness(kc2, kc2.unit());
  REQUIRE(w1);
  CHECK(*w1 == kc2.unit());
  CHECK_FALSE(regularity_witness(kc2, GFVec{1, 1}));  // (1+g) x (1+g) = 0 always

  auto kxk = product_field_algebra(f2);
  auto w = regularity_witness(kxk, kxk.basis_vec(0));
  REQUIRE(w);
  CHECK(kxk.mul(kxk.mul(kxk.basis_vec(0), *w), kxk.basis_vec(0)) == kxk.basis_vec(0));
}

TEST_CASE("generated ideals") {
  PrimeField f3(3);
  auto kxk = product_field_algebra(f3);
  CHECK(ideal_generated(kxk, {kxk.unit()}, IdealSide::left) == Subspace<PrimeField>::full(f3, 2));
  auto left = ideal_generated(kxk, {kxk.basis_vec(0)}, IdealSide::left);
  CHECK(left.dim() == 1);
  CHECK(left.contains(kxk.basis_vec(0)));

  auto m2 = matrix_algebra(f3, 2);
  CHECK(ideal_generated(m2, {m2.basis_vec(1)}, IdealSide::two_sided) ==
        Subspace<PrimeField>::full(f3, 4));
  CHECK(ideal_generated(m2, {m2.basis_vec(1)}, IdealSide::left).dim() == 2);
}

TEST_CASE("subalgebra closure") {
  PrimeField f2(2);
  auto kc3 = group_algebra(f2, GroupName::c3).algebra();
  CHECK(subalgebra_closure(kc3, {kc3.basis_vec(1)}) == Subspace<PrimeField>::full(f2, 3));
  CHECK(subalgebra_closure(kc3, {}).dim() == 1);
}

TEST_CASE("central idempotents over prime fields") {
  PrimeField f2(2), f3(3);
  auto trivial = Algebra<PrimeField>::create(f3, 1, {1}, {1}, {"1"}, "k");
  auto ids = central_idempotents(trivial);
  REQUIRE(ids.size() == 1);
  CHECK(ids[0] == GFVec{1});

  auto kxk = product_field_algebra(f3);
  auto ids2 = central_idempotents(kxk);
  REQUIRE(ids2.size() == 2);
  CHECK(ids2[0] == GFVec{0, 1});
  CHECK(ids2[1] == GFVec{1, 0});

  // GF(3)[C2]: (1+g)/2 = 2+2g and (1-g)/2 = 2+g
  auto ids3 = central_idempotents(group_algebra(f3, GroupName::c2).algebra());
  REQUIRE(ids3.size() == 2);
  CHECK(ids3[0] == GFVec{2, 1});
  CHECK(ids3[1] == GFVec{2, 2});

  // GF(2)[C3] = GF(2) x GF(4): two blocks
  auto ids4 = central_idempotents(group_algebra(f2, GroupName::c3).algebra());
  REQUIRE(ids4.size() == 2);
  CHECK(ids4[0] == GFVec{0, 1, 1});
  CHECK(ids4[1] == GFVec{1, 1, 1});

  CHECK_THROWS_AS(central_idempotents(matrix_algebra(f3, 2)), PreconditionError);
  CHECK_THROWS_AS(central_idempotents(group_algebra(f2, GroupName::c2).algebra()), PreconditionError);
}

TEST_CASE("central idempotents over the rationals") {
  RationalField q;
  using R = RationalField::Elem;
  auto kc3 = group_algebra(q, GroupName::c3).algebra();
  auto ids = central_idempotents(kc3);
  REQUIRE(ids.size() == 2);
  bool found_aug = false;
  for (const auto& e : ids) found_aug |= (e == std::vector<R>{R(1, 3), R(1, 3), R(1, 3)});
  CHECK(found_aug);  // the QQ block; the complement is the QQ(omega) block

  CHECK(central_idempotents(group_algebra(q, GroupName::c2xc2).algebra()).size() == 4);

  // the center of QQ[S3] splits into three blocks
  auto ks3 = group_algebra(q, GroupName::s3).algebra();
  auto zc = subalgebra_on(ks3, center(ks3), "Z(QQ[S3])");
  CHECK(central_idempotents(zc).size() == 3);

  // QQ[x]/(x^4+x^3+x^2+x+1) is a field, but a degree-4 certificate is out of
  // reach of rational-root and squarefree tools
  auto cyc5 = companion_field_algebra({R(1), R(1), R(1), R(1)});
  CHECK_THROWS_AS(central_idempotents(cyc5), NotSplitOverRationals);

  // QQ[x]/(x^2-2) is certified as a field (degree 2, no rational root)
  auto sqrt2 = companion_field_algebra({R(-2), R(0)});
  CHECK(central_idempotents(sqrt2).size() == 1);
}

TEST_CASE("idempotent join") {
  PrimeField f3(3);
  auto kxk = product_field_algebra(f3);
  auto e = kxk.basis_vec(0), f = kxk.basis_vec(1);
  CHECK(idempotent_join(kxk, e, vec_zero(f3, 2)) == e);
  CHECK(idempotent_join(kxk, e, e) == e);
  CHECK(idempotent_join(kxk, e, f) == kxk.unit());
  CHECK_THROWS_AS(idempotent_join(kxk, GFVec{2, 0}, e), PreconditionError);
}

TEST_CASE("central idempotent invariants on a four-block product") {
  PrimeField f5(5);
  auto kc2 = group_algebra(f5, GroupName::c2).algebra();
  auto prod = tensor_product(kc2, kc2);  // = k[C2 x C2] over GF(5): 4 blocks
  auto ids = central_idempotents(prod);
  REQUIRE(ids.size() == 4);
  auto sum = vec_zero(f5, 4);
  for (const auto& e : ids) {
    CHECK(prod.is_idempotent(e));
    sum = vec_add(f5, sum, e);
  }
  CHECK(sum == prod.unit());
}

TEST_CASE("quotient algebra by the radical") {
  PrimeField f2(2);
  auto kc2 = group_algebra(f2, GroupName::c2).algebra();
  auto quot = quotient_algebra(kc2, jacobson_radical(kc2), "k[C2]/J");
  CHECK(quot.dim() == 1);
  CHECK(is_regular(quot));
}

TEST_CASE("nilpotency of subspaces") {
  PrimeField f2(2);
  auto t3 = upper_triangular_algebra(f2, 3);
  CHECK(subspace_is_nilpotent(t3, jacobson_radical(t3)));
  CHECK_FALSE(subspace_is_nilpotent(t3, Subspace<PrimeField>::full(f2, t3.dim())));
}
