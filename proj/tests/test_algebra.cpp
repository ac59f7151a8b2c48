#include "rbop/algebra.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace rbop;
using rbtest::abelian2;
using rbtest::dual2;
using rbtest::poly3;
using rbtest::ut2;

namespace {

Algebra one_dim_idempotent() {
  Tensor3 mu(1, 1, 1);
  mu(0, 0, 0) = Rat(1);
  return Algebra(1, std::move(mu));
}

}  // namespace

TEST_CASE("associativity validation") {
  CHECK(validate_algebra(poly3()).empty());
  CHECK(validate_algebra(one_dim_idempotent()).empty());
  CHECK(validate_algebra(dual2()).empty());
  CHECK(validate_algebra(ut2()).empty());
  CHECK(validate_algebra(abelian2()).empty());

  // e0 e0 = e1, e1 e0 = e0: (e0 e0) e0 = e0 but e0 (e0 e0) = 0.
  Tensor3 mu(2, 2, 2);
  mu(0, 0, 1) = Rat(1);
  mu(1, 0, 0) = Rat(1);
  const Algebra bad(2, std::move(mu));
  const auto violations = validate_algebra(bad);
  REQUIRE(!violations.empty());
  bool found = false;
  for (const auto& v : violations) {
    if (v.i == 0 && v.j == 0 && v.k == 0) {
      found = true;
      CHECK(v.lhs == bad.basis(0));
      CHECK(is_zero(v.rhs));
    }
  }
  CHECK(found);
}

TEST_CASE("standard bimodules validate") {
  for (const Algebra& a : {poly3(), dual2(), ut2(), abelian2()}) {
    CHECK(validate_bimodule(adjoint_bimodule(a)).empty());
    CHECK(validate_bimodule(coadjoint_bimodule(a)).empty());
    CHECK(validate_bimodule(one_sided_bimodule(a, Side::left)).empty());
    CHECK(validate_bimodule(one_sided_bimodule(a, Side::right)).empty());
  }
}

TEST_CASE("a zero left action with adjoint right action is still a bimodule") {
  const Algebra a = poly3();
  Bimodule mixed(a, a.dim(), Tensor3(a.dim(), a.dim(), a.dim()), a.structure());
  CHECK(validate_bimodule(mixed).empty());
}

TEST_CASE("coadjoint tensors follow the dual-basis transcription") {
  SUBCASE("one-dimensional idempotent") {
    const Bimodule co = coadjoint_bimodule(one_dim_idempotent());
    CHECK(co.left_tensor()(0, 0, 0) == Rat(1));
    CHECK(co.right_tensor()(0, 0, 0) == Rat(1));
  }
  SUBCASE("zero multiplication gives zero actions") {
    const Bimodule co = coadjoint_bimodule(abelian2());
    CHECK(co.left_tensor().is_zero());
    CHECK(co.right_tensor().is_zero());
  }
  SUBCASE("coadjoint left action transposes the adjoint right action") {
    const Algebra a = ut2();
    const Bimodule ad = adjoint_bimodule(a);
    const Bimodule co = coadjoint_bimodule(a);
    for (Index i = 0; i < a.dim(); ++i)
      for (Index u = 0; u < a.dim(); ++u)
        for (Index v = 0; v < a.dim(); ++v) CHECK(co.left_tensor()(i, u, v) == ad.right_tensor()(v, i, u));
  }
}

TEST_CASE("semidirect products") {
  SUBCASE("one-dimensional idempotent with adjoint module") {
    const Algebra a = one_dim_idempotent();
    const Algebra sd = semidirect_product(a, adjoint_bimodule(a));
    CHECK(sd.dim() == 2);
    // (e, 0) (0, f) = (0, f)
    Vec e = Vec::Zero(2), f = Vec::Zero(2);
    e(0) = Rat(1);
    f(1) = Rat(1);
    CHECK(sd.mul(e, f) == f);
    CHECK(is_zero(sd.mul(f, f)));
  }
  SUBCASE("zero everything stays zero") {
    const Algebra a = abelian2();
    Bimodule zero(a, 2, Tensor3(2, 2, 2), Tensor3(2, 2, 2));
    const Algebra sd = semidirect_product(a, zero);
    CHECK(sd.dim() == 4);
    CHECK(sd.structure().is_zero());
    CHECK(validate_algebra(sd).empty());
  }
  SUBCASE("poly3 with adjoint module is associative") {
    const Algebra sd = semidirect_product(poly3(), adjoint_bimodule(poly3()));
    CHECK(sd.dim() == 6);
    CHECK(validate_algebra(sd).empty());
  }
  SUBCASE("an invalid bimodule is rejected") {
    const Algebra a = poly3();
    Tensor3 left = a.structure();
    left(1, 1, 0) += Rat(1);  // break axiom 1
    Bimodule broken(a, a.dim(), std::move(left), a.structure());
    REQUIRE(!validate_bimodule(broken).empty());
    CHECK_THROWS_AS(semidirect_product(a, broken), std::invalid_argument);
  }
}

TEST_CASE("semidirect product validates whenever its inputs do") {
  std::mt19937 rng(11);
  for (const Algebra& a : {poly3(), dual2(), ut2()}) {
    for (const Bimodule& bm :
         {adjoint_bimodule(a), coadjoint_bimodule(a), one_sided_bimodule(a, Side::left)}) {
      CHECK(validate_algebra(semidirect_product(a, bm)).empty());
    }
  }
}

TEST_CASE("algebra morphisms") {
  const Algebra a = poly3();
  CHECK(is_algebra_morphism(Mat::Identity(3, 3), a, a));
  CHECK(is_algebra_morphism(Mat::Zero(3, 3), a, a));

  // The grading automorphism 1 -> 1, x -> 2x, x^2 -> 4x^2.
  Mat scale = Mat::Zero(3, 3);
  scale(0, 0) = Rat(1);
  scale(1, 1) = Rat(2);
  scale(2, 2) = Rat(4);
  CHECK(is_algebra_morphism(scale, a, a));

  // x -> 2x alone does not respect x * x = x^2.
  Mat bad = Mat::Identity(3, 3);
  bad(1, 1) = Rat(2);
  CHECK(!is_algebra_morphism(bad, a, a));

  CHECK_THROWS_AS(is_algebra_morphism(Mat::Identity(2, 2), a, a), std::invalid_argument);
}
