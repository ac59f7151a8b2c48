#include "rbop/cohomology.hpp"

#include "testutil.hpp"

#include <doctest.h>

using namespace rbop;
using namespace rbtest;

TEST_CASE("differential matrices compose to zero") {
  struct Case {
    Bimodule bm;
    Mat T;
  };
  std::mt19937 rng(301);
  const std::vector<Case> cases = {
      {adjoint_bimodule(poly3()), poly3_R()},
      {adjoint_bimodule(ut2()), ut2_shift()},
      {adjoint_bimodule(abelian2()), rand_mat(rng, 2, 2)},
  };
  for (const Case& c : cases)
    for (Index n = 0; n <= 2; ++n) {
      const Mat dn = differential_matrix(c.bm, c.T, n);
      const Mat dn1 = differential_matrix(c.bm, c.T, n + 1);
      CHECK(is_zero(Mat(dn1 * dn)));
    }
}

TEST_CASE("cocycles on poly3 with the integration operator") {
  const Algebra a = poly3();
  const Bimodule bm = adjoint_bimodule(a);
  const Mat R = poly3_R();
  const Subspace z1 = cocycles(bm, R, 1);
  SUBCASE("the operator itself is a 1-cocycle") {
    CHECK(z1.contains(Cochain::linear(R).flattened()));
  }
  SUBCASE("coboundaries are cocycles") {
    std::mt19937 rng(307);
    for (int trial = 0; trial < 5; ++trial) {
      const Cochain db = d_hoch(bm, R, rand_cochain(rng, 0, 3, 3));
      CHECK(z1.contains(db.flattened()));
    }
  }
  SUBCASE("zero is always a cocycle") {
    CHECK(z1.contains(Vec::Zero(z1.ambient_dim())));
  }
}

TEST_CASE("coboundaries on poly3 with the integration operator") {
  const Algebra a = poly3();
  const Bimodule bm = adjoint_bimodule(a);
  const Mat R = poly3_R();
  SUBCASE("degree 0 has no coboundaries") {
    CHECK(coboundaries(bm, R, 0).dim() == 0);
  }
  SUBCASE("B^1 vanishes because the degree-0 differential does") {
    CHECK(coboundaries(bm, R, 1).dim() == 0);
  }
  SUBCASE("coboundaries sit inside cocycles") {
    for (Index n = 0; n <= 2; ++n) CHECK(cocycles(bm, R, n).contains(coboundaries(bm, R, n)));
  }
}

TEST_CASE("cohomology reports") {
  const Algebra a = poly3();
  const Bimodule bm = adjoint_bimodule(a);
  const Mat R = poly3_R();
  SUBCASE("degree 0 of the commutative fixture is all of A") {
    const CohomologyReport rep = cohomology_report(bm, R, 0);
    CHECK(rep.dim_cohomology == 3);
    CHECK(rep.dim_cocycles == 3);
    CHECK(rep.dim_coboundaries == 0);
  }
  SUBCASE("zero operator on abelian2 has full cohomology in every degree") {
    const Algebra ab = abelian2();
    const Bimodule abm = adjoint_bimodule(ab);
    const Mat zero = Mat::Zero(2, 2);
    CHECK(cohomology_report(abm, zero, 0).dim_cohomology == 2);
    CHECK(cohomology_report(abm, zero, 1).dim_cohomology == 4);
    CHECK(cohomology_report(abm, zero, 2).dim_cohomology == 8);
  }
  SUBCASE("poly3_R degree-1 dimensions, locked after first exact computation") {
    const CohomologyReport rep = cohomology_report(bm, R, 1);
    CHECK(rep.dim_coboundaries == 0);
    CHECK(rep.dim_cocycles == 3);
    CHECK(rep.dim_cohomology == 3);
    // the operator itself represents one of the three classes
    CHECK(rep.cocycle_basis.contains(Cochain::linear(R).flattened()));
    // hand-checked cocycle: 1 -> 1, x -> 0, x^2 -> 0
    Mat proj = Mat::Zero(3, 3);
    proj(0, 0) = Rat(1);
    CHECK(rep.cocycle_basis.contains(Cochain::linear(proj).flattened()));
    CHECK(static_cast<Index>(rep.representatives.size()) == rep.dim_cohomology);
    for (const Cochain& f : rep.representatives) CHECK(d_hoch(bm, R, f).is_zero());
  }
  SUBCASE("poly3_R degree-2 dimensions, locked after first exact computation") {
    const CohomologyReport rep = cohomology_report(bm, R, 2);
    CHECK(rep.dim_cocycles == 9);
    CHECK(rep.dim_coboundaries == 6);
    CHECK(rep.dim_cohomology == 3);
  }
  SUBCASE("reports are deterministic") {
    const CohomologyReport r1 = cohomology_report(bm, R, 1);
    const CohomologyReport r2 = cohomology_report(bm, R, 1);
    CHECK(r1.cocycle_basis == r2.cocycle_basis);
    REQUIRE(r1.representatives.size() == r2.representatives.size());
    for (size_t i = 0; i < r1.representatives.size(); ++i)
      CHECK(r1.representatives[i] == r2.representatives[i]);
  }
  SUBCASE("degree cap is enforced") {
    CHECK_THROWS_AS(cohomology_report(bm, R, 4), std::out_of_range);
    CHECK_THROWS_AS(cocycles(bm, R, -1), std::out_of_range);
  }
  SUBCASE("the top admissible degree works on a small fixture") {
    const Algebra d2 = fixture("dual2").algebra;
    const Bimodule left = one_sided_bimodule(d2, Side::left);
    Mat P = Mat::Zero(2, 2);
    P(0, 0) = Rat(1);
    const CohomologyReport rep = cohomology_report(left, P, 3);
    CHECK(rep.dim_cohomology == rep.dim_cocycles - rep.dim_coboundaries);
    CHECK(cocycles(left, P, 3).contains(coboundaries(left, P, 3)));
    // d^2 = 0 one degree beyond the usual spot checks
    CHECK(is_zero(Mat(differential_matrix(left, P, 3) * differential_matrix(left, P, 2))));
  }
}

TEST_CASE("dimensions agree between the two differential routes") {
  // d_T = [[T, -]] and d_H differ by a sign, so kernels and images match.
  const Algebra u = ut2();
  const Bimodule bm = adjoint_bimodule(u);
  const Mat T = ut2_shift();
  const Cochain tc = Cochain::linear(T);
  for (Index n = 1; n <= 2; ++n) {
    const Index dom = pow_index(3, n) * 3;
    Mat dt = Mat::Zero(pow_index(3, n + 1) * 3, dom);
    for (Index j = 0; j < dom; ++j) {
      Vec e = Vec::Zero(dom);
      e(j) = Rat(1);
      dt.col(j) = derived_bracket(bm, tc, Cochain::from_flattened(n, 3, 3, e)).flattened();
    }
    CHECK(kernel(dt) == cocycles(bm, T, n));
    CHECK(Subspace::span_of_cols(dt) == Subspace::span_of_cols(differential_matrix(bm, T, n)));
  }
}

TEST_CASE("cohomologous cochains") {
  const Algebra a = poly3();
  const Bimodule bm = adjoint_bimodule(a);
  const Mat R = poly3_R();
  const Cochain rc = Cochain::linear(R);
  SUBCASE("every cocycle is cohomologous to itself") {
    CHECK(is_cohomologous(bm, R, rc, rc));
  }
  SUBCASE("adding a coboundary preserves the class") {
    std::mt19937 rng(311);
    const Cochain h = rand_cochain(rng, 0, 3, 3);
    CHECK(is_cohomologous(bm, R, rc, rc + d_hoch(bm, R, h)));
  }
  SUBCASE("the operator class is nonzero") {
    CHECK(!is_cohomologous(bm, R, rc, Cochain(1, 3, 3)));
  }
  SUBCASE("non-cocycles are rejected") {
    CHECK_THROWS_AS(is_cohomologous(bm, R, Cochain::linear(poly3_D()), rc), std::domain_error);
  }
}

TEST_CASE("H^0 closes under the commutator bracket") {
  CHECK(h0_bracket_closure_check(adjoint_bimodule(poly3()), poly3_R()));
  CHECK(h0_bracket_closure_check(adjoint_bimodule(ut2()), Mat::Zero(3, 3)));
  CHECK(h0_bracket_closure_check(adjoint_bimodule(abelian2()), Mat::Zero(2, 2)));
  CHECK(h0_bracket_closure_check(adjoint_bimodule(ut2()), ut2_shift()));
}
