#include "rbop/rmatrix.hpp"

#include "rbop/deformation.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace rbop;
using namespace rbtest;

namespace {

Wedge2 wedge(const Algebra& a, std::vector<std::tuple<Index, Index, Rat>> entries) {
  return Wedge2(a, std::move(entries));
}

}  // namespace

TEST_CASE("r_sharp") {
  const Algebra d2 = dual2();
  SUBCASE("zero wedge gives the zero map") {
    CHECK(is_zero(r_sharp(wedge(d2, {}))));
  }
  SUBCASE("1 wedge x sends 1* to x and x* to -1") {
    const Mat s = r_sharp(wedge(d2, {{0, 1, Rat(1)}}));
    CHECK(Vec(s.col(0)) == d2.basis(1));
    CHECK(Vec(s.col(1)) == Vec(-d2.basis(0)));
  }
  SUBCASE("skew pairing <alpha, r# beta> = -<beta, r# alpha>") {
    std::mt19937 rng(501);
    const Algebra u = ut2();
    for (int trial = 0; trial < 6; ++trial) {
      const Mat s = r_sharp(wedge(u, {{0, 1, rand_rat(rng)}, {0, 2, rand_rat(rng)}, {1, 2, rand_rat(rng)}}));
      for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) CHECK(s(i, j) == -s(j, i));
    }
  }
}

TEST_CASE("yang-baxter bracket") {
  SUBCASE("zero multiplication kills everything") {
    const Algebra ab = abelian2();
    CHECK(yb_bracket(wedge(ab, {{0, 1, Rat(1)}})).is_zero());
    CHECK(yb_bracket(wedge(ab, {})).is_zero());
  }
  SUBCASE("1 wedge x on dual2: the cyclic sum at (1*, x*, x*) is -1") {
    const Algebra d2 = dual2();
    const Tensor3 yb = yb_bracket(wedge(d2, {{0, 1, Rat(1)}}));
    CHECK(yb(0, 1, 1) == Rat(-1));
    CHECK(!yb.is_zero());
  }
}

TEST_CASE("r-matrix characterization agrees with the coadjoint defect") {
  const std::vector<Rat> grid = {Rat(-1), Rat(0), Rat(1)};
  SUBCASE("dual2 grid: only r = 0 passes") {
    const Algebra d2 = dual2();
    const Bimodule co = coadjoint_bimodule(d2);
    for (const Rat& c : grid) {
      const Wedge2 r = wedge(d2, {{0, 1, c}});
      const bool via_yb = yb_bracket(r).is_zero();
      const bool via_defect = o_operator_defect(co, r_sharp(r)).is_zero();
      CHECK(via_yb == via_defect);
      CHECK(is_r_matrix(r) == c.is_zero());
    }
  }
  SUBCASE("abelian2 grid: everything passes") {
    const Algebra ab = abelian2();
    const Bimodule co = coadjoint_bimodule(ab);
    for (const Rat& c : grid) {
      const Wedge2 r = wedge(ab, {{0, 1, c}});
      CHECK(is_r_matrix(r));
      CHECK(o_operator_defect(co, r_sharp(r)).is_zero());
    }
  }
  SUBCASE("ut2 grid: both routes agree pointwise") {
    const Algebra u = ut2();
    const Bimodule co = coadjoint_bimodule(u);
    int valid = 0, invalid = 0;
    for (const Rat& c01 : grid)
      for (const Rat& c02 : grid)
        for (const Rat& c12 : grid) {
          const Wedge2 r = wedge(u, {{0, 1, c01}, {0, 2, c02}, {1, 2, c12}});
          const bool via_yb = yb_bracket(r).is_zero();
          CHECK(via_yb == o_operator_defect(co, r_sharp(r)).is_zero());
          (via_yb ? valid : invalid) += 1;
        }
    CHECK(valid > 1);   // more than just r = 0
    CHECK(invalid > 0);
  }
}

TEST_CASE("induced coproducts") {
  SUBCASE("r = 0 gives the zero coproduct") {
    const Coproduct cp = induced_coproduct(wedge(dual2(), {}));
    CHECK(cp.delta.is_zero());
    CHECK(infinitesimal_bialgebra_check(dual2(), cp.delta));
  }
  SUBCASE("abelian2 coproducts vanish") {
    const Coproduct cp = induced_coproduct(wedge(abelian2(), {{0, 1, Rat(1)}}));
    CHECK(cp.delta.is_zero());
  }
  SUBCASE("E12 wedge E22 on ut2 is an r-matrix with a nonzero coproduct") {
    const Algebra u = ut2();
    const Wedge2 r = wedge(u, {{1, 2, Rat(1)}});
    REQUIRE(is_r_matrix(r));
    const Coproduct cp = induced_coproduct(r);
    CHECK(!cp.delta.is_zero());
    CHECK(cp.delta(1, 1, 1) == Rat(1));  // <e1* star e1*, e1> = 1
    CHECK(infinitesimal_bialgebra_check(u, cp.delta));
  }
  SUBCASE("non-r-matrices are rejected") {
    CHECK_THROWS_AS(induced_coproduct(wedge(dual2(), {{0, 1, Rat(1)}})), std::invalid_argument);
  }
}

TEST_CASE("infinitesimal bialgebra check") {
  SUBCASE("the zero coproduct always works") {
    CHECK(infinitesimal_bialgebra_check(poly3(), Tensor3(3, 3, 3)));
  }
  SUBCASE("a non-derivation coproduct fails") {
    Tensor3 delta(3, 3, 3);
    delta(0, 0, 0) = Rat(1);  // delta(1) = 1 x 1 is not a derivation on poly3
    CHECK(!infinitesimal_bialgebra_check(poly3(), delta));
  }
}

TEST_CASE("weak morphisms of r-matrices") {
  SUBCASE("identity pair on equal r-matrices") {
    const Algebra u = ut2();
    const Wedge2 r = wedge(u, {{1, 2, Rat(1)}});
    const WeakMorphismReport rep = weak_morphism_check(r, r, Mat::Identity(3, 3), Mat::Identity(3, 3));
    CHECK(rep.ok());
  }
  SUBCASE("equivalence transport on abelian2: (phi, phi^{-1}) is a weak isomorphism") {
    const Algebra ab = abelian2();
    Mat phi = Mat::Zero(2, 2);
    phi(0, 0) = Rat(2);
    phi(1, 1) = Rat(3);
    Mat phi_inv = Mat::Zero(2, 2);
    phi_inv(0, 0) = Rat(1, 2);
    phi_inv(1, 1) = Rat(1, 3);
    const Wedge2 r1 = wedge(ab, {{0, 1, Rat(1)}});
    // r2 = (phi x phi)(r1) = 6 (e0 wedge e1)
    const Wedge2 r2 = wedge(ab, {{0, 1, Rat(6)}});
    CHECK(Mat(phi * r1.as_matrix() * phi.transpose()) == r2.as_matrix());
    const WeakMorphismReport rep = weak_morphism_check(r1, r2, phi, phi_inv);
    CHECK(rep.ok());
  }
  SUBCASE("a broken psi is reported") {
    const Algebra u = ut2();
    const Wedge2 r = wedge(u, {{1, 2, Rat(1)}});
    Mat psi = Mat::Identity(3, 3);
    psi(1, 1) = Rat(2);  // rescales a row that r actually uses
    const WeakMorphismReport rep = weak_morphism_check(r, r, Mat::Identity(3, 3), psi);
    CHECK(!rep.tensor_condition);
    CHECK(!rep.ok());
    // rescaling an unused row instead leaves the tensor condition intact but
    // still breaks the action compatibilities
    Mat psi2 = Mat::Identity(3, 3);
    psi2(0, 0) = Rat(2);
    const WeakMorphismReport rep2 = weak_morphism_check(r, r, Mat::Identity(3, 3), psi2);
    CHECK(rep2.tensor_condition);
    CHECK(!rep2.right_compatible);
    CHECK(!rep2.ok());
  }
}

TEST_CASE("weak morphisms of infinitesimal bialgebras") {
  const Algebra u = ut2();
  const Wedge2 r = wedge(u, {{1, 2, Rat(1)}});
  const Coproduct cp = induced_coproduct(r);
  SUBCASE("identity pair on the triangular bialgebra") {
    const BialgebraWeakMorphismReport rep =
        bialgebra_weak_morphism_check(u, cp.delta, cp.delta, Mat::Identity(3, 3), Mat::Identity(3, 3));
    CHECK(rep.ok());
  }
  SUBCASE("weak morphisms of r-matrices transport to the bialgebras") {
    const Algebra ab = abelian2();
    Mat phi = Mat::Zero(2, 2);
    phi(0, 0) = Rat(2);
    phi(1, 1) = Rat(3);
    Mat phi_inv = Mat::Zero(2, 2);
    phi_inv(0, 0) = Rat(1, 2);
    phi_inv(1, 1) = Rat(1, 3);
    const Wedge2 r1 = wedge(ab, {{0, 1, Rat(1)}});
    const Wedge2 r2 = wedge(ab, {{0, 1, Rat(6)}});
    REQUIRE(weak_morphism_check(r1, r2, phi, phi_inv).ok());
    const BialgebraWeakMorphismReport rep = bialgebra_weak_morphism_check(
        ab, induced_coproduct(r1).delta, induced_coproduct(r2).delta, phi, phi_inv);
    CHECK(rep.ok());
  }
  SUBCASE("a non-coalgebra psi fails") {
    const BialgebraWeakMorphismReport rep =
        bialgebra_weak_morphism_check(u, cp.delta, Tensor3(3, 3, 3), Mat::Identity(3, 3), Mat::Identity(3, 3));
    CHECK(!rep.psi_is_coalgebra_morphism);
    CHECK(!rep.ok());
  }
}

TEST_CASE("the induced actions on A are the coadjoint actions of the star algebra") {
  // For T = r#, the bimodule structure of (A*, star) on A coincides,
  // tensor by tensor, with the coadjoint bimodule of the star algebra
  // acting on (A*)* = A.
  struct Case {
    Algebra alg;
    Wedge2 r;
  };
  const std::vector<Case> cases = {
      {ut2(), wedge(ut2(), {{1, 2, Rat(1)}})},
      {dual2(), wedge(dual2(), {})},
      {abelian2(), wedge(abelian2(), {{0, 1, Rat(1)}})},
  };
  for (const Case& c : cases) {
    REQUIRE(is_r_matrix(c.r));
    const Bimodule co = coadjoint_bimodule(c.alg);
    const Bimodule induced = induced_bimodule_on_A(co, r_sharp(c.r));
    const Bimodule coadjoint_of_star = coadjoint_bimodule(induced_star(co, r_sharp(c.r)));
    CHECK(induced.left_tensor() == coadjoint_of_star.left_tensor());
    CHECK(induced.right_tensor() == coadjoint_of_star.right_tensor());
  }
}

TEST_CASE("linear r-matrix deformations match linear operator deformations") {
  // r + t kappa stays an r-matrix for all t exactly when kappa# generates a
  // linear deformation of r# over the coadjoint bimodule. Both sides are
  // quadratic in t, so values at t = 0, 1, 2 decide the coefficients.
  const std::vector<Rat> grid = {Rat(-1), Rat(0), Rat(1)};
  for (const Algebra& a : {dual2(), abelian2()}) {
    const Bimodule co = coadjoint_bimodule(a);
    for (const Rat& rc : grid)
      for (const Rat& kc : grid) {
        const Wedge2 r = wedge(a, {{0, 1, rc}});
        const Wedge2 kappa = wedge(a, {{0, 1, kc}});
        bool all_t = true;
        for (long t = 0; t <= 2; ++t) {
          const Wedge2 rt = wedge(a, {{0, 1, rc + Rat(t) * kc}});
          if (!yb_bracket(rt).is_zero()) all_t = false;
        }
        const bool via_operator = yb_bracket(r).is_zero() &&
                                  linear_deformation_generates(co, r_sharp(r), r_sharp(kappa)).ok();
        CHECK(all_t == via_operator);
      }
  }
}
