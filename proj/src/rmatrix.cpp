#include "rbop/rmatrix.hpp"

#include <map>

namespace rbop {

Wedge2::Wedge2(Algebra alg, std::vector<std::tuple<Index, Index, Rat>> entries) : alg_(std::move(alg)) {
  std::map<std::pair<Index, Index>, Rat> folded;
  for (const auto& [i, j, c] : entries) {
    if (i < 0 || j < 0 || i >= alg_.dim() || j >= alg_.dim() || i >= j)
      throw std::invalid_argument("Wedge2: entries must satisfy 0 <= i < j < dim");
    folded[{i, j}] += c;
  }
  for (const auto& [ij, c] : folded)
    if (!c.is_zero()) entries_.push_back({ij.first, ij.second, c});
}

Rat Wedge2::coeff(Index i, Index j) const {
  for (const auto& [p, q, c] : entries_) {
    if (p == i && q == j) return c;
    if (p == j && q == i) return -c;
  }
  return Rat(0);
}

Mat Wedge2::as_matrix() const {
  Mat out = Mat::Zero(alg_.dim(), alg_.dim());
  for (const auto& [i, j, c] : entries_) {
    out(i, j) = c;
    out(j, i) = -c;
  }
  return out;
}

Mat r_sharp(const Wedge2& r) {
  // <beta, r#(alpha)> = r(alpha, beta) = alpha^T R beta gives r# = R^T.
  return r.as_matrix().transpose();
}

Tensor3 yb_bracket(const Wedge2& r) {
  const Algebra& A = r.algebra();
  const Index n = A.dim();
  const Mat sharp = r_sharp(r);
  Tensor3 out(n, n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Rat acc = A.mul(sharp.col(a), sharp.col(b))(c);
        acc += A.mul(sharp.col(b), sharp.col(c))(a);
        acc += A.mul(sharp.col(c), sharp.col(a))(b);
        out(a, b, c) = acc;
      }
  return out;
}

bool is_r_matrix(const Wedge2& r) {
  const bool via_bracket = yb_bracket(r).is_zero();
  const bool via_defect = is_o_operator(coadjoint_bimodule(r.algebra()), r_sharp(r));
  if (via_bracket != via_defect)
    throw std::logic_error("is_r_matrix: bracket and coadjoint-defect routes disagree");
  return via_bracket;
}

Coproduct induced_coproduct(const Wedge2& r) {
  if (!is_r_matrix(r)) throw std::invalid_argument("induced_coproduct: not an r-matrix");
  const Algebra& A = r.algebra();
  const Algebra star = induced_star(coadjoint_bimodule(A), r_sharp(r));
  const Index n = A.dim();
  Coproduct out{n, Tensor3(n, n, n)};
  // <delta(e_k), e_i* x e_j*> = <e_j* star e_i*, e_k>. Of the two standard
  // identifications of (A x A)* with A* x A*, this reversed one makes the
  // derivation rule of the triangular bialgebra come out.
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) out.delta(k, i, j) = star.structure()(j, i, k);
  return out;
}

bool infinitesimal_bialgebra_check(const Algebra& alg, const Tensor3& delta) {
  const Index n = alg.dim();
  if (delta.n0 != n || delta.n1 != n || delta.n2 != n)
    throw std::invalid_argument("infinitesimal_bialgebra_check: coproduct shape mismatch");
  const Tensor3& mu = alg.structure();

  // Coassociativity: (delta x id) delta = (id x delta) delta.
  for (Index k = 0; k < n; ++k)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c) {
          Rat lhs(0), rhs(0);
          for (Index p = 0; p < n; ++p) {
            lhs += delta(k, p, c) * delta(p, a, b);
            rhs += delta(k, a, p) * delta(p, b, c);
          }
          if (lhs != rhs) return false;
        }

  // Derivation rule: delta(e_i e_j) = e_i delta(e_j) + delta(e_i) e_j.
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          Rat lhs(0), rhs(0);
          for (Index k = 0; k < n; ++k) lhs += mu(i, j, k) * delta(k, a, b);
          for (Index p = 0; p < n; ++p) {
            rhs += delta(j, p, b) * mu(i, p, a);  // e_i (e_p x e_b)
            rhs += delta(i, a, p) * mu(p, j, b);  // (e_a x e_p) e_j
          }
          if (lhs != rhs) return false;
        }
  return true;
}

WeakMorphismReport weak_morphism_check(const Wedge2& r1, const Wedge2& r2, const Mat& phi, const Mat& psi) {
  const Algebra& A = r1.algebra();
  if (!(r2.algebra() == A)) throw std::invalid_argument("weak_morphism_check: algebras differ");
  if (phi.rows() != A.dim() || phi.cols() != A.dim() || psi.rows() != A.dim() || psi.cols() != A.dim())
    throw std::invalid_argument("weak_morphism_check: morphism shape mismatch");

  WeakMorphismReport rep;
  rep.phi_is_algebra_morphism = is_algebra_morphism(phi, A, A);
  rep.tensor_condition = (psi * r2.as_matrix() == r1.as_matrix() * phi.transpose());
  rep.left_compatible = true;
  rep.right_compatible = true;
  for (Index i = 0; i < A.dim(); ++i)
    for (Index j = 0; j < A.dim(); ++j) {
      const Vec a = A.basis(i);
      const Vec b = A.basis(j);
      if (psi * A.mul(phi * a, b) != A.mul(a, psi * b)) rep.left_compatible = false;
      if (psi * A.mul(a, phi * b) != A.mul(psi * a, b)) rep.right_compatible = false;
    }

  // (phi, psi^T) as an O-operator morphism from r1# to r2# states the same
  // three conditions over the coadjoint bimodule.
  const OMorphismReport dual =
      is_o_morphism(coadjoint_bimodule(A), r_sharp(r1), r_sharp(r2), phi, psi.transpose());
  const bool direct = rep.ok();
  if (direct != dual.ok())
    throw std::logic_error("weak_morphism_check: direct and O-morphism routes disagree");
  return rep;
}

BialgebraWeakMorphismReport bialgebra_weak_morphism_check(const Algebra& alg, const Tensor3& delta1,
                                                          const Tensor3& delta2, const Mat& phi,
                                                          const Mat& psi) {
  const Index n = alg.dim();
  if (delta1.n0 != n || delta2.n0 != n)
    throw std::invalid_argument("bialgebra_weak_morphism_check: coproduct shape mismatch");

  BialgebraWeakMorphismReport rep;
  rep.phi_is_algebra_morphism = is_algebra_morphism(phi, alg, alg);

  // delta1 . psi = (psi x psi) . delta2, componentwise on basis elements.
  rep.psi_is_coalgebra_morphism = true;
  for (Index k = 0; k < n; ++k)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        Rat lhs(0), rhs(0);
        for (Index p = 0; p < n; ++p) lhs += psi(p, k) * delta1(p, a, b);
        for (Index p = 0; p < n; ++p)
          for (Index q = 0; q < n; ++q) rhs += delta2(k, p, q) * psi(a, p) * psi(b, q);
        if (lhs != rhs) {
          rep.psi_is_coalgebra_morphism = false;
          break;
        }
      }

  rep.left_compatible = true;
  rep.right_compatible = true;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vec a = alg.basis(i);
      const Vec b = alg.basis(j);
      if (psi * alg.mul(phi * a, b) != alg.mul(a, psi * b)) rep.left_compatible = false;
      if (psi * alg.mul(a, phi * b) != alg.mul(psi * a, b)) rep.right_compatible = false;
    }

  // Dual route: psi^T is an algebra morphism from the star product of
  // delta1 to the star product of delta2 on A*.
  auto star_of = [&](const Tensor3& delta) {
    Tensor3 mu(n, n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) mu(i, j, k) = delta(k, i, j);
    return Algebra(n, std::move(mu));
  };
  rep.dual_star_morphism = is_algebra_morphism(psi.transpose(), star_of(delta1), star_of(delta2));
  if (rep.dual_star_morphism != rep.psi_is_coalgebra_morphism)
    throw std::logic_error("bialgebra_weak_morphism_check: coalgebra and dual-star routes disagree");
  return rep;
}

}  // namespace rbop
