#pragma once

#include "rbop/operators.hpp"

namespace rbop {

/// Element of wedge^2 A: r = sum_{i<j} r_ij (e_i x e_j - e_j x e_i). Only
/// the strictly upper entries are stored, so antisymmetry is structural.
class Wedge2 {
 public:
  Wedge2(Algebra alg, std::vector<std::tuple<Index, Index, Rat>> entries);

  const Algebra& algebra() const { return alg_; }
  /// Signed coefficient of e_i x e_j in r (any i, j).
  Rat coeff(Index i, Index j) const;
  /// The full antisymmetric coefficient matrix.
  Mat as_matrix() const;
  const std::vector<std::tuple<Index, Index, Rat>>& entries() const { return entries_; }

 private:
  Algebra alg_;
  std::vector<std::tuple<Index, Index, Rat>> entries_;  // i < j, deduplicated
};

/// The induced skew map A* -> A with <beta, r#(alpha)> = r(alpha, beta);
/// columns are the images of the dual basis.
Mat r_sharp(const Wedge2& r);

/// [[r, r]](alpha, beta, gamma) on dual basis triples: tensor indexed
/// (alpha, beta, gamma).
Tensor3 yb_bracket(const Wedge2& r);

/// [[r, r]] = 0; cross-checked against the coadjoint O-operator defect of
/// r#. The two routes agreeing is a theorem, so a mismatch throws.
bool is_r_matrix(const Wedge2& r);

/// Coproduct tensor: delta(k, i, j) is the e_i x e_j coefficient of
/// the coproduct applied to e_k.
struct Coproduct {
  Index dim = 0;
  Tensor3 delta;
};

/// The coalgebra structure dual to the star product that r# induces on A*.
/// Requires r to be an r-matrix.
Coproduct induced_coproduct(const Wedge2& r);

/// Coassociativity plus the derivation rule
/// delta(a b) = a delta(b) + delta(a) b, with A acting on A x A by
/// a (b x c) = (a b) x c and (b x c) a = b x (c a).
bool infinitesimal_bialgebra_check(const Algebra& alg, const Tensor3& delta);

struct WeakMorphismReport {
  bool phi_is_algebra_morphism = false;
  bool tensor_condition = false;  // (psi x id)(r2) = (id x phi)(r1)
  bool left_compatible = false;   // psi(phi(a) b) = a psi(b)
  bool right_compatible = false;  // psi(a phi(b)) = psi(a) b
  bool ok() const {
    return phi_is_algebra_morphism && tensor_condition && left_compatible && right_compatible;
  }
};

/// Weak morphism of r-matrices from r1 to r2; cross-checked against
/// (phi, psi^T) being an O-operator morphism from r1# to r2# over the
/// coadjoint bimodule.
WeakMorphismReport weak_morphism_check(const Wedge2& r1, const Wedge2& r2, const Mat& phi, const Mat& psi);

struct BialgebraWeakMorphismReport {
  bool phi_is_algebra_morphism = false;
  bool psi_is_coalgebra_morphism = false;  // delta1 . psi = (psi x psi) . delta2
  bool left_compatible = false;
  bool right_compatible = false;
  bool dual_star_morphism = false;  // psi^T maps star_1 to star_2 (dual route)
  bool ok() const {
    return phi_is_algebra_morphism && psi_is_coalgebra_morphism && left_compatible &&
           right_compatible && dual_star_morphism;
  }
};

/// Weak morphism from (A, mul, delta1) to (A, mul, delta2).
BialgebraWeakMorphismReport bialgebra_weak_morphism_check(const Algebra& alg, const Tensor3& delta1,
                                                          const Tensor3& delta2, const Mat& phi,
                                                          const Mat& psi);

}  // namespace rbop
