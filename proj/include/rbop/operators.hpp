#pragma once

#include "rbop/cochain.hpp"

#include <optional>

namespace rbop {

struct DefectWitness {
  Index u, v;
  Vec lhs;  // T(f_u) T(f_v)
  Vec rhs;  // T(f_u T(f_v) + T(f_u) f_v)
};

/// LHS - RHS of the O-operator identity at every module basis pair, as a
/// degree-2 cochain, plus the list of violated pairs. Zero exactly when T is
/// an O-operator; equals -1/2 [[T, T]] (relation covered by tests).
struct Defect {
  Cochain difference;
  std::vector<DefectWitness> witnesses;
  bool is_zero() const { return witnesses.empty(); }
};

Defect o_operator_defect(const Bimodule& bm, const Mat& T);
bool is_o_operator(const Bimodule& bm, const Mat& T);

/// R(a) R(b) = R(a R(b) + R(a) b + weight a b) on all basis pairs.
bool is_rota_baxter(const Algebra& alg, const Mat& R, const Rat& weight);

bool is_left_averaging(const Algebra& alg, const Mat& P);
bool is_right_averaging(const Algebra& alg, const Mat& P);
bool is_averaging(const Algebra& alg, const Mat& P);

/// prec(u, v, w) / succ(u, v, w): f_w coefficients of f_u T(f_v) and T(f_u) f_v.
struct DendriformPair {
  Index dim = 0;
  Tensor3 prec, succ;
};

/// Checks the three splitting axioms at every basis triple.
bool dendriform_axioms_hold(const DendriformPair& d);

/// Left pre-Lie identity at every basis triple of the given product tensor.
bool prelie_identity_holds(Index dim, const Tensor3& prod);

/// The structures below refuse to build on a non-O-operator.
DendriformPair induced_dendriform(const Bimodule& bm, const Mat& T);
Algebra induced_star(const Bimodule& bm, const Mat& T);
Tensor3 induced_prelie(const Bimodule& bm, const Mat& T);

/// The (M, star) bimodule structure on A: l(m, a) = T(m) a - T(m a),
/// r(a, m) = a T(m) - T(a m).
Bimodule induced_bimodule_on_A(const Bimodule& bm, const Mat& T);

/// N(a) N(b) = N(N(a) b + a N(b) - N(a b)) on all basis pairs.
bool is_nijenhuis_operator(const Algebra& alg, const Mat& N);

/// Gr(T) = {(T(m), m)} closed under the semidirect product, decided by
/// subspace membership (independent of the defect computation).
bool graph_is_subalgebra(const Bimodule& bm, const Mat& T);

/// N_T = [[0, T], [0, 0]] is a Nijenhuis operator on the semidirect product.
bool nijenhuis_lift_check(const Bimodule& bm, const Mat& T);

struct OMorphismReport {
  bool phi_is_algebra_morphism = false;
  bool intertwines = false;        // T' psi = phi T
  bool left_compatible = false;    // phi(a) psi(m) = psi(a m)
  bool right_compatible = false;   // psi(m) phi(a) = psi(m a)
  bool ok() const { return phi_is_algebra_morphism && intertwines && left_compatible && right_compatible; }
};

/// Morphism of O-operators from T to Tp over the same bimodule.
OMorphismReport is_o_morphism(const Bimodule& bm, const Mat& T, const Mat& Tp, const Mat& phi, const Mat& psi);

/// Cross-check via the graph criterion: Gr((phi, psi)) is a subalgebra of
/// the direct sum of two copies of the semidirect product. This captures the
/// morphism-of-algebras and action-compatibility conditions; the
/// intertwining condition T' psi = phi T is separate.
bool o_morphism_graph_check(const Bimodule& bm, const Mat& phi, const Mat& psi);

struct NijenhuisElementReport {
  bool differential_image_central = false;  // [a, l_T(m,a) - r_T(a,m)] = 0 for all m
  bool commutator_products_vanish = false;  // (ab - ba)(ac - ca) = 0
  bool left_action_compatible = false;      // l_{ab-ba} l_a = l_{ab-ba} r_a
  bool right_action_compatible = false;     // r_{ab-ba} l_a = r_{ab-ba} r_a
  bool ok() const {
    return differential_image_central && commutator_products_vanish && left_action_compatible &&
           right_action_compatible;
  }
};

/// All four condition families, quantified over basis elements; each is
/// multilinear in the quantified slots so basis checks are exhaustive.
/// Requires T to be an O-operator.
NijenhuisElementReport is_nijenhuis_element(const Bimodule& bm, const Mat& T, const Vec& a);

/// l_a - r_a is a Nijenhuis operator for the induced pre-Lie product on M.
bool prelie_nijenhuis_check(const Bimodule& bm, const Mat& T, const Vec& a);

}  // namespace rbop
