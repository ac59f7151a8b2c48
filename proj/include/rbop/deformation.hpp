#pragma once

#include "rbop/cohomology.hpp"

namespace rbop {

/// T_t = T_0 + t T_1 + ... + t^n T_n modulo t^{n+1}, with T_0 the base
/// operator.
struct TruncatedDeformation {
  Bimodule bimodule;
  Mat base;
  std::vector<Mat> terms;  // T_1 .. T_n

  Index order() const { return static_cast<Index>(terms.size()); }
  /// T_i, with T_0 = base and zero beyond the stored order.
  Mat term_at(Index i) const;
};

struct OrderCheckResult {
  bool ok = false;
  Index failing_order = -1;     // first k whose deformation equation fails
  Cochain residual{0, 0, 0};    // degree-2 residual at that order
};

/// Verifies the order-k deformation equations for k = 0 .. order, in both
/// the raw-sum and bracket formulations (cross-checked against each other).
OrderCheckResult check_order(const TruncatedDeformation& d);

/// Conditions for U to generate a linear deformation of T: d_H(U) = 0 and U
/// itself satisfies the O-operator identity.
struct LinearGeneratorReport {
  bool is_cocycle = false;
  bool is_o_operator = false;
  bool ok() const { return is_cocycle && is_o_operator; }
};
LinearGeneratorReport linear_deformation_generates(const Bimodule& bm, const Mat& T, const Mat& U);

struct Infinitesimal {
  Cochain value;  // degree 1
  bool is_cocycle = false;
};
/// The t-linear term of a deformation that is valid through order 1.
Infinitesimal infinitesimal(const TruncatedDeformation& d);

/// T + t d_H(a) for a Nijenhuis element a; verifies the §-guarantees that
/// the result is a valid deformation equivalent to the constant one.
TruncatedDeformation trivial_deformation(const Bimodule& bm, const Mat& T, const Vec& a);

struct LinearEquivalenceReport {
  LinearGeneratorReport generator_1, generator_2;
  bool commutator_products_vanish = false;   // (ab - ba)(ac - ca) = 0
  bool infinitesimal_difference = false;     // U1 - U2 = l_T(., a) - r_T(a, .)
  bool conjugation_identity = false;         // a U1(m) - U1(m) a = U2(am - ma)
  bool left_action_compatible = false;       // (ll-lr) consequence
  bool right_action_compatible = false;      // (rl-rr) consequence
  bool morphism_all_orders = false;          // the pair is an O-morphism, coefficient-wise in t
  bool ok() const {
    return generator_1.ok() && generator_2.ok() && commutator_products_vanish &&
           infinitesimal_difference && conjugation_identity && left_action_compatible &&
           right_action_compatible && morphism_all_orders;
  }
};

/// Equivalence of the linear deformations T + t U1 and T + t U2 via
/// (id + t(ad^l_a - ad^r_a), id + t(l_a - r_a)).
LinearEquivalenceReport linear_equivalence_check(const Bimodule& bm, const Mat& T, const Mat& U1,
                                                 const Mat& U2, const Vec& a);

struct ObstructionResult {
  Cochain cocycle{0, 0, 0};      // Ob_T, degree 2
  bool is_cocycle_verified = false;
  bool class_trivial = false;
  std::optional<Mat> extension;  // T_{n+1} whenever the class is trivial
  std::optional<Vec> certificate;  // row-combination witness that Ob is not a coboundary
};

/// Obstruction to extending a valid order-n deformation one order further.
ObstructionResult obstruction(const TruncatedDeformation& d);

struct FormalEquivalenceReport {
  bool preconditions_ok = false;          // both deformations valid to the requested order
  std::vector<Index> failed_morphism;     // orders where phi_t(b) phi_t(c) = phi_t(bc) fails
  std::vector<Index> failed_intertwine;   // orders where Tbar_t psi_t = phi_t T_t fails
  std::vector<Index> failed_left;         // orders where phi_t(b) psi_t(m) = psi_t(bm) fails
  std::vector<Index> failed_right;        // orders where psi_t(m) phi_t(b) = psi_t(mb) fails
  bool ok() const {
    return preconditions_ok && failed_morphism.empty() && failed_intertwine.empty() &&
           failed_left.empty() && failed_right.empty();
  }
};

/// Equivalence of two formal deformations modulo t^{order+1}, with
/// phi_t = id + t(ad^l_a - ad^r_a) + sum_{i>=2} t^i phi_tail[i-2] and the
/// analogous psi_t.
FormalEquivalenceReport formal_equivalence_check(const TruncatedDeformation& d1,
                                                 const TruncatedDeformation& d2, const Vec& a,
                                                 const std::vector<Mat>& phi_tail,
                                                 const std::vector<Mat>& psi_tail, Index order);

struct RigidityReport {
  std::vector<NijenhuisElementReport> candidate_reports;
  bool all_candidates_nijenhuis = false;
  Index dim_z1 = 0;
  bool z1_covered = false;  // every Z^1 basis vector lies in span{d_H(a_i)}
  std::optional<Cochain> uncovered;
  bool positive() const { return all_candidates_nijenhuis && z1_covered; }
};

/// Certificate toward rigidity: checks the supplied witnesses are Nijenhuis
/// elements and whether their coboundaries span Z^1. A negative report never
/// proves non-rigidity.
RigidityReport rigidity_certificate(const Bimodule& bm, const Mat& T, const std::vector<Vec>& candidates);

/// Every t-coefficient up to the deformation order of each dendriform axiom
/// vanishes for the transported pair m prec_t n = sum t^i m T_i(n),
/// m succ_t n = sum t^i T_i(m) n.
bool dendriform_transport_check(const TruncatedDeformation& d);

}  // namespace rbop
