#pragma once

#include "rbop/operators.hpp"

namespace rbop {

inline constexpr Index kDefaultDegreeCap = 3;

/// Matrix of d_hoch from degree n to degree n + 1 in the lexicographic
/// (u_1, ..., u_n, k) cochain basis.
Mat differential_matrix(const Bimodule& bm, const Mat& T, Index degree);

Subspace cocycles(const Bimodule& bm, const Mat& T, Index degree, Index degree_cap = kDefaultDegreeCap);
Subspace coboundaries(const Bimodule& bm, const Mat& T, Index degree, Index degree_cap = kDefaultDegreeCap);

struct CohomologyReport {
  Index degree = 0;
  Index dim_cocycles = 0;
  Index dim_coboundaries = 0;
  Index dim_cohomology = 0;
  Subspace cocycle_basis = Subspace::zero(0);
  Subspace coboundary_basis = Subspace::zero(0);
  std::vector<Cochain> representatives;  // span a complement of B in Z
};

CohomologyReport cohomology_report(const Bimodule& bm, const Mat& T, Index degree,
                                   Index degree_cap = kDefaultDegreeCap);

/// f - g lies in the coboundary space; both inputs must be cocycles.
bool is_cohomologous(const Bimodule& bm, const Mat& T, const Cochain& f, const Cochain& g);

/// The commutator of any two degree-0 cocycles is again a cocycle.
bool h0_bracket_closure_check(const Bimodule& bm, const Mat& T);

}  // namespace rbop
