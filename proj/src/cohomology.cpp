#include "rbop/cohomology.hpp"

namespace rbop {

namespace {

void check_degree_cap(Index degree, Index cap, const char* who) {
  if (degree < 0 || degree > cap)
    throw std::out_of_range(std::string(who) + ": degree exceeds the configured cap");
}

}  // namespace

Mat differential_matrix(const Bimodule& bm, const Mat& T, Index degree) {
  const Index mdim = bm.dim();
  const Index adim = bm.algebra().dim();
  const Index dom = pow_index(mdim, degree) * adim;
  const Index cod = pow_index(mdim, degree + 1) * adim;
  Mat out = Mat::Zero(cod, dom);
  for (Index j = 0; j < dom; ++j) {
    Vec e = Vec::Zero(dom);
    e(j) = Rat(1);
    const Cochain image = d_hoch(bm, T, Cochain::from_flattened(degree, mdim, adim, e));
    out.col(j) = image.flattened();
  }
  return out;
}

Subspace cocycles(const Bimodule& bm, const Mat& T, Index degree, Index degree_cap) {
  check_degree_cap(degree, degree_cap, "cocycles");
  return kernel(differential_matrix(bm, T, degree));
}

Subspace coboundaries(const Bimodule& bm, const Mat& T, Index degree, Index degree_cap) {
  check_degree_cap(degree, degree_cap, "coboundaries");
  if (degree == 0) return Subspace::zero(bm.algebra().dim());
  return Subspace::span_of_cols(differential_matrix(bm, T, degree - 1));
}

CohomologyReport cohomology_report(const Bimodule& bm, const Mat& T, Index degree, Index degree_cap) {
  check_degree_cap(degree, degree_cap, "cohomology_report");
  CohomologyReport rep;
  rep.degree = degree;
  rep.cocycle_basis = cocycles(bm, T, degree, degree_cap);
  rep.coboundary_basis = coboundaries(bm, T, degree, degree_cap);
  rep.dim_cocycles = rep.cocycle_basis.dim();
  rep.dim_coboundaries = rep.coboundary_basis.dim();
  rep.dim_cohomology = quotient_dim(rep.cocycle_basis, rep.coboundary_basis);

  if (degree == 0) {
    // Cross-check against the closed-form description of degree-0 cocycles:
    // a T(m) - T(m) a = T(am - ma) for every m.
    const Algebra& A = bm.algebra();
    const Index mdim = bm.dim();
    Mat cond = Mat::Zero(mdim * A.dim(), A.dim());
    for (Index j = 0; j < A.dim(); ++j) {
      const Vec a = A.basis(j);
      for (Index u = 0; u < mdim; ++u) {
        const Vec m = bm.basis(u);
        const Vec Tm = T * m;
        const Vec val =
            A.mul(a, Tm) - A.mul(Tm, a) - T * (bm.act_left(a, m) - bm.act_right(m, a));
        for (Index k = 0; k < A.dim(); ++k) cond(u * A.dim() + k, j) = val(k);
      }
    }
    if (!(kernel(cond) == rep.cocycle_basis))
      throw std::logic_error("cohomology_report: degree-0 characterization mismatch");
  }

  // Deterministic complement of B inside Z: keep the cocycle basis rows that
  // grow the span.
  Subspace span = rep.coboundary_basis;
  const Mat& z = rep.cocycle_basis.basis();
  for (Index i = 0; i < z.rows(); ++i) {
    const Vec v = z.row(i).transpose();
    if (span.contains(v)) continue;
    Mat grown(span.dim() + 1, span.ambient_dim());
    grown.topRows(span.dim()) = span.basis();
    grown.row(span.dim()) = z.row(i);
    span = Subspace::span_of_rows(grown);
    rep.representatives.push_back(Cochain::from_flattened(degree, bm.dim(), bm.algebra().dim(), v));
  }
  return rep;
}

bool is_cohomologous(const Bimodule& bm, const Mat& T, const Cochain& f, const Cochain& g) {
  if (f.degree() != g.degree() || f.module_dim() != g.module_dim() || f.alg_dim() != g.alg_dim())
    throw std::invalid_argument("is_cohomologous: cochain shape mismatch");
  const Index n = f.degree();
  if (!d_hoch(bm, T, f).is_zero() || !d_hoch(bm, T, g).is_zero())
    throw std::domain_error("is_cohomologous: inputs must be cocycles");
  const Vec diff = (f - g).flattened();
  if (n == 0) return rbop::is_zero(diff);
  const Mat d = differential_matrix(bm, T, n - 1);
  return std::holds_alternative<SolveSuccess>(solve(d, diff));
}

bool h0_bracket_closure_check(const Bimodule& bm, const Mat& T) {
  const Subspace z0 = cocycles(bm, T, 0);
  const Algebra& A = bm.algebra();
  for (Index i = 0; i < z0.dim(); ++i)
    for (Index j = 0; j < z0.dim(); ++j) {
      const Vec a = z0.basis().row(i).transpose();
      const Vec b = z0.basis().row(j).transpose();
      if (!z0.contains(commutator(A, a, b))) return false;
    }
  return true;
}

}  // namespace rbop
