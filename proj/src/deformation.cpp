#include "rbop/deformation.hpp"

namespace rbop {

namespace {

// m (ad^l_a - ad^r_a), the conjugation by a on A.
Mat adjoint_commutator_matrix(const Algebra& A, const Vec& a) {
  Mat out(A.dim(), A.dim());
  for (Index j = 0; j < A.dim(); ++j) out.col(j) = commutator(A, a, A.basis(j));
  return out;
}

// l_a - r_a on M.
Mat module_commutator_matrix(const Bimodule& bm, const Vec& a) {
  Mat out(bm.dim(), bm.dim());
  for (Index j = 0; j < bm.dim(); ++j) {
    const Vec f = bm.basis(j);
    out.col(j) = bm.act_left(a, f) - bm.act_right(f, a);
  }
  return out;
}

Mat d_hoch_of_element(const Bimodule& bm, const Mat& T, const Vec& a) {
  return d_hoch(bm, T, Cochain::constant(a, bm.dim())).linear_map();
}

// Polynomials in t with matrix coefficients, exact and truncation-aware.
using TPoly = std::vector<Mat>;

Mat tpoly_at(const TPoly& p, Index k) {
  if (k < 0 || k >= static_cast<Index>(p.size()))
    return Mat();  // caller-side zero handling via size query
  return p[static_cast<size_t>(k)];
}

}  // namespace

Mat TruncatedDeformation::term_at(Index i) const {
  if (i == 0) return base;
  if (i <= order()) return terms[static_cast<size_t>(i - 1)];
  return Mat::Zero(base.rows(), base.cols());
}

OrderCheckResult check_order(const TruncatedDeformation& d) {
  const Bimodule& bm = d.bimodule;
  const Algebra& A = bm.algebra();
  const Index mdim = bm.dim();
  for (const Mat& t : d.terms)
    if (t.rows() != d.base.rows() || t.cols() != d.base.cols())
      throw std::invalid_argument("check_order: term shape mismatch");

  OrderCheckResult out;
  out.residual = Cochain(2, mdim, A.dim());
  const Rat half(1, 2);
  for (Index k = 0; k <= d.order(); ++k) {
    // Raw order-k equation, as a degree-2 cochain.
    Cochain raw(2, mdim, A.dim());
    for (Index u = 0; u < mdim; ++u)
      for (Index v = 0; v < mdim; ++v) {
        Vec acc = Vec::Zero(A.dim());
        const Vec fu = bm.basis(u);
        const Vec fv = bm.basis(v);
        for (Index i = 0; i <= k; ++i) {
          const Mat Ti = d.term_at(i);
          const Mat Tj = d.term_at(k - i);
          acc += A.mul(Ti * fu, Tj * fv);
          acc -= Ti * (bm.act_right(fu, Tj * fv) + bm.act_left(Tj * fu, fv));
        }
        raw.table().row(u * mdim + v) = acc.transpose();
      }

    // The raw sum equals -1/2 sum_{i+j=k} [[T_i, T_j]] identically; check it.
    Cochain bracket_all(2, mdim, A.dim());
    for (Index i = 0; i <= k; ++i) {
      bracket_all = bracket_all + half * derived_bracket(bm, Cochain::linear(d.term_at(i)),
                                                         Cochain::linear(d.term_at(k - i)));
    }
    if (!(raw + bracket_all).is_zero())
      throw std::logic_error("check_order: raw and bracket formulations disagree");

    // The order-k equation in its bracket form:
    // [[T, T_k]] = -1/2 sum_{i+j=k, i,j>=1} [[T_i, T_j]].
    Cochain def_e = derived_bracket(bm, Cochain::linear(d.base), Cochain::linear(d.term_at(k)));
    for (Index i = 1; i <= k - 1; ++i) {
      def_e = def_e + half * derived_bracket(bm, Cochain::linear(d.term_at(i)),
                                             Cochain::linear(d.term_at(k - i)));
    }
    if (def_e.is_zero() != raw.is_zero())
      throw std::logic_error("check_order: bracket-form equation disagrees with the raw equation");

    if (!raw.is_zero()) {
      out.ok = false;
      out.failing_order = k;
      out.residual = raw;
      return out;
    }
  }
  out.ok = true;
  return out;
}

LinearGeneratorReport linear_deformation_generates(const Bimodule& bm, const Mat& T, const Mat& U) {
  LinearGeneratorReport rep;
  rep.is_cocycle = d_hoch(bm, T, Cochain::linear(U)).is_zero();
  rep.is_o_operator = is_o_operator(bm, U);
  return rep;
}

Infinitesimal infinitesimal(const TruncatedDeformation& d) {
  if (d.order() < 1) throw std::invalid_argument("infinitesimal: deformation has no linear term");
  TruncatedDeformation head{d.bimodule, d.base, {d.terms.front()}};
  const OrderCheckResult chk = check_order(head);
  if (!chk.ok) throw std::invalid_argument("infinitesimal: deformation equations fail through order 1");
  Infinitesimal out{Cochain::linear(d.terms.front()), false};
  out.is_cocycle = d_hoch(d.bimodule, d.base, out.value).is_zero();
  return out;
}

TruncatedDeformation trivial_deformation(const Bimodule& bm, const Mat& T, const Vec& a) {
  if (!is_nijenhuis_element(bm, T, a).ok())
    throw std::invalid_argument("trivial_deformation: a is not a Nijenhuis element");
  const Mat U = d_hoch_of_element(bm, T, a);
  TruncatedDeformation d{bm, T, {U}};
  if (!linear_deformation_generates(bm, T, U).ok())
    throw std::logic_error("trivial_deformation: d_H(a) fails to generate a linear deformation");
  if (!linear_equivalence_check(bm, T, U, Mat::Zero(T.rows(), T.cols()), a).ok())
    throw std::logic_error("trivial_deformation: equivalence pair fails to verify");
  return d;
}

LinearEquivalenceReport linear_equivalence_check(const Bimodule& bm, const Mat& T, const Mat& U1,
                                                 const Mat& U2, const Vec& a) {
  const Algebra& A = bm.algebra();
  LinearEquivalenceReport rep;
  rep.generator_1 = linear_deformation_generates(bm, T, U1);
  rep.generator_2 = linear_deformation_generates(bm, T, U2);

  rep.commutator_products_vanish = true;
  for (Index i = 0; i < A.dim() && rep.commutator_products_vanish; ++i)
    for (Index j = 0; j < A.dim(); ++j) {
      const Vec cb = commutator(A, a, A.basis(i));
      const Vec cc = commutator(A, a, A.basis(j));
      if (!rbop::is_zero(A.mul(cb, cc))) {
        rep.commutator_products_vanish = false;
        break;
      }
    }

  rep.infinitesimal_difference = (U1 - U2 == d_hoch_of_element(bm, T, a));

  rep.conjugation_identity = true;
  for (Index u = 0; u < bm.dim(); ++u) {
    const Vec m = bm.basis(u);
    const Vec lhs = commutator(A, a, Vec(U1 * m));
    const Vec rhs = U2 * (bm.act_left(a, m) - bm.act_right(m, a));
    if (lhs != rhs) {
      rep.conjugation_identity = false;
      break;
    }
  }

  rep.left_action_compatible = true;
  rep.right_action_compatible = true;
  for (Index i = 0; i < A.dim(); ++i)
    for (Index u = 0; u < bm.dim(); ++u) {
      const Vec cb = commutator(A, a, A.basis(i));
      const Vec m = bm.basis(u);
      const Vec am = bm.act_left(a, m);
      const Vec ma = bm.act_right(m, a);
      if (bm.act_left(cb, am) != bm.act_left(cb, ma)) rep.left_action_compatible = false;
      if (bm.act_right(am, cb) != bm.act_right(ma, cb)) rep.right_action_compatible = false;
    }

  // The pair (id + t(ad^l_a - ad^r_a), id + t(l_a - r_a)) as an O-morphism
  // from T + t U1 to T + t U2, all t-coefficients.
  const Mat phi0 = Mat::Identity(A.dim(), A.dim());
  const Mat phi1 = adjoint_commutator_matrix(A, a);
  const Mat psi0 = Mat::Identity(bm.dim(), bm.dim());
  const Mat psi1 = module_commutator_matrix(bm, a);
  const TPoly phi{phi0, phi1};
  const TPoly psi{psi0, psi1};
  const TPoly src{T, U1};
  const TPoly dst{T, U2};

  rep.morphism_all_orders = true;
  const Index top = 2;  // all factors are linear in t
  for (Index k = 0; k <= top && rep.morphism_all_orders; ++k) {
    // phi_t(b) phi_t(c) = phi_t(b c)
    for (Index i = 0; i < A.dim() && rep.morphism_all_orders; ++i)
      for (Index j = 0; j < A.dim(); ++j) {
        Vec acc = Vec::Zero(A.dim());
        for (Index p = 0; p <= k; ++p) {
          const Mat fp = tpoly_at(phi, p);
          const Mat fq = tpoly_at(phi, k - p);
          if (fp.size() == 0 || fq.size() == 0) continue;
          acc += A.mul(fp * A.basis(i), fq * A.basis(j));
        }
        const Mat fk = tpoly_at(phi, k);
        if (fk.size() != 0) acc -= fk * A.mul_basis(i, j);
        if (!rbop::is_zero(acc)) {
          rep.morphism_all_orders = false;
          break;
        }
      }
    // dst_t psi_t = phi_t src_t
    for (Index u = 0; u < bm.dim() && rep.morphism_all_orders; ++u) {
      Vec acc = Vec::Zero(A.dim());
      for (Index p = 0; p <= k; ++p) {
        const Mat xp = tpoly_at(dst, p);
        const Mat yq = tpoly_at(psi, k - p);
        if (xp.size() != 0 && yq.size() != 0) acc += xp * (yq * bm.basis(u));
        const Mat fp = tpoly_at(phi, p);
        const Mat sq = tpoly_at(src, k - p);
        if (fp.size() != 0 && sq.size() != 0) acc -= fp * (sq * bm.basis(u));
      }
      if (!rbop::is_zero(acc)) rep.morphism_all_orders = false;
    }
    // phi_t(b) psi_t(m) = psi_t(b m) and psi_t(m) phi_t(b) = psi_t(m b)
    for (Index i = 0; i < A.dim() && rep.morphism_all_orders; ++i)
      for (Index u = 0; u < bm.dim(); ++u) {
        const Vec b = A.basis(i);
        const Vec m = bm.basis(u);
        Vec accl = Vec::Zero(bm.dim());
        Vec accr = Vec::Zero(bm.dim());
        for (Index p = 0; p <= k; ++p) {
          const Mat fp = tpoly_at(phi, p);
          const Mat yq = tpoly_at(psi, k - p);
          if (fp.size() == 0 || yq.size() == 0) continue;
          accl += bm.act_left(fp * b, yq * m);
          accr += bm.act_right(yq * m, fp * b);
        }
        const Mat yk = tpoly_at(psi, k);
        if (yk.size() != 0) {
          accl -= yk * bm.act_left(b, m);
          accr -= yk * bm.act_right(m, b);
        }
        if (!rbop::is_zero(accl) || !rbop::is_zero(accr)) {
          rep.morphism_all_orders = false;
          break;
        }
      }
  }
  return rep;
}

ObstructionResult obstruction(const TruncatedDeformation& d) {
  const OrderCheckResult chk = check_order(d);
  if (!chk.ok) throw std::invalid_argument("obstruction: deformation equations fail");
  const Bimodule& bm = d.bimodule;
  const Algebra& A = bm.algebra();
  const Index mdim = bm.dim();
  const Index n = d.order();

  ObstructionResult out{Cochain(2, mdim, A.dim()), false, false, std::nullopt, std::nullopt};
  for (Index u = 0; u < mdim; ++u)
    for (Index v = 0; v < mdim; ++v) {
      Vec acc = Vec::Zero(A.dim());
      const Vec fu = bm.basis(u);
      const Vec fv = bm.basis(v);
      for (Index i = 1; i <= n; ++i) {
        const Index j = n + 1 - i;
        if (j < 1 || j > n) continue;
        const Mat Ti = d.term_at(i);
        const Mat Tj = d.term_at(j);
        acc += A.mul(Ti * fu, Tj * fv);
        acc -= Ti * (bm.act_right(fu, Tj * fv) + bm.act_left(Tj * fu, fv));
      }
      out.cocycle.table().row(u * mdim + v) = acc.transpose();
    }

  out.is_cocycle_verified = d_hoch(bm, d.base, out.cocycle).is_zero();

  // The order-(n+1) equation reads d_H(T_{n+1}) + Ob = 0, so the extension
  // solves d_H(X) = -Ob. Solvability is equivalent to [Ob] = 0 either way.
  const Mat dmat = differential_matrix(bm, d.base, 1);
  const Vec rhs = -out.cocycle.flattened();
  const SolveResult sol = solve(dmat, rhs);
  if (const auto* s = std::get_if<SolveSuccess>(&sol)) {
    out.class_trivial = true;
    out.extension = Cochain::from_flattened(1, mdim, A.dim(), s->x).linear_map();
  } else {
    out.class_trivial = false;
    out.certificate = std::get<SolveCertificate>(sol).c;
  }
  return out;
}

FormalEquivalenceReport formal_equivalence_check(const TruncatedDeformation& d1,
                                                 const TruncatedDeformation& d2, const Vec& a,
                                                 const std::vector<Mat>& phi_tail,
                                                 const std::vector<Mat>& psi_tail, Index order) {
  const Bimodule& bm = d1.bimodule;
  const Algebra& A = bm.algebra();
  if (!(d2.bimodule == bm)) throw std::invalid_argument("formal_equivalence_check: bimodule mismatch");

  FormalEquivalenceReport rep;
  TruncatedDeformation t1 = d1;
  TruncatedDeformation t2 = d2;
  while (t1.order() < order) t1.terms.push_back(Mat::Zero(t1.base.rows(), t1.base.cols()));
  while (t2.order() < order) t2.terms.push_back(Mat::Zero(t2.base.rows(), t2.base.cols()));
  rep.preconditions_ok = check_order(t1).ok && check_order(t2).ok;

  TPoly phi{Mat::Identity(A.dim(), A.dim()), adjoint_commutator_matrix(A, a)};
  TPoly psi{Mat::Identity(bm.dim(), bm.dim()), module_commutator_matrix(bm, a)};
  for (const Mat& p : phi_tail) phi.push_back(p);
  for (const Mat& p : psi_tail) psi.push_back(p);
  phi.resize(static_cast<size_t>(order + 1), Mat::Zero(A.dim(), A.dim()));
  psi.resize(static_cast<size_t>(order + 1), Mat::Zero(bm.dim(), bm.dim()));

  for (Index k = 0; k <= order; ++k) {
    bool ok_morphism = true;
    for (Index i = 0; i < A.dim() && ok_morphism; ++i)
      for (Index j = 0; j < A.dim(); ++j) {
        Vec acc = Vec::Zero(A.dim());
        for (Index p = 0; p <= k; ++p)
          acc += A.mul(phi[static_cast<size_t>(p)] * A.basis(i), phi[static_cast<size_t>(k - p)] * A.basis(j));
        acc -= phi[static_cast<size_t>(k)] * A.mul_basis(i, j);
        if (!rbop::is_zero(acc)) {
          ok_morphism = false;
          break;
        }
      }
    if (!ok_morphism) rep.failed_morphism.push_back(k);

    bool ok_intertwine = true;
    for (Index u = 0; u < bm.dim(); ++u) {
      Vec acc = Vec::Zero(A.dim());
      for (Index p = 0; p <= k; ++p) {
        acc += t2.term_at(p) * (psi[static_cast<size_t>(k - p)] * bm.basis(u));
        acc -= phi[static_cast<size_t>(p)] * (t1.term_at(k - p) * bm.basis(u));
      }
      if (!rbop::is_zero(acc)) {
        ok_intertwine = false;
        break;
      }
    }
    if (!ok_intertwine) rep.failed_intertwine.push_back(k);

    bool ok_left = true, ok_right = true;
    for (Index i = 0; i < A.dim(); ++i)
      for (Index u = 0; u < bm.dim(); ++u) {
        const Vec b = A.basis(i);
        const Vec m = bm.basis(u);
        Vec accl = Vec::Zero(bm.dim());
        Vec accr = Vec::Zero(bm.dim());
        for (Index p = 0; p <= k; ++p) {
          accl += bm.act_left(phi[static_cast<size_t>(p)] * b, psi[static_cast<size_t>(k - p)] * m);
          accr += bm.act_right(psi[static_cast<size_t>(k - p)] * m, phi[static_cast<size_t>(p)] * b);
        }
        accl -= psi[static_cast<size_t>(k)] * bm.act_left(b, m);
        accr -= psi[static_cast<size_t>(k)] * bm.act_right(m, b);
        if (!rbop::is_zero(accl)) ok_left = false;
        if (!rbop::is_zero(accr)) ok_right = false;
      }
    if (!ok_left) rep.failed_left.push_back(k);
    if (!ok_right) rep.failed_right.push_back(k);
  }
  return rep;
}

RigidityReport rigidity_certificate(const Bimodule& bm, const Mat& T, const std::vector<Vec>& candidates) {
  RigidityReport rep;
  rep.all_candidates_nijenhuis = true;
  std::vector<Vec> coboundaries;
  for (const Vec& a : candidates) {
    rep.candidate_reports.push_back(is_nijenhuis_element(bm, T, a));
    if (rep.candidate_reports.back().ok()) {
      coboundaries.push_back(Cochain::linear(d_hoch_of_element(bm, T, a)).flattened());
    } else {
      rep.all_candidates_nijenhuis = false;
    }
  }

  const Subspace z1 = cocycles(bm, T, 1);
  rep.dim_z1 = z1.dim();
  const Index ambient = z1.ambient_dim();
  Mat span_rows(static_cast<Index>(coboundaries.size()), ambient);
  for (Index i = 0; i < span_rows.rows(); ++i) span_rows.row(i) = coboundaries[static_cast<size_t>(i)].transpose();
  const Subspace witness_span = Subspace::span_of_rows(span_rows);

  rep.z1_covered = true;
  for (Index i = 0; i < z1.dim(); ++i) {
    const Vec v = z1.basis().row(i).transpose();
    if (!witness_span.contains(v)) {
      rep.z1_covered = false;
      rep.uncovered = Cochain::from_flattened(1, bm.dim(), bm.algebra().dim(), v);
      break;
    }
  }
  return rep;
}

bool dendriform_transport_check(const TruncatedDeformation& d) {
  const OrderCheckResult chk = check_order(d);
  if (!chk.ok) throw std::invalid_argument("dendriform_transport_check: deformation equations fail");
  const Bimodule& bm = d.bimodule;
  const Index mdim = bm.dim();

  auto prec = [&](Index i, const Vec& x, const Vec& y) { return bm.act_right(x, d.term_at(i) * y); };
  auto succ = [&](Index i, const Vec& x, const Vec& y) { return bm.act_left(d.term_at(i) * x, y); };

  for (Index k = 0; k <= d.order(); ++k) {
    for (Index a = 0; a < mdim; ++a)
      for (Index b = 0; b < mdim; ++b)
        for (Index c = 0; c < mdim; ++c) {
          const Vec ea = bm.basis(a), eb = bm.basis(b), ec = bm.basis(c);
          Vec ax1 = Vec::Zero(mdim), ax2 = Vec::Zero(mdim), ax3 = Vec::Zero(mdim);
          for (Index i = 0; i <= k; ++i) {
            const Index j = k - i;
            ax1 += prec(j, prec(i, ea, eb), ec) - prec(i, ea, prec(j, eb, ec) + succ(j, eb, ec));
            ax2 += prec(j, succ(i, ea, eb), ec) - succ(i, ea, prec(j, eb, ec));
            ax3 += succ(j, prec(i, ea, eb) + succ(i, ea, eb), ec) - succ(i, ea, succ(j, eb, ec));
          }
          if (!rbop::is_zero(ax1) || !rbop::is_zero(ax2) || !rbop::is_zero(ax3)) return false;
        }
  }
  return true;
}

}  // namespace rbop
