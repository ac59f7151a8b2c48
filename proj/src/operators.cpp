#include "rbop/operators.hpp"

namespace rbop {

namespace {

void check_operator_shape(const Bimodule& bm, const Mat& T, const char* who) {
  if (T.rows() != bm.algebra().dim() || T.cols() != bm.dim())
    throw std::invalid_argument(std::string(who) + ": operator shape mismatch");
}

void require_o_operator(const Bimodule& bm, const Mat& T, const char* who) {
  if (!is_o_operator(bm, T)) throw std::invalid_argument(std::string(who) + ": T is not an O-operator");
}

Algebra direct_sum(const Algebra& x, const Algebra& y) {
  const Index n = x.dim();
  const Index m = y.dim();
  Tensor3 mu(n + m, n + m, n + m);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) mu(i, j, k) = x.structure()(i, j, k);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      for (Index k = 0; k < m; ++k) mu(n + i, n + j, n + k) = y.structure()(i, j, k);
  return Algebra(n + m, std::move(mu));
}

// Closure of the column span of `gens` under the product of `alg`.
bool span_is_subalgebra(const Algebra& alg, const Mat& gens) {
  const Subspace space = Subspace::span_of_cols(gens);
  for (Index i = 0; i < gens.cols(); ++i)
    for (Index j = 0; j < gens.cols(); ++j) {
      if (!space.contains(alg.mul(gens.col(i), gens.col(j)))) return false;
    }
  return true;
}

}  // namespace

Defect o_operator_defect(const Bimodule& bm, const Mat& T) {
  check_operator_shape(bm, T, "o_operator_defect");
  const Algebra& A = bm.algebra();
  const Index mdim = bm.dim();
  Defect out{Cochain(2, mdim, A.dim()), {}};
  for (Index u = 0; u < mdim; ++u)
    for (Index v = 0; v < mdim; ++v) {
      const Vec fu = bm.basis(u);
      const Vec fv = bm.basis(v);
      const Vec lhs = A.mul(T * fu, T * fv);
      const Vec rhs = T * (bm.act_right(fu, T * fv) + bm.act_left(T * fu, fv));
      const Vec diff = lhs - rhs;
      out.difference.table().row(u * mdim + v) = diff.transpose();
      if (!rbop::is_zero(diff)) out.witnesses.push_back({u, v, lhs, rhs});
    }
  return out;
}

bool is_o_operator(const Bimodule& bm, const Mat& T) { return o_operator_defect(bm, T).is_zero(); }

bool is_rota_baxter(const Algebra& alg, const Mat& R, const Rat& weight) {
  if (R.rows() != alg.dim() || R.cols() != alg.dim())
    throw std::invalid_argument("is_rota_baxter: shape mismatch");
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = 0; j < alg.dim(); ++j) {
      const Vec a = alg.basis(i);
      const Vec b = alg.basis(j);
      const Vec lhs = alg.mul(R * a, R * b);
      const Vec rhs = R * (alg.mul(a, R * b) + alg.mul(R * a, b) + weight * alg.mul_basis(i, j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_left_averaging(const Algebra& alg, const Mat& P) {
  if (P.rows() != alg.dim() || P.cols() != alg.dim())
    throw std::invalid_argument("is_left_averaging: shape mismatch");
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = 0; j < alg.dim(); ++j) {
      const Vec a = alg.basis(i);
      const Vec b = alg.basis(j);
      if (alg.mul(P * a, P * b) != P * alg.mul(P * a, b)) return false;
    }
  return true;
}

bool is_right_averaging(const Algebra& alg, const Mat& P) {
  if (P.rows() != alg.dim() || P.cols() != alg.dim())
    throw std::invalid_argument("is_right_averaging: shape mismatch");
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = 0; j < alg.dim(); ++j) {
      const Vec a = alg.basis(i);
      const Vec b = alg.basis(j);
      if (alg.mul(P * a, P * b) != P * alg.mul(a, P * b)) return false;
    }
  return true;
}

bool is_averaging(const Algebra& alg, const Mat& P) {
  return is_left_averaging(alg, P) && is_right_averaging(alg, P);
}

bool dendriform_axioms_hold(const DendriformPair& d) {
  const Index m = d.dim;
  auto prec = [&](const Vec& x, const Vec& y) {
    Vec out = Vec::Zero(m);
    for (Index u = 0; u < m; ++u)
      for (Index v = 0; v < m; ++v) {
        const Rat c = x(u) * y(v);
        if (c.is_zero()) continue;
        for (Index w = 0; w < m; ++w) out(w) += c * d.prec(u, v, w);
      }
    return out;
  };
  auto succ = [&](const Vec& x, const Vec& y) {
    Vec out = Vec::Zero(m);
    for (Index u = 0; u < m; ++u)
      for (Index v = 0; v < m; ++v) {
        const Rat c = x(u) * y(v);
        if (c.is_zero()) continue;
        for (Index w = 0; w < m; ++w) out(w) += c * d.succ(u, v, w);
      }
    return out;
  };
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      for (Index c = 0; c < m; ++c) {
        Vec ea = Vec::Zero(m), eb = Vec::Zero(m), ec = Vec::Zero(m);
        ea(a) = Rat(1);
        eb(b) = Rat(1);
        ec(c) = Rat(1);
        // (a < b) < c = a < (b < c + b > c)
        if (prec(prec(ea, eb), ec) != prec(ea, prec(eb, ec) + succ(eb, ec))) return false;
        // (a > b) < c = a > (b < c)
        if (prec(succ(ea, eb), ec) != succ(ea, prec(eb, ec))) return false;
        // (a < b + a > b) > c = a > (b > c)
        if (succ(prec(ea, eb) + succ(ea, eb), ec) != succ(ea, succ(eb, ec))) return false;
      }
  return true;
}

bool prelie_identity_holds(Index dim, const Tensor3& prod) {
  auto mul = [&](const Vec& x, const Vec& y) {
    Vec out = Vec::Zero(dim);
    for (Index u = 0; u < dim; ++u)
      for (Index v = 0; v < dim; ++v) {
        const Rat c = x(u) * y(v);
        if (c.is_zero()) continue;
        for (Index w = 0; w < dim; ++w) out(w) += c * prod(u, v, w);
      }
    return out;
  };
  for (Index a = 0; a < dim; ++a)
    for (Index b = 0; b < dim; ++b)
      for (Index c = 0; c < dim; ++c) {
        Vec ea = Vec::Zero(dim), eb = Vec::Zero(dim), ec = Vec::Zero(dim);
        ea(a) = Rat(1);
        eb(b) = Rat(1);
        ec(c) = Rat(1);
        const Vec lhs = mul(mul(ea, eb), ec) - mul(ea, mul(eb, ec));
        const Vec rhs = mul(mul(eb, ea), ec) - mul(eb, mul(ea, ec));
        if (lhs != rhs) return false;
      }
  return true;
}

DendriformPair induced_dendriform(const Bimodule& bm, const Mat& T) {
  require_o_operator(bm, T, "induced_dendriform");
  const Index m = bm.dim();
  DendriformPair d{m, Tensor3(m, m, m), Tensor3(m, m, m)};
  for (Index u = 0; u < m; ++u)
    for (Index v = 0; v < m; ++v) {
      const Vec p = bm.act_right(bm.basis(u), T * bm.basis(v));  // u T(v)
      const Vec s = bm.act_left(T * bm.basis(u), bm.basis(v));   // T(u) v
      for (Index w = 0; w < m; ++w) {
        d.prec(u, v, w) = p(w);
        d.succ(u, v, w) = s(w);
      }
    }
  if (!dendriform_axioms_hold(d)) throw std::logic_error("induced_dendriform: axioms failed for an O-operator");
  return d;
}

Algebra induced_star(const Bimodule& bm, const Mat& T) {
  const DendriformPair d = induced_dendriform(bm, T);
  Tensor3 mu(d.dim, d.dim, d.dim);
  for (Index u = 0; u < d.dim; ++u)
    for (Index v = 0; v < d.dim; ++v)
      for (Index w = 0; w < d.dim; ++w) mu(u, v, w) = d.prec(u, v, w) + d.succ(u, v, w);
  return Algebra(d.dim, std::move(mu));
}

Tensor3 induced_prelie(const Bimodule& bm, const Mat& T) {
  require_o_operator(bm, T, "induced_prelie");
  const Index m = bm.dim();
  Tensor3 prod(m, m, m);
  for (Index u = 0; u < m; ++u)
    for (Index v = 0; v < m; ++v) {
      // u o v = T(u) v - v T(u)
      const Vec w = bm.act_left(T * bm.basis(u), bm.basis(v)) - bm.act_right(bm.basis(v), T * bm.basis(u));
      for (Index k = 0; k < m; ++k) prod(u, v, k) = w(k);
    }
  return prod;
}

Bimodule induced_bimodule_on_A(const Bimodule& bm, const Mat& T) {
  require_o_operator(bm, T, "induced_bimodule_on_A");
  const Algebra star = induced_star(bm, T);
  const Algebra& A = bm.algebra();
  const Index m = bm.dim();
  const Index n = A.dim();
  Tensor3 left(m, n, n), right(n, m, n);
  for (Index u = 0; u < m; ++u)
    for (Index x = 0; x < n; ++x) {
      const Vec fu = bm.basis(u);
      const Vec ex = A.basis(x);
      const Vec l = A.mul(T * fu, ex) - T * bm.act_right(fu, ex);  // T(m) a - T(m a)
      const Vec r = A.mul(ex, T * fu) - T * bm.act_left(ex, fu);   // a T(m) - T(a m)
      for (Index y = 0; y < n; ++y) {
        left(u, x, y) = l(y);
        right(x, u, y) = r(y);
      }
    }
  return Bimodule(star, n, std::move(left), std::move(right));
}

bool is_nijenhuis_operator(const Algebra& alg, const Mat& N) {
  if (N.rows() != alg.dim() || N.cols() != alg.dim())
    throw std::invalid_argument("is_nijenhuis_operator: shape mismatch");
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = 0; j < alg.dim(); ++j) {
      const Vec a = alg.basis(i);
      const Vec b = alg.basis(j);
      const Vec lhs = alg.mul(N * a, N * b);
      const Vec rhs = N * (alg.mul(N * a, b) + alg.mul(a, N * b) - N * alg.mul_basis(i, j));
      if (lhs != rhs) return false;
    }
  return true;
}

bool graph_is_subalgebra(const Bimodule& bm, const Mat& T) {
  check_operator_shape(bm, T, "graph_is_subalgebra");
  const Algebra sd = semidirect_product(bm.algebra(), bm);
  const Index n = bm.algebra().dim();
  const Index m = bm.dim();
  Mat gens = Mat::Zero(n + m, m);
  gens.block(0, 0, n, m) = T;
  gens.block(n, 0, m, m) = Mat::Identity(m, m);
  return span_is_subalgebra(sd, gens);
}

bool nijenhuis_lift_check(const Bimodule& bm, const Mat& T) {
  check_operator_shape(bm, T, "nijenhuis_lift_check");
  const Algebra sd = semidirect_product(bm.algebra(), bm);
  const Index n = bm.algebra().dim();
  const Index m = bm.dim();
  Mat N = Mat::Zero(n + m, n + m);
  N.block(0, n, n, m) = T;
  return is_nijenhuis_operator(sd, N);
}

OMorphismReport is_o_morphism(const Bimodule& bm, const Mat& T, const Mat& Tp, const Mat& phi, const Mat& psi) {
  check_operator_shape(bm, T, "is_o_morphism");
  check_operator_shape(bm, Tp, "is_o_morphism");
  const Algebra& A = bm.algebra();
  if (phi.rows() != A.dim() || phi.cols() != A.dim() || psi.rows() != bm.dim() || psi.cols() != bm.dim())
    throw std::invalid_argument("is_o_morphism: morphism shape mismatch");
  OMorphismReport rep;
  rep.phi_is_algebra_morphism = is_algebra_morphism(phi, A, A);
  rep.intertwines = (Tp * psi == phi * T);
  rep.left_compatible = true;
  rep.right_compatible = true;
  for (Index i = 0; i < A.dim(); ++i)
    for (Index u = 0; u < bm.dim(); ++u) {
      const Vec a = A.basis(i);
      const Vec mvec = bm.basis(u);
      if (bm.act_left(phi * a, psi * mvec) != psi * bm.act_left(a, mvec)) rep.left_compatible = false;
      if (bm.act_right(psi * mvec, phi * a) != psi * bm.act_right(mvec, a)) rep.right_compatible = false;
    }
  return rep;
}

bool o_morphism_graph_check(const Bimodule& bm, const Mat& phi, const Mat& psi) {
  const Algebra sd = semidirect_product(bm.algebra(), bm);
  const Algebra twice = direct_sum(sd, sd);
  const Index n = bm.algebra().dim();
  const Index m = bm.dim();
  const Index d = n + m;
  Mat gens = Mat::Zero(2 * d, d);
  gens.block(0, 0, d, d) = Mat::Identity(d, d);
  gens.block(d, 0, n, n) = phi;
  gens.block(d + n, n, m, m) = psi;
  return span_is_subalgebra(twice, gens);
}

NijenhuisElementReport is_nijenhuis_element(const Bimodule& bm, const Mat& T, const Vec& a) {
  check_operator_shape(bm, T, "is_nijenhuis_element");
  require_o_operator(bm, T, "is_nijenhuis_element");
  const Algebra& A = bm.algebra();
  if (a.size() != A.dim()) throw std::invalid_argument("is_nijenhuis_element: element shape mismatch");
  NijenhuisElementReport rep;

  rep.differential_image_central = true;
  for (Index u = 0; u < bm.dim(); ++u) {
    const Vec m = bm.basis(u);
    const Vec Tm = T * m;
    // l_T(m, a) - r_T(a, m)
    const Vec x = A.mul(Tm, a) - T * bm.act_right(m, a) - A.mul(a, Tm) + T * bm.act_left(a, m);
    if (!rbop::is_zero(commutator(A, a, x))) {
      rep.differential_image_central = false;
      break;
    }
  }

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
  return rep;
}

bool prelie_nijenhuis_check(const Bimodule& bm, const Mat& T, const Vec& a) {
  const Tensor3 prod = induced_prelie(bm, T);
  const Index m = bm.dim();
  Mat N(m, m);
  for (Index u = 0; u < m; ++u) {
    const Vec col = bm.act_left(a, bm.basis(u)) - bm.act_right(bm.basis(u), a);
    N.col(u) = col;
  }
  auto mul = [&](const Vec& x, const Vec& y) {
    Vec out = Vec::Zero(m);
    for (Index u = 0; u < m; ++u)
      for (Index v = 0; v < m; ++v) {
        const Rat c = x(u) * y(v);
        if (c.is_zero()) continue;
        for (Index w = 0; w < m; ++w) out(w) += c * prod(u, v, w);
      }
    return out;
  };
  for (Index u = 0; u < m; ++u)
    for (Index v = 0; v < m; ++v) {
      const Vec x = bm.basis(u);
      const Vec y = bm.basis(v);
      const Vec lhs = mul(N * x, N * y);
      const Vec rhs = N * (mul(N * x, y) + mul(x, N * y) - N * mul(x, y));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace rbop
