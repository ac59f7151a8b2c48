#include "rbop/algebra.hpp"

namespace rbop {

Algebra::Algebra(Index dim, Tensor3 mu, std::vector<std::string> labels)
    : dim_(dim), mu_(std::move(mu)), labels_(std::move(labels)) {
  if (mu_.n0 != dim || mu_.n1 != dim || mu_.n2 != dim)
    throw std::invalid_argument("Algebra: structure tensor shape mismatch");
  if (!labels_.empty() && static_cast<Index>(labels_.size()) != dim)
    throw std::invalid_argument("Algebra: label count mismatch");
}

Vec Algebra::basis(Index i) const {
  Vec e = Vec::Zero(dim_);
  e(i) = Rat(1);
  return e;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("Algebra::mul: dimension mismatch");
  Vec out = Vec::Zero(dim_);
  for (Index i = 0; i < dim_; ++i) {
    if (a(i).is_zero()) continue;
    for (Index j = 0; j < dim_; ++j) {
      if (b(j).is_zero()) continue;
      const Rat c = a(i) * b(j);
      for (Index k = 0; k < dim_; ++k) out(k) += c * mu_(i, j, k);
    }
  }
  return out;
}

Vec Algebra::mul_basis(Index i, Index j) const {
  Vec out(dim_);
  for (Index k = 0; k < dim_; ++k) out(k) = mu_(i, j, k);
  return out;
}

std::vector<AssociativityViolation> validate_algebra(const Algebra& alg) {
  std::vector<AssociativityViolation> out;
  const Index n = alg.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        Vec lhs = alg.mul(alg.mul_basis(i, j), alg.basis(k));
        Vec rhs = alg.mul(alg.basis(i), alg.mul_basis(j, k));
        if (lhs != rhs) out.push_back({i, j, k, std::move(lhs), std::move(rhs)});
      }
  return out;
}

Bimodule::Bimodule(Algebra algebra, Index dim, Tensor3 left, Tensor3 right)
    : algebra_(std::move(algebra)), dim_(dim), left_(std::move(left)), right_(std::move(right)) {
  const Index n = algebra_.dim();
  if (left_.n0 != n || left_.n1 != dim || left_.n2 != dim)
    throw std::invalid_argument("Bimodule: left action tensor shape mismatch");
  if (right_.n0 != dim || right_.n1 != n || right_.n2 != dim)
    throw std::invalid_argument("Bimodule: right action tensor shape mismatch");
}

Vec Bimodule::basis(Index u) const {
  Vec f = Vec::Zero(dim_);
  f(u) = Rat(1);
  return f;
}

Vec Bimodule::act_left(const Vec& a, const Vec& m) const {
  if (a.size() != algebra_.dim() || m.size() != dim_)
    throw std::invalid_argument("Bimodule::act_left: dimension mismatch");
  Vec out = Vec::Zero(dim_);
  for (Index i = 0; i < algebra_.dim(); ++i) {
    if (a(i).is_zero()) continue;
    for (Index u = 0; u < dim_; ++u) {
      if (m(u).is_zero()) continue;
      const Rat c = a(i) * m(u);
      for (Index v = 0; v < dim_; ++v) out(v) += c * left_(i, u, v);
    }
  }
  return out;
}

Vec Bimodule::act_right(const Vec& m, const Vec& a) const {
  if (a.size() != algebra_.dim() || m.size() != dim_)
    throw std::invalid_argument("Bimodule::act_right: dimension mismatch");
  Vec out = Vec::Zero(dim_);
  for (Index u = 0; u < dim_; ++u) {
    if (m(u).is_zero()) continue;
    for (Index i = 0; i < algebra_.dim(); ++i) {
      if (a(i).is_zero()) continue;
      const Rat c = m(u) * a(i);
      for (Index v = 0; v < dim_; ++v) out(v) += c * right_(u, i, v);
    }
  }
  return out;
}

std::vector<BimoduleViolation> validate_bimodule(const Bimodule& bm) {
  std::vector<BimoduleViolation> out;
  const Algebra& A = bm.algebra();
  const Index n = A.dim();
  const Index m = bm.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index u = 0; u < m; ++u) {
        const Vec ei = A.basis(i);
        const Vec ej = A.basis(j);
        const Vec fu = bm.basis(u);
        Vec l1 = bm.act_left(A.mul_basis(i, j), fu);
        Vec r1 = bm.act_left(ei, bm.act_left(ej, fu));
        if (l1 != r1) out.push_back({1, i, j, u, std::move(l1), std::move(r1)});
        Vec l2 = bm.act_left(ei, bm.act_right(fu, ej));
        Vec r2 = bm.act_right(bm.act_left(ei, fu), ej);
        if (l2 != r2) out.push_back({2, i, j, u, std::move(l2), std::move(r2)});
        Vec l3 = bm.act_right(fu, A.mul_basis(i, j));
        Vec r3 = bm.act_right(bm.act_right(fu, ei), ej);
        if (l3 != r3) out.push_back({3, i, j, u, std::move(l3), std::move(r3)});
      }
  return out;
}

Bimodule adjoint_bimodule(const Algebra& alg) {
  const Index n = alg.dim();
  Tensor3 left = alg.structure();
  Tensor3 right = alg.structure();
  return Bimodule(alg, n, std::move(left), std::move(right));
}

Bimodule coadjoint_bimodule(const Algebra& alg) {
  // l(a, f)(b) = f(b a) and r(f, a)(b) = f(a b) on the dual basis:
  // left(i, u, v) = mu(v, i, u), right(u, i, v) = mu(i, v, u).
  const Index n = alg.dim();
  const Tensor3& mu = alg.structure();
  Tensor3 left(n, n, n), right(n, n, n);
  for (Index i = 0; i < n; ++i)
    for (Index u = 0; u < n; ++u)
      for (Index v = 0; v < n; ++v) {
        left(i, u, v) = mu(v, i, u);
        right(u, i, v) = mu(i, v, u);
      }
  return Bimodule(alg, n, std::move(left), std::move(right));
}

Bimodule one_sided_bimodule(const Algebra& alg, Side side) {
  const Index n = alg.dim();
  Tensor3 zero(n, n, n);
  if (side == Side::left) return Bimodule(alg, n, alg.structure(), std::move(zero));
  return Bimodule(alg, n, std::move(zero), alg.structure());
}

Algebra semidirect_product(const Algebra& alg, const Bimodule& bm) {
  if (!(bm.algebra() == alg)) throw std::invalid_argument("semidirect_product: bimodule over a different algebra");
  if (!validate_bimodule(bm).empty()) throw std::invalid_argument("semidirect_product: invalid bimodule");
  const Index n = alg.dim();
  const Index m = bm.dim();
  const Index d = n + m;
  Tensor3 mu(d, d, d);
  const Tensor3& a = alg.structure();
  const Tensor3& l = bm.left_tensor();
  const Tensor3& r = bm.right_tensor();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) mu(i, j, k) = a(i, j, k);
  for (Index i = 0; i < n; ++i)
    for (Index u = 0; u < m; ++u)
      for (Index v = 0; v < m; ++v) mu(i, n + u, n + v) = l(i, u, v);
  for (Index u = 0; u < m; ++u)
    for (Index i = 0; i < n; ++i)
      for (Index v = 0; v < m; ++v) mu(n + u, i, n + v) = r(u, i, v);
  return Algebra(d, std::move(mu));
}

bool is_algebra_morphism(const Mat& phi, const Algebra& source, const Algebra& target) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim())
    throw std::invalid_argument("is_algebra_morphism: shape mismatch");
  for (Index i = 0; i < source.dim(); ++i)
    for (Index j = 0; j < source.dim(); ++j) {
      const Vec lhs = phi * source.mul_basis(i, j);
      const Vec rhs = target.mul(phi.col(i), phi.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace rbop
