#pragma once

#include "rbop/linalg.hpp"

#include <string>
#include <vector>

namespace rbop {

/// Finite-dimensional algebra given by structure constants:
/// mu(i, j, k) is the e_k coefficient of e_i * e_j. Not assumed unital or
/// associative; validate_algebra checks associativity explicitly.
class Algebra {
 public:
  Algebra(Index dim, Tensor3 mu, std::vector<std::string> labels = {});

  Index dim() const { return dim_; }
  const Tensor3& structure() const { return mu_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Vec basis(Index i) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec mul_basis(Index i, Index j) const;

  friend bool operator==(const Algebra& x, const Algebra& y) {
    return x.dim_ == y.dim_ && x.mu_ == y.mu_;
  }

 private:
  Index dim_;
  Tensor3 mu_;
  std::vector<std::string> labels_;
};

struct AssociativityViolation {
  Index i, j, k;
  Vec lhs, rhs;  // (e_i e_j) e_k and e_i (e_j e_k)
};

/// Empty result means the product is associative at every basis triple.
std::vector<AssociativityViolation> validate_algebra(const Algebra& alg);

/// Left/right actions of an algebra on a module space, stored as
/// left(i, u, v) = f_v coefficient of e_i . f_u and
/// right(u, i, v) = f_v coefficient of f_u . e_i.
class Bimodule {
 public:
  Bimodule(Algebra algebra, Index dim, Tensor3 left, Tensor3 right);

  const Algebra& algebra() const { return algebra_; }
  Index dim() const { return dim_; }
  const Tensor3& left_tensor() const { return left_; }
  const Tensor3& right_tensor() const { return right_; }

  Vec basis(Index u) const;
  Vec act_left(const Vec& a, const Vec& m) const;
  Vec act_right(const Vec& m, const Vec& a) const;

  friend bool operator==(const Bimodule& x, const Bimodule& y) {
    return x.algebra_ == y.algebra_ && x.dim_ == y.dim_ && x.left_ == y.left_ && x.right_ == y.right_;
  }

 private:
  Algebra algebra_;
  Index dim_;
  Tensor3 left_, right_;
};

struct BimoduleViolation {
  // axiom 1: l(ab, m) = l(a, l(b, m))
  // axiom 2: l(a, r(m, b)) = r(l(a, m), b)
  // axiom 3: r(m, ab) = r(r(m, a), b)
  int axiom;
  Index i, j, u;  // algebra basis pair (i, j) and module basis element u
  Vec lhs, rhs;
};

/// Assumes the underlying algebra is already valid; checks the three
/// bimodule axioms at every basis triple.
std::vector<BimoduleViolation> validate_bimodule(const Bimodule& bm);

Bimodule adjoint_bimodule(const Algebra& alg);
Bimodule coadjoint_bimodule(const Algebra& alg);

enum class Side { left, right };
Bimodule one_sided_bimodule(const Algebra& alg, Side side);

/// A + M with (a, m)(b, n) = (ab, an + mb); basis is A's then M's.
/// Throws if the bimodule fails validation.
Algebra semidirect_product(const Algebra& alg, const Bimodule& bm);

/// phi(e_i e_j) = phi(e_i) phi(e_j) on all basis pairs. Units, if any, play
/// no role.
bool is_algebra_morphism(const Mat& phi, const Algebra& source, const Algebra& target);

}  // namespace rbop
