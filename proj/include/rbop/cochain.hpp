#pragma once

#include "rbop/algebra.hpp"

#include <functional>
#include <span>

namespace rbop {

Index pow_index(Index base, Index exp);

/// Flat index of a tuple, first entry most significant.
Index flatten_tuple(std::span<const Index> tuple, Index base);
void unflatten_tuple(Index flat, Index base, Index len, std::vector<Index>& out);

/// Visits every tuple in [0, base)^len in lexicographic order.
void for_each_tuple(Index base, Index len, const std::function<void(std::span<const Index>)>& visit);

Index binomial(Index n, Index k);

/// Element of Hom(M^{tensor n}, A) as a dense coefficient table: row =
/// flattened module-basis tuple, column = algebra basis index. Degree 0 is a
/// single A-vector (one row).
class Cochain {
 public:
  Cochain(Index degree, Index module_dim, Index alg_dim);
  static Cochain constant(const Vec& a, Index module_dim);
  static Cochain linear(const Mat& t);

  Index degree() const { return degree_; }
  Index module_dim() const { return module_dim_; }
  Index alg_dim() const { return alg_dim_; }

  const Mat& table() const { return table_; }
  Mat& table() { return table_; }

  Vec value(std::span<const Index> tuple) const;
  Vec eval(std::span<const Vec> args) const;

  Vec constant_value() const;  // degree 0
  Mat linear_map() const;      // degree 1, alg_dim x module_dim

  /// Coefficient vector in the lexicographic (u_1, ..., u_n, k) basis.
  Vec flattened() const;
  static Cochain from_flattened(Index degree, Index module_dim, Index alg_dim, const Vec& flat);

  bool is_zero() const { return rbop::is_zero(table_); }
  friend bool operator==(const Cochain& x, const Cochain& y) {
    return x.degree_ == y.degree_ && x.module_dim_ == y.module_dim_ && x.alg_dim_ == y.alg_dim_ &&
           x.table_ == y.table_;
  }
  friend Cochain operator+(const Cochain& x, const Cochain& y);
  friend Cochain operator-(const Cochain& x, const Cochain& y);
  friend Cochain operator*(const Rat& c, const Cochain& x);

 private:
  Index degree_, module_dim_, alg_dim_;
  Mat table_;
};

/// Element of Hom(V^{tensor n+1}, V) for V = A + M; degree n.
class BigCochain {
 public:
  BigCochain(Index degree, Index space_dim);

  Index degree() const { return degree_; }
  Index space_dim() const { return space_dim_; }
  const Mat& table() const { return table_; }
  Mat& table() { return table_; }

  Vec value(std::span<const Index> tuple) const;
  Vec eval(std::span<const Vec> args) const;

  bool is_zero() const { return rbop::is_zero(table_); }
  friend bool operator==(const BigCochain& x, const BigCochain& y) {
    return x.degree_ == y.degree_ && x.space_dim_ == y.space_dim_ && x.table_ == y.table_;
  }
  friend BigCochain operator+(const BigCochain& x, const BigCochain& y);
  friend BigCochain operator-(const BigCochain& x, const BigCochain& y);
  friend BigCochain operator*(const Rat& c, const BigCochain& x);

 private:
  Index degree_, space_dim_;
  Mat table_;
};

/// Gerstenhaber circle product on multilinear maps of one space.
BigCochain gerstenhaber_circ(const BigCochain& f, const BigCochain& g);
/// [f, g] = f o g - (-1)^{mn} g o f.
BigCochain gerstenhaber_bracket(const BigCochain& f, const BigCochain& g);

/// The degree-1 element mu + l + r on A + M. Square-zero under the circle
/// product exactly when the algebra and bimodule axioms hold, so callers can
/// test either direction.
BigCochain mc_element(const Algebra& alg, const Bimodule& bm);

/// Extension by zero of P in Hom(M^{tensor m}, A) to a multilinear map of
/// A + M (projects inputs to M, embeds the output into the A summand).
BigCochain lift_to_sum(const Bimodule& bm, const Cochain& P);

/// Bracket of the graded Lie algebra on Hom(M^{tensor >=1}, A), written out
/// as the explicit five-group sum. Degrees of P, Q must be >= 1.
Cochain derived_bracket(const Bimodule& bm, const Cochain& P, const Cochain& Q);

/// Degree-0 extension of the bracket: pairs a positive-degree P with an
/// algebra element.
Cochain derived_bracket_deg0(const Bimodule& bm, const Cochain& P, const Vec& a);

/// Commutator a b - b a (the bracket of two degree-0 elements).
Vec commutator(const Algebra& alg, const Vec& a, const Vec& b);

/// Hochschild-style differential of the O-operator T. Throws unless T
/// satisfies the O-operator identity (d^2 = 0 needs it).
Cochain d_hoch(const Bimodule& bm, const Mat& T, const Cochain& f);

/// Alternating cochain in Hom(wedge^n M, A): coefficients stored on strictly
/// increasing basis tuples; evaluation expands by permutation sign.
class AltCochain {
 public:
  AltCochain(Index degree, Index module_dim, Index alg_dim);

  Index degree() const { return degree_; }
  Index module_dim() const { return module_dim_; }
  Index alg_dim() const { return alg_dim_; }
  const Mat& table() const { return table_; }
  Mat& table() { return table_; }

  /// Rank of a strictly increasing tuple among all such, lexicographically.
  static Index comb_rank(std::span<const Index> tuple, Index module_dim);
  static void comb_unrank(Index rank, Index module_dim, Index len, std::vector<Index>& out);

  Vec value(std::span<const Index> tuple) const;  // any tuple; signed, 0 on repeats
  Vec eval(std::span<const Vec> args) const;

  bool is_zero() const { return rbop::is_zero(table_); }
  friend bool operator==(const AltCochain& x, const AltCochain& y) {
    return x.degree_ == y.degree_ && x.module_dim_ == y.module_dim_ && x.alg_dim_ == y.alg_dim_ &&
           x.table_ == y.table_;
  }
  friend AltCochain operator-(const AltCochain& x, const AltCochain& y);

 private:
  Index degree_, module_dim_, alg_dim_;
  Mat table_;  // rows = binomial(module_dim, degree), cols = alg_dim
};

/// Skew-symmetrization S_n(f)(m_1, ..., m_n) = sum_sigma sgn(sigma) f(m_sigma).
AltCochain skew_symmetrize(const Cochain& f);

/// Chevalley-Eilenberg differential of the commutator Lie structure on M
/// acting on A (bracket [m, n] = m star n - n star m, action
/// rho(m)(a) = T(m) a - T(m a) - a T(m) + T(a m)). Throws unless T is an
/// O-operator.
AltCochain d_ce(const Bimodule& bm, const Mat& T, const AltCochain& f);

/// Dendriform cochain: element of Hom(K[C_n] tensor M^{tensor n}, M).
class DendCochain {
 public:
  DendCochain(Index arity, Index module_dim);

  Index arity() const { return arity_; }
  Index module_dim() const { return module_dim_; }
  const Mat& table(Index label) const { return tables_[static_cast<size_t>(label - 1)]; }
  Mat& table(Index label) { return tables_[static_cast<size_t>(label - 1)]; }

  Vec value(Index label, std::span<const Index> tuple) const;
  Vec eval(Index label, std::span<const Vec> args) const;
  /// Evaluation at the formal label sum [1] + ... + [arity].
  Vec eval_label_sum(std::span<const Vec> args) const;

  bool is_zero() const;
  friend bool operator==(const DendCochain& x, const DendCochain& y) {
    return x.arity_ == y.arity_ && x.module_dim_ == y.module_dim_ && x.tables_ == y.tables_;
  }
  friend DendCochain operator+(const DendCochain& x, const DendCochain& y);
  friend DendCochain operator-(const DendCochain& x, const DendCochain& y);
  friend DendCochain operator*(const Rat& c, const DendCochain& x);

 private:
  Index arity_, module_dim_;
  std::vector<Mat> tables_;  // one per label, rows = module_dim^arity, cols = module_dim
};

/// Partial composition of the dendriform cochain operad, 1 <= i <= arity(f).
DendCochain dend_partial_comp(const DendCochain& f, Index i, const DendCochain& g);

/// Graded Lie bracket on the operad (degrees are arity - 1).
DendCochain dend_bracket(const DendCochain& f, const DendCochain& g);

/// delta_pi(f) = (-1)^{arity(f)-1} [pi, f]; requires [pi, pi] = 0.
DendCochain dend_differential(const DendCochain& pi, const DendCochain& f);

/// The Maurer-Cartan element pi_T of the dendriform structure induced by T.
DendCochain dend_pi(const Bimodule& bm, const Mat& T);

/// Theta_n(P): degree-n cochains to arity-(n+1) dendriform cochains; only
/// the first and last labels are nonzero.
DendCochain theta(const Bimodule& bm, const Cochain& P);

/// Element of Hom(wedge^n M tensor M, M), the cochain space of the induced
/// pre-Lie structure on M.
class PreLieCochain {
 public:
  PreLieCochain(Index degree, Index module_dim);

  Index degree() const { return degree_; }
  Index module_dim() const { return module_dim_; }
  const Mat& table() const { return table_; }
  Mat& table() { return table_; }

  /// Row index of (strictly increasing tuple, final argument).
  Index row(std::span<const Index> tuple, Index last) const;

  bool is_zero() const { return rbop::is_zero(table_); }
  friend bool operator==(const PreLieCochain& x, const PreLieCochain& y) {
    return x.degree_ == y.degree_ && x.module_dim_ == y.module_dim_ && x.table_ == y.table_;
  }

 private:
  Index degree_, module_dim_;
  Mat table_;  // rows = binomial(m, n) * m, cols = m
};

/// Psi_n(f)(u_1, ..., u_n, v) = S_n(f)(u_1, ..., u_n) v - v S_n(f)(u_1, ..., u_n);
/// a cochain map into the pre-Lie cochain space (no pre-Lie differential is
/// applied here).
PreLieCochain psi(const Bimodule& bm, const Cochain& f);

}  // namespace rbop
