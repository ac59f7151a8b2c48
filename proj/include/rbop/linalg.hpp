#pragma once

#include "rbop/rational.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <variant>
#include <vector>

namespace rbop {

using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Dense rank-3 array of rationals, row-major in (i, j, k).
struct Tensor3 {
  Index n0 = 0, n1 = 0, n2 = 0;
  std::vector<Rat> a;

  Tensor3() = default;
  Tensor3(Index d0, Index d1, Index d2)
      : n0(d0), n1(d1), n2(d2), a(static_cast<size_t>(d0 * d1 * d2)) {}

  Rat& operator()(Index i, Index j, Index k) { return a[static_cast<size_t>((i * n1 + j) * n2 + k)]; }
  const Rat& operator()(Index i, Index j, Index k) const {
    return a[static_cast<size_t>((i * n1 + j) * n2 + k)];
  }

  bool is_zero() const {
    for (const Rat& x : a)
      if (!x.is_zero()) return false;
    return true;
  }
  friend bool operator==(const Tensor3& x, const Tensor3& y) {
    return x.n0 == y.n0 && x.n1 == y.n1 && x.n2 == y.n2 && x.a == y.a;
  }
};

struct Rref {
  Index rank = 0;
  std::vector<Index> pivots;  // pivot column of each pivot row
  Mat reduced;
};

/// Unique reduced row-echelon form, exact Gauss-Jordan.
Rref rref(const Mat& m);

/// A linear subspace of Q^ambient, stored as the canonical reduced echelon
/// basis (row per basis vector, no zero rows). Equal subspaces compare equal.
class Subspace {
 public:
  static Subspace zero(Index ambient) { return Subspace(ambient, Mat(0, ambient)); }
  static Subspace full(Index ambient);
  static Subspace span_of_rows(const Mat& rows);
  static Subspace span_of_cols(const Mat& cols);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
  }

 private:
  Subspace(Index ambient, Mat basis) : ambient_(ambient), basis_(std::move(basis)) {}
  Index ambient_;
  Mat basis_;  // RREF, one row per basis vector
};

/// Basis of {v : m v = 0}.
Subspace kernel(const Mat& m);

struct SolveSuccess {
  Vec x;
};
/// Inconsistency witness: c with c^T m = 0 and c^T b != 0.
struct SolveCertificate {
  Vec c;
};
using SolveResult = std::variant<SolveSuccess, SolveCertificate>;

/// Solves m x = b exactly; the returned solution zeroes all free variables.
SolveResult solve(const Mat& m, const Vec& b);

/// dim z - dim b, after checking b is contained in z.
Index quotient_dim(const Subspace& z, const Subspace& b);

inline bool is_zero(const Mat& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline bool is_zero(const Vec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

}  // namespace rbop
