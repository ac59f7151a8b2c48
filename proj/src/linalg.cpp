#include "rbop/linalg.hpp"

namespace rbop {

namespace {

// Gauss-Jordan on [m | tail] where tail rides along, returning pivots of the
// m-part only. Exact arithmetic, so any nonzero pivot works.
void reduce_in_place(Mat& w, Index lead_cols, Index& rank, std::vector<Index>& pivots) {
  const Index rows = w.rows();
  rank = 0;
  pivots.clear();
  for (Index col = 0; col < lead_cols && rank < rows; ++col) {
    Index piv = -1;
    for (Index r = rank; r < rows; ++r) {
      if (!w(r, col).is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != rank) w.row(piv).swap(w.row(rank));
    const Rat inv = Rat(1) / w(rank, col);
    for (Index j = col; j < w.cols(); ++j) w(rank, j) *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == rank || w(r, col).is_zero()) continue;
      const Rat f = w(r, col);
      for (Index j = col; j < w.cols(); ++j) w(r, j) -= f * w(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
}

}  // namespace

Rref rref(const Mat& m) {
  Rref out;
  out.reduced = m;
  reduce_in_place(out.reduced, m.cols(), out.rank, out.pivots);
  return out;
}

Subspace Subspace::full(Index ambient) {
  Mat id = Mat::Identity(ambient, ambient);
  return Subspace(ambient, std::move(id));
}

Subspace Subspace::span_of_rows(const Mat& rows) {
  Rref r = rref(rows);
  return Subspace(rows.cols(), r.reduced.topRows(r.rank));
}

Subspace Subspace::span_of_cols(const Mat& cols) { return span_of_rows(cols.transpose()); }

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  // Reduce v by the echelon basis; membership iff the residual vanishes.
  // basis_ is in RREF, so the pivot of row i is its first nonzero column.
  Vec w = v;
  for (Index i = 0; i < basis_.rows(); ++i) {
    Index p = 0;
    while (p < ambient_ && basis_(i, p).is_zero()) ++p;
    if (w(p).is_zero()) continue;
    const Rat f = w(p);
    for (Index j = p; j < ambient_; ++j) w(j) -= f * basis_(i, j);
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
  for (Index i = 0; i < other.basis_.rows(); ++i) {
    if (!contains(Vec(other.basis_.row(i).transpose()))) return false;
  }
  return true;
}

Subspace kernel(const Mat& m) {
  const Rref r = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Index p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;

  Mat basis(n - r.rank, n);
  basis.setZero();
  Index row = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    basis(row, free) = Rat(1);
    for (Index i = 0; i < r.rank; ++i) {
      const Index p = r.pivots[static_cast<size_t>(i)];
      basis(row, p) = -r.reduced(i, free);
    }
    ++row;
  }
  return Subspace::span_of_rows(basis);
}

SolveResult solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const Index rows = m.rows();
  const Index cols = m.cols();
  // Augment with b and with an identity block recording the row operations,
  // so an inconsistent row directly yields its combination certificate.
  Mat w(rows, cols + 1 + rows);
  w.setZero();
  w.block(0, 0, rows, cols) = m;
  w.col(cols) = b;
  for (Index i = 0; i < rows; ++i) w(i, cols + 1 + i) = Rat(1);

  Index rank = 0;
  std::vector<Index> pivots;
  reduce_in_place(w, cols + 1, rank, pivots);

  if (!pivots.empty() && pivots.back() == cols) {
    // A pivot landed in the b column: that row reads 0 = 1 and its recorded
    // row combination is the witness.
    const Index r = rank - 1;
    SolveCertificate cert;
    cert.c = w.block(r, cols + 1, 1, rows).transpose();
    return cert;
  }
  SolveSuccess s;
  s.x = Vec::Zero(cols);
  for (Index i = 0; i < rank; ++i) s.x(pivots[static_cast<size_t>(i)]) = w(i, cols);
  return s;
}

Index quotient_dim(const Subspace& z, const Subspace& b) {
  if (z.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("quotient_dim: ambient dimension mismatch");
  if (!z.contains(b))
    throw std::domain_error("quotient_dim: coboundary space not contained in cocycle space");
  return z.dim() - b.dim();
}

}  // namespace rbop
