#include "rbop/cochain.hpp"

#include "rbop/operators.hpp"

#include <algorithm>

namespace rbop {

namespace {

Rat sgn_pow(Index e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

// Visits all permutations of [0, n) together with their signs.
void for_each_permutation(Index n, const std::function<void(std::span<const Index>, int)>& visit) {
  std::vector<Index> perm(static_cast<size_t>(n));
  for (Index i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  do {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
      for (size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    visit(perm, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

Index pow_index(Index base, Index exp) {
  Index out = 1;
  for (Index i = 0; i < exp; ++i) out *= base;
  return out;
}

Index flatten_tuple(std::span<const Index> tuple, Index base) {
  Index out = 0;
  for (Index v : tuple) out = out * base + v;
  return out;
}

void unflatten_tuple(Index flat, Index base, Index len, std::vector<Index>& out) {
  out.assign(static_cast<size_t>(len), 0);
  for (Index i = len - 1; i >= 0; --i) {
    out[static_cast<size_t>(i)] = flat % base;
    flat /= base;
  }
}

void for_each_tuple(Index base, Index len, const std::function<void(std::span<const Index>)>& visit) {
  std::vector<Index> tuple(static_cast<size_t>(len), 0);
  const Index total = pow_index(base, len);
  for (Index flat = 0; flat < total; ++flat) {
    unflatten_tuple(flat, base, len, tuple);
    visit(tuple);
  }
}

Index binomial(Index n, Index k) {
  if (k < 0 || k > n) return 0;
  Index out = 1;
  for (Index i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

// ---------------------------------------------------------------------------
// Cochain

Cochain::Cochain(Index degree, Index module_dim, Index alg_dim)
    : degree_(degree), module_dim_(module_dim), alg_dim_(alg_dim) {
  if (degree < 0) throw std::invalid_argument("Cochain: negative degree");
  table_ = Mat::Zero(pow_index(module_dim, degree), alg_dim);
}

Cochain Cochain::constant(const Vec& a, Index module_dim) {
  Cochain c(0, module_dim, a.size());
  c.table_.row(0) = a.transpose();
  return c;
}

Cochain Cochain::linear(const Mat& t) {
  Cochain c(1, t.cols(), t.rows());
  c.table_ = t.transpose();
  return c;
}

Vec Cochain::value(std::span<const Index> tuple) const {
  return table_.row(flatten_tuple(tuple, module_dim_)).transpose();
}

Vec Cochain::eval(std::span<const Vec> args) const {
  if (static_cast<Index>(args.size()) != degree_) throw std::invalid_argument("Cochain::eval: arity mismatch");
  Vec out = Vec::Zero(alg_dim_);
  std::vector<Index> tuple;
  const Index total = pow_index(module_dim_, degree_);
  for (Index flat = 0; flat < total; ++flat) {
    unflatten_tuple(flat, module_dim_, degree_, tuple);
    Rat c(1);
    for (Index i = 0; i < degree_ && !c.is_zero(); ++i) c *= args[static_cast<size_t>(i)](tuple[static_cast<size_t>(i)]);
    if (c.is_zero()) continue;
    for (Index k = 0; k < alg_dim_; ++k) out(k) += c * table_(flat, k);
  }
  return out;
}

Vec Cochain::constant_value() const {
  if (degree_ != 0) throw std::logic_error("Cochain::constant_value: degree is not 0");
  return table_.row(0).transpose();
}

Mat Cochain::linear_map() const {
  if (degree_ != 1) throw std::logic_error("Cochain::linear_map: degree is not 1");
  return table_.transpose();
}

Vec Cochain::flattened() const {
  Vec out(table_.rows() * alg_dim_);
  for (Index r = 0; r < table_.rows(); ++r)
    for (Index k = 0; k < alg_dim_; ++k) out(r * alg_dim_ + k) = table_(r, k);
  return out;
}

Cochain Cochain::from_flattened(Index degree, Index module_dim, Index alg_dim, const Vec& flat) {
  Cochain c(degree, module_dim, alg_dim);
  if (flat.size() != c.table_.rows() * alg_dim) throw std::invalid_argument("Cochain::from_flattened: size mismatch");
  for (Index r = 0; r < c.table_.rows(); ++r)
    for (Index k = 0; k < alg_dim; ++k) c.table_(r, k) = flat(r * alg_dim + k);
  return c;
}

Cochain operator+(const Cochain& x, const Cochain& y) {
  Cochain out = x;
  out.table_ += y.table_;
  return out;
}

Cochain operator-(const Cochain& x, const Cochain& y) {
  Cochain out = x;
  out.table_ -= y.table_;
  return out;
}

Cochain operator*(const Rat& c, const Cochain& x) {
  Cochain out = x;
  out.table_ *= c;
  return out;
}

// ---------------------------------------------------------------------------
// BigCochain and the Gerstenhaber structure

BigCochain::BigCochain(Index degree, Index space_dim) : degree_(degree), space_dim_(space_dim) {
  if (degree < 0) throw std::invalid_argument("BigCochain: negative degree");
  table_ = Mat::Zero(pow_index(space_dim, degree + 1), space_dim);
}

Vec BigCochain::value(std::span<const Index> tuple) const {
  return table_.row(flatten_tuple(tuple, space_dim_)).transpose();
}

Vec BigCochain::eval(std::span<const Vec> args) const {
  if (static_cast<Index>(args.size()) != degree_ + 1)
    throw std::invalid_argument("BigCochain::eval: arity mismatch");
  Vec out = Vec::Zero(space_dim_);
  std::vector<Index> tuple;
  const Index total = pow_index(space_dim_, degree_ + 1);
  for (Index flat = 0; flat < total; ++flat) {
    unflatten_tuple(flat, space_dim_, degree_ + 1, tuple);
    Rat c(1);
    for (Index i = 0; i <= degree_ && !c.is_zero(); ++i) c *= args[static_cast<size_t>(i)](tuple[static_cast<size_t>(i)]);
    if (c.is_zero()) continue;
    for (Index k = 0; k < space_dim_; ++k) out(k) += c * table_(flat, k);
  }
  return out;
}

BigCochain operator+(const BigCochain& x, const BigCochain& y) {
  BigCochain out = x;
  out.table_ += y.table_;
  return out;
}

BigCochain operator-(const BigCochain& x, const BigCochain& y) {
  BigCochain out = x;
  out.table_ -= y.table_;
  return out;
}

BigCochain operator*(const Rat& c, const BigCochain& x) {
  BigCochain out = x;
  out.table_ *= c;
  return out;
}

BigCochain gerstenhaber_circ(const BigCochain& f, const BigCochain& g) {
  if (f.space_dim() != g.space_dim()) throw std::invalid_argument("gerstenhaber_circ: space mismatch");
  const Index d = f.space_dim();
  const Index m = f.degree();
  const Index n = g.degree();
  BigCochain out(m + n, d);

  std::vector<Vec> basis(static_cast<size_t>(d));
  for (Index i = 0; i < d; ++i) {
    basis[static_cast<size_t>(i)] = Vec::Zero(d);
    basis[static_cast<size_t>(i)](i) = Rat(1);
  }

  for_each_tuple(d, m + n + 1, [&](std::span<const Index> idx) {
    const Index row = flatten_tuple(idx, d);
    Vec acc = Vec::Zero(d);
    std::vector<Vec> gargs(static_cast<size_t>(n + 1));
    std::vector<Vec> fargs(static_cast<size_t>(m + 1));
    for (Index i = 1; i <= m + 1; ++i) {
      for (Index t = 0; t < n + 1; ++t) gargs[static_cast<size_t>(t)] = basis[static_cast<size_t>(idx[static_cast<size_t>(i - 1 + t)])];
      Vec inner = g.eval(gargs);
      Index pos = 0;
      for (Index t = 0; t < i - 1; ++t) fargs[static_cast<size_t>(pos++)] = basis[static_cast<size_t>(idx[static_cast<size_t>(t)])];
      fargs[static_cast<size_t>(pos++)] = std::move(inner);
      for (Index t = i + n; t < m + n + 1; ++t) fargs[static_cast<size_t>(pos++)] = basis[static_cast<size_t>(idx[static_cast<size_t>(t)])];
      acc += sgn_pow((i - 1) * n) * f.eval(fargs);
    }
    out.table().row(row) = acc.transpose();
  });
  return out;
}

BigCochain gerstenhaber_bracket(const BigCochain& f, const BigCochain& g) {
  const Index m = f.degree();
  const Index n = g.degree();
  return gerstenhaber_circ(f, g) - sgn_pow(m * n) * gerstenhaber_circ(g, f);
}

BigCochain mc_element(const Algebra& alg, const Bimodule& bm) {
  if (!(bm.algebra() == alg)) throw std::invalid_argument("mc_element: bimodule over a different algebra");
  const Index n = alg.dim();
  const Index m = bm.dim();
  BigCochain out(1, n + m);
  const Tensor3& mu = alg.structure();
  const Tensor3& l = bm.left_tensor();
  const Tensor3& r = bm.right_tensor();
  for (Index p = 0; p < n + m; ++p)
    for (Index q = 0; q < n + m; ++q) {
      const Index row = p * (n + m) + q;
      if (p < n && q < n) {
        for (Index k = 0; k < n; ++k) out.table()(row, k) = mu(p, q, k);
      } else if (p < n && q >= n) {
        for (Index v = 0; v < m; ++v) out.table()(row, n + v) = l(p, q - n, v);
      } else if (p >= n && q < n) {
        for (Index v = 0; v < m; ++v) out.table()(row, n + v) = r(p - n, q, v);
      }
    }
  return out;
}

BigCochain lift_to_sum(const Bimodule& bm, const Cochain& P) {
  const Index n = bm.algebra().dim();
  const Index m = bm.dim();
  if (P.module_dim() != m || P.alg_dim() != n) throw std::invalid_argument("lift_to_sum: shape mismatch");
  if (P.degree() < 1) throw std::invalid_argument("lift_to_sum: degree must be >= 1");
  const Index d = n + m;
  BigCochain out(P.degree() - 1, d);
  std::vector<Index> module_tuple(static_cast<size_t>(P.degree()));
  for_each_tuple(d, P.degree(), [&](std::span<const Index> idx) {
    for (Index t = 0; t < P.degree(); ++t) {
      if (idx[static_cast<size_t>(t)] < n) return;  // a pure-A slot projects to zero
      module_tuple[static_cast<size_t>(t)] = idx[static_cast<size_t>(t)] - n;
    }
    const Vec v = P.value(module_tuple);
    const Index row = flatten_tuple(idx, d);
    for (Index k = 0; k < n; ++k) out.table()(row, k) = v(k);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Derived bracket

Cochain derived_bracket(const Bimodule& bm, const Cochain& P, const Cochain& Q) {
  const Algebra& A = bm.algebra();
  const Index mdim = bm.dim();
  const Index adim = A.dim();
  if (P.module_dim() != mdim || Q.module_dim() != mdim || P.alg_dim() != adim || Q.alg_dim() != adim)
    throw std::invalid_argument("derived_bracket: cochains over mismatched spaces");
  const Index m = P.degree();
  const Index n = Q.degree();
  if (m < 1 || n < 1) throw std::invalid_argument("derived_bracket: degrees must be >= 1");

  Cochain out(m + n, mdim, adim);
  const Rat smn = sgn_pow(m * n);

  std::vector<Vec> basis(static_cast<size_t>(mdim));
  for (Index u = 0; u < mdim; ++u) basis[static_cast<size_t>(u)] = bm.basis(u);

  auto basis_at = [&](std::span<const Index> idx, Index pos) -> const Vec& {
    return basis[static_cast<size_t>(idx[static_cast<size_t>(pos)])];
  };
  // Evaluates F on the basis slice idx[from, from+len).
  auto slice_value = [&](const Cochain& F, std::span<const Index> idx, Index from, Index len) {
    return F.value(std::span<const Index>(idx.data() + from, static_cast<size_t>(len)));
  };
  // Outer(args) where args are idx's basis vectors except position `slot`
  // (0-based within the outer arity) carries `inner`; skip marks the inner
  // block consumed from idx.
  auto outer_eval = [&](const Cochain& outer, std::span<const Index> idx, Index slot, Index skip,
                        const Vec& inner) {
    std::vector<Vec> args(static_cast<size_t>(outer.degree()));
    Index pos = 0;
    for (Index t = 0; t < slot; ++t) args[static_cast<size_t>(pos++)] = basis_at(idx, t);
    args[static_cast<size_t>(pos++)] = inner;
    for (Index t = slot + skip; t < static_cast<Index>(idx.size()); ++t)
      args[static_cast<size_t>(pos++)] = basis_at(idx, t);
    return outer.eval(args);
  };

  for_each_tuple(mdim, m + n, [&](std::span<const Index> idx) {
    Vec acc = Vec::Zero(adim);
    for (Index i = 1; i <= m; ++i) {
      // P(u_1, ..., Q(u_i, ..., u_{i+n-1}) u_{i+n}, ..., u_{m+n})
      Vec inner = bm.act_left(slice_value(Q, idx, i - 1, n), basis_at(idx, i + n - 1));
      acc += sgn_pow((i - 1) * n) * outer_eval(P, idx, i - 1, n + 1, inner);
      // - P(u_1, ..., u_i Q(u_{i+1}, ..., u_{i+n}), ..., u_{m+n})
      inner = bm.act_right(basis_at(idx, i - 1), slice_value(Q, idx, i, n));
      acc -= sgn_pow(i * n) * outer_eval(P, idx, i - 1, n + 1, inner);
    }
    for (Index i = 1; i <= n; ++i) {
      // - (-1)^{mn} Q(u_1, ..., P(u_i, ..., u_{i+m-1}) u_{i+m}, ..., u_{m+n})
      Vec inner = bm.act_left(slice_value(P, idx, i - 1, m), basis_at(idx, i + m - 1));
      acc -= smn * sgn_pow((i - 1) * m) * outer_eval(Q, idx, i - 1, m + 1, inner);
      // + (-1)^{mn} Q(u_1, ..., u_i P(u_{i+1}, ..., u_{i+m}), ..., u_{m+n})
      inner = bm.act_right(basis_at(idx, i - 1), slice_value(P, idx, i, m));
      acc += smn * sgn_pow(i * m) * outer_eval(Q, idx, i - 1, m + 1, inner);
    }
    // (-1)^{mn} [P(u_1..u_m) Q(u_{m+1}..u_{m+n}) - (-1)^{mn} Q(u_1..u_n) P(u_{n+1}..u_{m+n})]
    acc += smn * A.mul(slice_value(P, idx, 0, m), slice_value(Q, idx, m, n));
    acc -= smn * smn * A.mul(slice_value(Q, idx, 0, n), slice_value(P, idx, n, m));
    out.table().row(flatten_tuple(idx, mdim)) = acc.transpose();
  });
  return out;
}

Cochain derived_bracket_deg0(const Bimodule& bm, const Cochain& P, const Vec& a) {
  const Algebra& A = bm.algebra();
  const Index mdim = bm.dim();
  if (P.module_dim() != mdim || P.alg_dim() != A.dim() || a.size() != A.dim())
    throw std::invalid_argument("derived_bracket_deg0: shape mismatch");
  const Index m = P.degree();
  if (m < 1) throw std::invalid_argument("derived_bracket_deg0: P must have degree >= 1");

  Cochain out(m, mdim, A.dim());
  std::vector<Vec> args(static_cast<size_t>(m));
  for_each_tuple(mdim, m, [&](std::span<const Index> idx) {
    Vec acc = Vec::Zero(A.dim());
    for (Index i = 0; i < m; ++i) {
      for (Index t = 0; t < m; ++t) args[static_cast<size_t>(t)] = bm.basis(idx[static_cast<size_t>(t)]);
      const Vec ui = bm.basis(idx[static_cast<size_t>(i)]);
      args[static_cast<size_t>(i)] = bm.act_left(a, ui) - bm.act_right(ui, a);
      acc += P.eval(args);
    }
    const Vec pv = P.value(idx);
    acc += A.mul(pv, a) - A.mul(a, pv);
    out.table().row(flatten_tuple(idx, mdim)) = acc.transpose();
  });
  return out;
}

Vec commutator(const Algebra& alg, const Vec& a, const Vec& b) {
  return alg.mul(a, b) - alg.mul(b, a);
}

// ---------------------------------------------------------------------------
// Differentials

Cochain d_hoch(const Bimodule& bm, const Mat& T, const Cochain& f) {
  const Algebra& A = bm.algebra();
  const Index mdim = bm.dim();
  const Index adim = A.dim();
  if (T.rows() != adim || T.cols() != mdim) throw std::invalid_argument("d_hoch: operator shape mismatch");
  if (f.module_dim() != mdim || f.alg_dim() != adim) throw std::invalid_argument("d_hoch: cochain shape mismatch");
  if (!is_o_operator(bm, T)) throw std::invalid_argument("d_hoch: T fails the O-operator identity");

  const Index n = f.degree();
  Cochain out(n + 1, mdim, adim);

  if (n == 0) {
    const Vec a = f.constant_value();
    for (Index u = 0; u < mdim; ++u) {
      const Vec fu = bm.basis(u);
      const Vec Tu = T * fu;
      Vec v = A.mul(Tu, a) - T * bm.act_right(fu, a) - A.mul(a, Tu) + T * bm.act_left(a, fu);
      out.table().row(u) = v.transpose();
    }
    return out;
  }

  std::vector<Vec> basis(static_cast<size_t>(mdim));
  for (Index u = 0; u < mdim; ++u) basis[static_cast<size_t>(u)] = bm.basis(u);

  for_each_tuple(mdim, n + 1, [&](std::span<const Index> idx) {
    auto b = [&](Index pos) -> const Vec& { return basis[static_cast<size_t>(idx[static_cast<size_t>(pos)])]; };
    Vec acc = Vec::Zero(adim);

    const Vec tail = f.value(std::span<const Index>(idx.data() + 1, static_cast<size_t>(n)));
    acc += A.mul(T * b(0), tail);
    acc -= T * bm.act_right(b(0), tail);

    std::vector<Vec> args(static_cast<size_t>(n));
    for (Index i = 1; i <= n; ++i) {
      Index pos = 0;
      for (Index t = 0; t < i - 1; ++t) args[static_cast<size_t>(pos++)] = b(t);
      args[static_cast<size_t>(pos++)] = bm.act_right(b(i - 1), T * b(i)) + bm.act_left(T * b(i - 1), b(i));
      for (Index t = i + 1; t <= n; ++t) args[static_cast<size_t>(pos++)] = b(t);
      acc += sgn_pow(i) * f.eval(args);
    }

    const Vec head = f.value(std::span<const Index>(idx.data(), static_cast<size_t>(n)));
    acc += sgn_pow(n + 1) * A.mul(head, T * b(n));
    acc -= sgn_pow(n + 1) * (T * bm.act_left(head, b(n)));

    out.table().row(flatten_tuple(idx, mdim)) = acc.transpose();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Alternating cochains and the Chevalley-Eilenberg side

AltCochain::AltCochain(Index degree, Index module_dim, Index alg_dim)
    : degree_(degree), module_dim_(module_dim), alg_dim_(alg_dim) {
  if (degree < 0) throw std::invalid_argument("AltCochain: negative degree");
  // degree > module_dim is the zero space: no rows
  table_ = Mat::Zero(binomial(module_dim, degree), alg_dim);
}

Index AltCochain::comb_rank(std::span<const Index> tuple, Index module_dim) {
  const Index n = static_cast<Index>(tuple.size());
  Index rank = 0;
  Index prev = -1;
  for (Index i = 0; i < n; ++i) {
    for (Index v = prev + 1; v < tuple[static_cast<size_t>(i)]; ++v)
      rank += binomial(module_dim - 1 - v, n - 1 - i);
    prev = tuple[static_cast<size_t>(i)];
  }
  return rank;
}

void AltCochain::comb_unrank(Index rank, Index module_dim, Index len, std::vector<Index>& out) {
  out.assign(static_cast<size_t>(len), 0);
  Index v = 0;
  for (Index i = 0; i < len; ++i) {
    while (true) {
      const Index block = binomial(module_dim - 1 - v, len - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    out[static_cast<size_t>(i)] = v++;
  }
}

Vec AltCochain::value(std::span<const Index> tuple) const {
  std::vector<Index> sorted(tuple.begin(), tuple.end());
  int sign = 1;
  for (size_t i = 1; i < sorted.size(); ++i) {
    size_t j = i;
    while (j > 0 && sorted[j - 1] > sorted[j]) {
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
      --j;
    }
  }
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1] == sorted[i]) return Vec::Zero(alg_dim_);
  Vec out = table_.row(comb_rank(sorted, module_dim_)).transpose();
  if (sign < 0) out = -out;
  return out;
}

Vec AltCochain::eval(std::span<const Vec> args) const {
  if (static_cast<Index>(args.size()) != degree_) throw std::invalid_argument("AltCochain::eval: arity mismatch");
  Vec out = Vec::Zero(alg_dim_);
  for_each_tuple(module_dim_, degree_, [&](std::span<const Index> tuple) {
    Rat c(1);
    for (Index i = 0; i < degree_ && !c.is_zero(); ++i) c *= args[static_cast<size_t>(i)](tuple[static_cast<size_t>(i)]);
    if (c.is_zero()) return;
    const Vec v = value(tuple);
    for (Index k = 0; k < alg_dim_; ++k) out(k) += c * v(k);
  });
  return out;
}

AltCochain operator-(const AltCochain& x, const AltCochain& y) {
  AltCochain out = x;
  out.table_ -= y.table_;
  return out;
}

AltCochain skew_symmetrize(const Cochain& f) {
  const Index n = f.degree();
  AltCochain out(n, f.module_dim(), f.alg_dim());
  std::vector<Index> tuple;
  std::vector<Index> permuted(static_cast<size_t>(n));
  for (Index row = 0; row < out.table().rows(); ++row) {
    AltCochain::comb_unrank(row, f.module_dim(), n, tuple);
    Vec acc = Vec::Zero(f.alg_dim());
    for_each_permutation(n, [&](std::span<const Index> perm, int sign) {
      for (Index i = 0; i < n; ++i)
        permuted[static_cast<size_t>(i)] = tuple[static_cast<size_t>(perm[static_cast<size_t>(i)])];
      const Vec v = f.value(permuted);
      acc += (sign > 0 ? Rat(1) : Rat(-1)) * v;
    });
    out.table().row(row) = acc.transpose();
  }
  return out;
}

namespace {

// rho(m)(a) = T(m) a - T(m a) - a T(m) + T(a m), the commutator-Lie action on A.
Vec ce_action(const Bimodule& bm, const Mat& T, const Vec& m, const Vec& a) {
  const Algebra& A = bm.algebra();
  const Vec Tm = T * m;
  return A.mul(Tm, a) - T * bm.act_right(m, a) - A.mul(a, Tm) + T * bm.act_left(a, m);
}

// [m, n] = m T(n) + T(m) n - n T(m) - T(n) m, the commutator of the star product.
Vec ce_bracket(const Bimodule& bm, const Mat& T, const Vec& m, const Vec& n) {
  const Vec star_mn = bm.act_right(m, T * n) + bm.act_left(T * m, n);
  const Vec star_nm = bm.act_right(n, T * m) + bm.act_left(T * n, m);
  return star_mn - star_nm;
}

}  // namespace

AltCochain d_ce(const Bimodule& bm, const Mat& T, const AltCochain& f) {
  const Algebra& A = bm.algebra();
  const Index mdim = bm.dim();
  if (f.module_dim() != mdim || f.alg_dim() != A.dim()) throw std::invalid_argument("d_ce: cochain shape mismatch");
  if (!is_o_operator(bm, T)) throw std::invalid_argument("d_ce: T fails the O-operator identity");

  const Index n = f.degree();
  AltCochain out(n + 1, mdim, A.dim());
  std::vector<Index> tuple;
  std::vector<Index> rest;
  std::vector<Vec> args(static_cast<size_t>(n));
  for (Index row = 0; row < out.table().rows(); ++row) {
    AltCochain::comb_unrank(row, mdim, n + 1, tuple);
    Vec acc = Vec::Zero(A.dim());
    for (Index i = 0; i < n + 1; ++i) {
      rest.clear();
      for (Index t = 0; t < n + 1; ++t)
        if (t != i) rest.push_back(tuple[static_cast<size_t>(t)]);
      acc += sgn_pow(i) * ce_action(bm, T, bm.basis(tuple[static_cast<size_t>(i)]), f.value(rest));
    }
    for (Index i = 0; i < n + 1; ++i)
      for (Index j = i + 1; j < n + 1; ++j) {
        Index pos = 0;
        args.resize(static_cast<size_t>(n));
        args[static_cast<size_t>(pos++)] =
            ce_bracket(bm, T, bm.basis(tuple[static_cast<size_t>(i)]), bm.basis(tuple[static_cast<size_t>(j)]));
        for (Index t = 0; t < n + 1; ++t) {
          if (t == i || t == j) continue;
          args[static_cast<size_t>(pos++)] = bm.basis(tuple[static_cast<size_t>(t)]);
        }
        // the alternating sign is unchanged by the 1-based to 0-based shift
        acc += sgn_pow(i + j) * f.eval(args);
      }
    out.table().row(row) = acc.transpose();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dendriform cochain operad

DendCochain::DendCochain(Index arity, Index module_dim) : arity_(arity), module_dim_(module_dim) {
  if (arity < 1) throw std::invalid_argument("DendCochain: arity must be >= 1");
  tables_.assign(static_cast<size_t>(arity), Mat::Zero(pow_index(module_dim, arity), module_dim));
}

Vec DendCochain::value(Index label, std::span<const Index> tuple) const {
  return tables_[static_cast<size_t>(label - 1)].row(flatten_tuple(tuple, module_dim_)).transpose();
}

Vec DendCochain::eval(Index label, std::span<const Vec> args) const {
  if (label < 1 || label > arity_) throw std::out_of_range("DendCochain::eval: label out of range");
  if (static_cast<Index>(args.size()) != arity_) throw std::invalid_argument("DendCochain::eval: arity mismatch");
  const Mat& t = tables_[static_cast<size_t>(label - 1)];
  Vec out = Vec::Zero(module_dim_);
  std::vector<Index> tuple;
  const Index total = pow_index(module_dim_, arity_);
  for (Index flat = 0; flat < total; ++flat) {
    unflatten_tuple(flat, module_dim_, arity_, tuple);
    Rat c(1);
    for (Index i = 0; i < arity_ && !c.is_zero(); ++i) c *= args[static_cast<size_t>(i)](tuple[static_cast<size_t>(i)]);
    if (c.is_zero()) continue;
    for (Index k = 0; k < module_dim_; ++k) out(k) += c * t(flat, k);
  }
  return out;
}

Vec DendCochain::eval_label_sum(std::span<const Vec> args) const {
  Vec out = Vec::Zero(module_dim_);
  for (Index r = 1; r <= arity_; ++r) out += eval(r, args);
  return out;
}

bool DendCochain::is_zero() const {
  for (const Mat& t : tables_)
    if (!rbop::is_zero(t)) return false;
  return true;
}

DendCochain operator+(const DendCochain& x, const DendCochain& y) {
  DendCochain out = x;
  for (size_t i = 0; i < out.tables_.size(); ++i) out.tables_[i] += y.tables_[i];
  return out;
}

DendCochain operator-(const DendCochain& x, const DendCochain& y) {
  DendCochain out = x;
  for (size_t i = 0; i < out.tables_.size(); ++i) out.tables_[i] -= y.tables_[i];
  return out;
}

DendCochain operator*(const Rat& c, const DendCochain& x) {
  DendCochain out = x;
  for (Mat& t : out.tables_) t *= c;
  return out;
}

DendCochain dend_partial_comp(const DendCochain& f, Index i, const DendCochain& g) {
  if (f.module_dim() != g.module_dim()) throw std::invalid_argument("dend_partial_comp: space mismatch");
  const Index p = f.arity();
  const Index q = g.arity();
  if (i < 1 || i > p) throw std::out_of_range("dend_partial_comp: slot out of range");
  const Index s = p + q - 1;
  const Index mdim = f.module_dim();
  DendCochain out(s, mdim);

  std::vector<Vec> basis(static_cast<size_t>(mdim));
  for (Index u = 0; u < mdim; ++u) {
    basis[static_cast<size_t>(u)] = Vec::Zero(mdim);
    basis[static_cast<size_t>(u)](u) = Rat(1);
  }

  std::vector<Vec> gargs(static_cast<size_t>(q));
  std::vector<Vec> fargs(static_cast<size_t>(p));
  for_each_tuple(mdim, s, [&](std::span<const Index> idx) {
    const Index row = flatten_tuple(idx, mdim);
    for (Index t = 0; t < q; ++t) gargs[static_cast<size_t>(t)] = basis[static_cast<size_t>(idx[static_cast<size_t>(i - 1 + t)])];
    for (Index r = 1; r <= s; ++r) {
      Index flabel;
      Vec inner(mdim);
      if (r <= i - 1) {
        flabel = r;
        inner = g.eval_label_sum(gargs);
      } else if (r <= i + q - 1) {
        flabel = i;
        inner = g.eval(r - i + 1, gargs);
      } else {
        flabel = r - q + 1;
        inner = g.eval_label_sum(gargs);
      }
      Index pos = 0;
      for (Index t = 0; t < i - 1; ++t) fargs[static_cast<size_t>(pos++)] = basis[static_cast<size_t>(idx[static_cast<size_t>(t)])];
      fargs[static_cast<size_t>(pos++)] = std::move(inner);
      for (Index t = i + q - 1; t < s; ++t) fargs[static_cast<size_t>(pos++)] = basis[static_cast<size_t>(idx[static_cast<size_t>(t)])];
      out.table(r).row(row) = f.eval(flabel, fargs).transpose();
    }
  });
  return out;
}

DendCochain dend_bracket(const DendCochain& f, const DendCochain& g) {
  const Index dm = f.arity() - 1;
  const Index dn = g.arity() - 1;
  DendCochain out(f.arity() + g.arity() - 1, f.module_dim());
  for (Index i = 1; i <= f.arity(); ++i) out = out + sgn_pow((i - 1) * dn) * dend_partial_comp(f, i, g);
  const Rat s = sgn_pow(dm * dn);
  for (Index i = 1; i <= g.arity(); ++i) out = out - s * sgn_pow((i - 1) * dm) * dend_partial_comp(g, i, f);
  return out;
}

DendCochain dend_differential(const DendCochain& pi, const DendCochain& f) {
  if (pi.arity() != 2) throw std::invalid_argument("dend_differential: pi must have arity 2");
  if (!dend_bracket(pi, pi).is_zero()) throw std::invalid_argument("dend_differential: pi is not square-zero");
  return sgn_pow(f.arity() - 1) * dend_bracket(pi, f);
}

DendCochain dend_pi(const Bimodule& bm, const Mat& T) {
  const Index mdim = bm.dim();
  DendCochain out(2, mdim);
  std::vector<Index> tuple;
  for_each_tuple(mdim, 2, [&](std::span<const Index> idx) {
    const Index row = flatten_tuple(idx, mdim);
    const Vec u = bm.basis(idx[0]);
    const Vec v = bm.basis(idx[1]);
    out.table(1).row(row) = bm.act_right(u, T * v).transpose();  // u prec v = u T(v)
    out.table(2).row(row) = bm.act_left(T * u, v).transpose();   // u succ v = T(u) v
  });
  return out;
}

DendCochain theta(const Bimodule& bm, const Cochain& P) {
  const Index n = P.degree();
  const Index mdim = bm.dim();
  if (P.module_dim() != mdim || P.alg_dim() != bm.algebra().dim())
    throw std::invalid_argument("theta: shape mismatch");
  DendCochain out(n + 1, mdim);
  const Rat s = sgn_pow(n + 1);
  for_each_tuple(mdim, n + 1, [&](std::span<const Index> idx) {
    const Index row = flatten_tuple(idx, mdim);
    // label 1: (-1)^{n+1} u_1 P(u_2, ..., u_{n+1})
    const Vec tail = P.value(std::span<const Index>(idx.data() + 1, static_cast<size_t>(n)));
    out.table(1).row(row) += (s * bm.act_right(bm.basis(idx[0]), tail)).transpose();
    // label n+1: P(u_1, ..., u_n) u_{n+1}
    const Vec head = P.value(std::span<const Index>(idx.data(), static_cast<size_t>(n)));
    out.table(n + 1).row(row) +=
        bm.act_left(head, bm.basis(idx[static_cast<size_t>(n)])).transpose();
  });
  return out;
}

// ---------------------------------------------------------------------------
// Map into the pre-Lie cochain space

PreLieCochain::PreLieCochain(Index degree, Index module_dim) : degree_(degree), module_dim_(module_dim) {
  if (degree < 0) throw std::invalid_argument("PreLieCochain: negative degree");
  table_ = Mat::Zero(binomial(module_dim, degree) * module_dim, module_dim);
}

Index PreLieCochain::row(std::span<const Index> tuple, Index last) const {
  return AltCochain::comb_rank(tuple, module_dim_) * module_dim_ + last;
}

PreLieCochain psi(const Bimodule& bm, const Cochain& f) {
  const Index n = f.degree();
  const Index mdim = bm.dim();
  PreLieCochain out(n, mdim);
  const AltCochain s = skew_symmetrize(f);
  std::vector<Index> tuple;
  for (Index rank = 0; rank < binomial(mdim, n); ++rank) {
    AltCochain::comb_unrank(rank, mdim, n, tuple);
    const Vec sv = s.value(tuple);
    for (Index v = 0; v < mdim; ++v) {
      const Vec fv = bm.basis(v);
      const Vec w = bm.act_left(sv, fv) - bm.act_right(fv, sv);
      out.table().row(out.row(tuple, v)) = w.transpose();
    }
  }
  return out;
}

}  // namespace rbop
