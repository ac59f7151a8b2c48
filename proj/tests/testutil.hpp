#pragma once

#include "rbop/cochain.hpp"
#include "rbop/problem.hpp"

#include <random>

namespace rbtest {

using namespace rbop;

// Random coefficients come from a small fixed pool with a fixed seed so
// every run is reproducible.
inline const std::vector<Rat>& coeff_pool() {
  static const std::vector<Rat> pool = {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(2)};
  return pool;
}

inline Rat rand_rat(std::mt19937& rng) {
  std::uniform_int_distribution<size_t> pick(0, coeff_pool().size() - 1);
  return coeff_pool()[pick(rng)];
}

inline Vec rand_vec(std::mt19937& rng, Index n) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = rand_rat(rng);
  return v;
}

inline Mat rand_mat(std::mt19937& rng, Index rows, Index cols) {
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = rand_rat(rng);
  return m;
}

inline Cochain rand_cochain(std::mt19937& rng, Index degree, Index module_dim, Index alg_dim) {
  Cochain c(degree, module_dim, alg_dim);
  c.table() = rand_mat(rng, c.table().rows(), c.table().cols());
  return c;
}

inline Algebra poly3() { return fixture("poly3_R").algebra; }
inline Mat poly3_R() { return *fixture("poly3_R").op; }
inline Mat poly3_D() { return *fixture("poly3_D").op; }
inline Algebra dual2() { return fixture("dual2").algebra; }
inline Algebra abelian2() { return fixture("abelian2").algebra; }
inline Algebra ut2() { return fixture("ut2").algebra; }

// An O-operator on ut2 with the adjoint bimodule: E22 -> E12, the rest -> 0.
inline Mat ut2_shift() {
  Mat t = Mat::Zero(3, 3);
  t(1, 2) = Rat(1);
  return t;
}

// Right averaging operator on dual2: 1 -> 1, x -> 0.
inline Mat dual2_projection() {
  Mat p = Mat::Zero(2, 2);
  p(0, 0) = Rat(1);
  return p;
}

}  // namespace rbtest
