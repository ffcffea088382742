#pragma once

#include <cstddef>

#include "gltm/numerics.hpp"
#include "gltm/rng.hpp"
#include "gltm/sym_matrix.hpp"

namespace gltm {

// Draws from W_m(df, scale). Bartlett decomposition when df > m - 1,
// otherwise (integer df < m) the sum of df outer products of N(0, scale).
class WishartSampler {
 public:
  WishartSampler(double df, const Matrix& scale);

  Matrix draw(Rng& rng) const;
  double df() const { return df_; }
  std::size_t dim() const { return static_cast<std::size_t>(factor_.rows()); }

 private:
  double df_;
  Matrix factor_;  // F with F F^T = scale
};

// X ~ IW(df, scale) iff X^{-1} ~ W(df, scale^{-1}). Requires df > m - 1 and
// positive definite scale.
class InverseWishartSampler {
 public:
  InverseWishartSampler(double df, const Matrix& scale);

  Matrix draw(Rng& rng) const;

 private:
  WishartSampler wishart_;
};

// Factor F with F F^T = c: Cholesky, or the symmetric square root when c is
// only semidefinite.
Matrix covariance_factor(const Matrix& c);

// n x m matrix of independent N(0, c) rows.
Matrix sample_mvn(const SymMatrix& c, std::size_t n, Rng& rng);
SymMatrix sample_wishart(const SymMatrix& c, std::size_t n, Rng& rng);
SymMatrix sample_inverse_wishart(double df, const SymMatrix& scale, Rng& rng);

}  // namespace gltm
