#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gltm/numerics.hpp"

namespace gltm {

enum class MatrixRole { distance, correlation, covariance, scatter };

std::string_view to_string(MatrixRole role);

// Dense symmetric matrix over named variables. The role fixes the invariants
// checked on construction:
//   distance     zero diagonal, non-negative entries
//   correlation  unit diagonal, entries in [-1, 1]
//   covariance   positive semidefinite (eigenvalues >= -1e-10 * lambda_max)
//   scatter      as covariance
// Entries are symmetrized after the symmetry check. Violations throw
// DomainError, except a failed PSD check which throws NumericalError.
class SymMatrix {
 public:
  SymMatrix(Matrix values, MatrixRole role, std::vector<std::string> leaf_names = {});

  std::size_t dim() const { return static_cast<std::size_t>(values_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return values_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Matrix& values() const { return values_; }
  MatrixRole role() const { return role_; }
  const std::vector<std::string>& leaf_names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws DomainError

  // Same variables in the order given by `names`.
  SymMatrix reordered(const std::vector<std::string>& names) const;

 private:
  Matrix values_;
  MatrixRole role_;
  std::vector<std::string> names_;
};

// D^{-1/2} S D^{-1/2}. Throws DomainError on a non-positive variance.
SymMatrix correlation_of(const SymMatrix& s);

bool is_psd(const Matrix& a, double relative_tol = 1e-10);

}  // namespace gltm
