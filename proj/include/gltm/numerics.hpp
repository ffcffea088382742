#pragma once

#include <Eigen/Dense>

namespace gltm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// ad - bc. Every 2x2 minor in the library goes through here.
inline double determinant2(double a, double b, double c, double d) {
  return a * d - b * c;
}

// Lower Cholesky factor L with L L^T = a. Throws NumericalError when `a` is
// not symmetric positive definite.
Matrix cholesky(const Matrix& a);

struct SymmetricEigen {
  Vector values;   // ascending
  Matrix vectors;  // columns orthonormal; first nonzero component of each positive
};

SymmetricEigen eigh(const Matrix& a);

// Solves a x = b for SPD `a` through its Cholesky factor; never forms a^-1.
Vector solve_spd(const Matrix& a, const Vector& b);

// lambda_max / lambda_min; +infinity when lambda_min <= 0.
double condition_number_spd(const Matrix& a);

double max_abs(const Matrix& a);

}  // namespace gltm
