#pragma once

#include <cstddef>

namespace gltm {

// Upper tail P(X > x) of a chi-square variable with `dof` degrees of freedom.
// Regularized incomplete gamma: series below the a + 1 switch point,
// Lentz continued fraction above it. Absolute error below 1e-10.
double chi2_sf(double x, std::size_t dof);
double chi2_cdf(double x, std::size_t dof);
double chi2_pdf(double x, std::size_t dof);

}  // namespace gltm
