#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "gltm/numerics.hpp"
#include "gltm/sym_matrix.hpp"
#include "gltm/trees.hpp"

namespace gltm {

// Pair {i < j}; position is its rank in lexicographic order.
struct PairIndex {
  std::size_t i = 0;
  std::size_t j = 1;

  friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

std::size_t pair_count(std::size_t m);
std::size_t pair_position(PairIndex p, std::size_t m);
PairIndex pair_at(std::size_t position, std::size_t m);
// Sorts the two indices; throws DomainError if they coincide.
PairIndex make_pair_index(std::size_t a, std::size_t b);

// A^(2): every 2x2 minor, rows and columns ascending.
Matrix compound2(const Matrix& a);

// det(S_{I,J}) / (n(n-1)), unbiased for det(C_{I,J}) when S ~ W(n, C).
double minor_estimator(const SymMatrix& s, std::size_t n, PairIndex I, PairIndex J);

// Unordered minor (I, J) with pair_position(I) <= pair_position(J).
struct MinorIndex {
  PairIndex I;
  PairIndex J;

  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

std::size_t minor_count(std::size_t m);
// Canonical order: by position of I, then of J.
std::vector<MinorIndex> all_minors(std::size_t m);
// Orients (I, J) so that I <= J.
MinorIndex make_minor(PairIndex I, PairIndex J, std::size_t m);

enum class MinorCovarianceSource { standard, propagated };

struct MinorCovariance {
  Matrix values;
  std::vector<MinorIndex> index;
  std::size_t m = 0;
  std::size_t n = 0;
  MinorCovarianceSource source = MinorCovarianceSource::standard;
  std::vector<std::string> leaf_names;  // for labels only
};

// Single entry cov(det W_{I,J}, det W_{K,L}) for standard Wishart W_m(n, I).
double cov_w2_entry(MinorIndex a, MinorIndex b, std::size_t n);

// cov(W^(2)) over all unordered minors in canonical order.
MinorCovariance cov_W2(std::size_t m, std::size_t n);

// cov(S^(2)) for S ~ W(n, C) by propagating cov(W^(2)) through C^{1/2}.
MinorCovariance cov_S2(const SymMatrix& c, std::size_t n);

// cov of Q_{ij,kl} = det(S_{ij,kl}) / (n(n-1)) for the requested minors.
MinorCovariance cov_Q(const SymMatrix& c, std::size_t n, const std::vector<MinorIndex>& minors);
// Quartet ij|kl maps to rows {i,j}, columns {k,l} (matrix indices, ascending).
MinorCovariance cov_Q(const SymMatrix& c, std::size_t n, const QuartetSet& quartets);

// Matrix indices of quartet ij|kl as a minor of s.
MinorIndex quartet_minor(const SymMatrix& s, const Quartet& q);

// Symmetric PSD square root. Eigenvalues in [-1e-10 lambda_max, 0) are set
// to zero; anything lower throws NumericalError.
Matrix sym_sqrt(const Matrix& c);

// "12|34" style label of a minor using the given leaf names.
std::string minor_label(MinorIndex mi, const std::vector<std::string>& names);

// CSV with a header row and one labelled row per minor.
void write_csv(std::ostream& out, const MinorCovariance& cov);

}  // namespace gltm
