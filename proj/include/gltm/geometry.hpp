#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gltm/sym_matrix.hpp"
#include "gltm/trees.hpp"

namespace gltm {

// First violated constraint found by a membership test.
struct Witness {
  std::vector<std::string> leaves;  // labels in the order the constraint reads them
  std::string constraint;           // e.g. "four_point", "triangle", "triple_sign"
  double slack = 0.0;               // amount by which the constraint fails; > tolerance
};

struct MembershipVerdict {
  bool member = true;
  std::optional<Witness> witness;
  double tolerance = 0.0;
  std::vector<std::string> flags;  // e.g. "zero_entries", "not_psd"
};

// One weight per edge of a tree, aligned with tree.edges().
class EdgeWeights {
 public:
  EdgeWeights(const Tree& t, std::vector<double> values);
  static EdgeWeights constant(const Tree& t, double value);

  double operator[](std::size_t edge) const { return values_.at(edge); }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

constexpr double kDefaultTolerance = 1e-9;

// rho_ij = product of edge correlations along the path; leaves in tree order.
SymMatrix corr_from_tree(const Tree& t, const EdgeWeights& w);

// d_ij = -log rho_ij. Throws DomainError unless every rho_ij > 0.
SymMatrix dist_from_corr(const SymMatrix& r);
SymMatrix corr_from_dist(const SymMatrix& d);

// Four-point condition over all 4-subsets, then the triangle inequality.
MembershipVerdict is_tree_metric(const SymMatrix& d, double tol = kDefaultTolerance);
MembershipVerdict is_tree_metric_for(const SymMatrix& d, const Tree& t,
                                     double tol = kDefaultTolerance);

// Phylogenetic orange of all trees on the variables (non-negative input).
MembershipVerdict in_orange(const SymMatrix& r, double tol = kDefaultTolerance);
// Phylogenetic orange of a fixed tree.
MembershipVerdict in_orange_of(const SymMatrix& r, const Tree& t,
                               double tol = kDefaultTolerance);
// Latent tree model of t: |r| in the orange of t and every triple product >= 0.
MembershipVerdict in_tree_model(const SymMatrix& r, const Tree& t,
                                double tol = kDefaultTolerance);

enum class CompatibilityMode { full, triples_only };

// Tree-compatibility of a covariance or correlation matrix: the product
// (s_kk s_ij - s_ik s_jk)(s_jj s_ik - s_ij s_jk)(s_ii s_jk - s_ij s_ik) >= 0
// for all triples, plus (mode full) the orange conditions on |rho|.
// Evaluated on the correlation rescaling.
MembershipVerdict tree_compatible(const SymMatrix& s, double tol = kDefaultTolerance,
                                  CompatibilityMode mode = CompatibilityMode::full);
// Compatibility with a fixed tree: the triple products plus, for every
// quartet ij|kl of t, s_ik s_jl = s_il s_jk and s_ik s_jl / (s_ij s_kl) <= 1,
// both evaluated in cross-product form.
MembershipVerdict tree_compatible_with(const SymMatrix& s, const Tree& t,
                                       double tol = kDefaultTolerance);

struct SignCanonicalForm {
  std::vector<int> signs;  // D, with signs[0] = +1
  SymMatrix absolute;      // D R D, equal to |R|
};

// D_ii = sign(rho_1i). Throws DomainError on zero entries or when some triple
// product is negative (not sign-canonicalizable).
SignCanonicalForm sign_canonicalize(const SymMatrix& r);

// Classifies every 4-subset by the strictly largest of the three products
// |rho_ij||rho_kl| (margin > tol), joins by neighbour joining on -log|rho|,
// contracts every edge with an induced quartet not resolved to its split, and
// checks that the result resolves every resolved quartet. Throws DomainError if the quartets are not
// tree-like or none is resolved.
Tree reconstruct_tree(const SymMatrix& r, double tol = kDefaultTolerance);

// Indices of t's leaves in s, in tree leaf order. Throws DomainError unless
// s names exactly t's leaves.
std::vector<std::size_t> align_leaves(const SymMatrix& s, const Tree& t);

}  // namespace gltm
