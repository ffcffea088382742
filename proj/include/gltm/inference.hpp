#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gltm/numerics.hpp"
#include "gltm/sym_matrix.hpp"
#include "gltm/trees.hpp"

namespace gltm {

struct TestReport {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
  QuartetSet quartets;
  std::string covariance_mode = "proxy";
  double condition_number = 1.0;
  std::size_t n = 0;
  std::vector<std::string> warnings;
};

// Scatter matrix and effective sample size of an observation matrix
// (rows = observations). Centering costs one degree of freedom.
struct SampleScatter {
  SymMatrix scatter;
  std::size_t n;
};
SampleScatter scatter_from_data(const Matrix& x, std::vector<std::string> names = {},
                                bool center = true);

// Accepts a scatter matrix S or a sample covariance S / n.
// T = Q^T Sigma~^{-1} Q with Q_{ij,kl} = det(S_{ij,kl}) / (n(n-1)) and the
// proxy covariance Sigma~ built from S / n. Throws NumericalError when
// cond(Sigma~) > 1e12.
TestReport tetrad_statistic(const SymMatrix& s, std::size_t n, const QuartetSet& quartets);
TestReport quartet_test(const SymMatrix& s, std::size_t n, const Quartet& q);
TestReport confirmatory_test(const SymMatrix& s, std::size_t n, const Tree& t);

struct ExploratoryEntry {
  Tree tree;
  TestReport report;
};

struct ExploratoryReport {
  std::vector<ExploratoryEntry> ranked;  // descending p-value, ties in enumeration order
  double alpha = 0.05;
  double bonferroni_alpha = 0.05;
  std::vector<std::size_t> surviving;    // indices into ranked
  std::optional<Tree> candidate;         // top-ranked tree if it survives
};

// Tests every binary tree on the variables through its minimal determining
// quartets (dof m - 3) at level alpha / #trees.
ExploratoryReport exploratory_scan(const SymMatrix& s, std::size_t n, double alpha = 0.05,
                                   std::size_t max_leaves = 7);

struct ScreenEntry {
  std::array<std::string, 4> leaves;
  std::array<TestReport, 3> topologies;  // ij|kl, ik|jl, il|jk
  std::optional<Quartet> resolved;       // the unique non-rejected topology
};

std::vector<ScreenEntry> quartet_screen(const SymMatrix& s, std::size_t n, double alpha = 0.05);

enum class BayesMode { triples, quartet_full };

struct BayesOptions {
  std::size_t draws = 10000;
  std::uint64_t seed = 0;
  BayesMode mode = BayesMode::triples;
  std::optional<Quartet> quartet;                   // required for quartet_full
  std::optional<std::array<std::string, 3>> triple;  // triples mode: one triple instead of all
  std::size_t workers = 0;
};

struct BayesReport {
  double probability = 0.0;
  std::size_t draws = 0;
  std::size_t satisfied = 0;
  std::uint64_t seed = 0;
  BayesMode mode = BayesMode::triples;
  std::size_t prior_df = 0;
  std::string prior_scale = "identity";
  std::optional<Quartet> quartet;
};

// Posterior C | X ~ IW(m + n, I + S); each draw is rescaled to a correlation
// and checked against the triple-product constraints (and, in quartet_full
// mode, the two tetrad ratio constraints of the quartet). Draw l uses
// Rng(seed).substream(l).
BayesReport bayes_compatibility(const SymMatrix& s, std::size_t n, const BayesOptions& options);

std::string to_string(BayesMode mode);
BayesMode parse_bayes_mode(const std::string& text);

}  // namespace gltm
