#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gltm/geometry.hpp"
#include "gltm/numerics.hpp"
#include "gltm/rng.hpp"
#include "gltm/trees.hpp"

namespace gltm {

// n x m observations (columns in tree leaf order) from the rooted recursion
// Z_v = rho_e Z_u + eps_v, var(eps_v) = 1 - rho_e^2, rooted at leaf 0 with
// unit variance. Requires every |rho_e| < 1.
Matrix gen_tree_data(const Tree& t, const EdgeWeights& w, std::size_t n, Rng& rng);

struct WeightLaw {
  enum class Kind { uniform, fixed, explicit_weights };
  Kind kind = Kind::uniform;
  double lo = 0.5;
  double hi = 1.0;
  double value = 0.7;
  std::vector<double> weights;

  static WeightLaw uniform(double lo, double hi);
  static WeightLaw fixed(double value);
  static WeightLaw explicit_weights(std::vector<double> weights);

  EdgeWeights draw(const Tree& t, Rng& rng) const;
  std::string describe() const;
};

enum class QuartetSelection { single, set, defining, testing };

struct ExperimentConfig {
  explicit ExperimentConfig(Tree t) : tree(std::move(t)) {}

  Tree tree;
  WeightLaw weights = WeightLaw::uniform(0.5, 1.0);
  std::size_t n = 60;
  std::size_t reps = 2000;
  std::uint64_t seed = 0;
  QuartetSelection selection = QuartetSelection::defining;
  QuartetSet quartets;  // used by single and set
  double alpha = 0.05;
  std::size_t bins = 40;
  std::size_t workers = 0;
};

QuartetSet selected_quartets(const ExperimentConfig& cfg);
std::string to_string(QuartetSelection selection);

struct Histogram {
  std::vector<double> edges;         // bins + 1 edges over [0, max statistic]
  std::vector<std::size_t> counts;
  std::vector<double> density_at_mid;  // chi-square(dof) density at bin centres
  std::size_t dof = 1;
  double ks = 0.0;
};

Histogram make_histogram(const std::vector<double>& values, std::size_t dof, std::size_t bins);

// sup_x |F_n(x) - F(x)| against the chi-square(dof) CDF.
double ks_distance_chi2(std::vector<double> values, std::size_t dof);

struct ExperimentResult {
  QuartetSet quartets;
  std::vector<double> edge_weights;
  std::vector<double> statistics;  // replicate order
  std::vector<double> p_values;
  std::size_t failures = 0;        // replicates with a near-singular covariance
  Histogram histogram;
  double ks = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double rejection_rate = 0.0;  // at cfg.alpha
};

// Edge weights are drawn once from Rng(seed).substream(0); replicate r uses
// substream(r + 1) for its data.
ExperimentResult null_distribution_experiment(const ExperimentConfig& cfg);
// As above, but at least one selected quartet must not be displayed.
ExperimentResult power_experiment(const ExperimentConfig& cfg);

struct RecoveryResult {
  std::size_t successes = 0;
  std::size_t reps = 0;
  double fraction = 0.0;
};

// Every edge weight equal to rho; a replicate succeeds when the exploratory
// candidate at level alpha is t.
RecoveryResult recovery_experiment(const Tree& t, double rho, std::size_t n, std::size_t reps,
                                   double alpha, std::uint64_t seed, std::size_t workers = 0);

struct VolumeEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t draws = 0;
  std::size_t kept = 0;      // draws inside the elliptope (all draws without the filter)
  std::size_t accepted = 0;  // kept draws inside the tripod model
  bool psd_filter = true;
};

// Uniform draws of (rho12, rho13, rho23) in [-1, 1]^3; among valid correlation
// matrices, the fraction lying in the tripod model. Requires draws >= 10^4.
VolumeEstimate volume_ratio_tripod(std::size_t draws, std::uint64_t seed, bool psd_filter = true,
                                   std::size_t workers = 0);

}  // namespace gltm
