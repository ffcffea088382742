#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace gltm {

// Counter-based generator (Philox4x32-10). Output k of stream s under seed
// `seed` is a pure function of (seed, s, k), so results never depend on the
// order in which parallel workers consume their streams.
//
// Substreams: `substream(i)` of a root stream (stream id 0) gets the id
// ((0 + 1) << 32) | i, so ids for i < 2^32 are distinct from each other and
// from the root.
class Rng {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint32_t kAlgorithmVersion = 1;  // philox4x32-10

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  Rng substream(std::uint64_t index) const;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Uniform on the open interval (0, 1), 53 bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Standard normal, Marsaglia polar method.
  double normal();
  // Gamma(shape, 1), Marsaglia-Tsang.
  double gamma(double shape);
  double chi_square(double dof) { return 2.0 * gamma(0.5 * dof); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t position() const { return position_; }

  // Raw block function, exposed for known-answer tests.
  static std::array<std::uint32_t, 4> philox(std::array<std::uint32_t, 4> counter,
                                             std::array<std::uint32_t, 2> key);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t position_ = 0;
  std::array<std::uint64_t, 2> block_{};
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gltm
