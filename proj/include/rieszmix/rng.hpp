#ifndef RIESZMIX_RNG_HPP
#define RIESZMIX_RNG_HPP

#include <cstdint>
#include <random>

#include "rieszmix/errors.hpp"

namespace rieszmix {

/// Reproducible substream keyed by (seed, stream index). Parallel Monte
/// Carlo gives each worker its own stream; results depend only on the
/// (seed, worker-count) pair, not on scheduling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::mt19937_64& engine() { return engine_; }

  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  double normal(double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }

  /// Gamma(shape, scale 1); shape 0 is the point mass at 0.
  double gamma(double shape) {
    if (shape < 0.0) throw DomainError("RngStream::gamma: negative shape");
    if (shape == 0.0) return 0.0;
    return std::gamma_distribution<double>(shape, 1.0)(engine_);
  }

  long poisson(double mean) {
    if (mean < 0.0) throw DomainError("RngStream::poisson: negative mean");
    if (mean == 0.0) return 0;
    return std::poisson_distribution<long>(mean)(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rieszmix

#endif  // RIESZMIX_RNG_HPP
